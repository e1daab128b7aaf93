// Command-line front end: validation, cohomology, family reduction, Morse
// functions and Coxeter complexes over JSON inputs.

#include "posetcoho/coxeter.hpp"
#include "posetcoho/morse.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

using namespace posetcoho;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitSemantic = 1;
constexpr int kExitParse = 2;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SemanticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::size_t cell_cap() {
    if (const char* env = std::getenv("POSET_COHO_MAX_CELLS")) return std::stoul(env);
    return 100000;
}

GradedPoset load_poset(const nlohmann::json& j, bool shift_degrees) {
    try {
        if (j.contains("facets")) return complex_from_json(j);
        return GradedPoset::from_json(j, shift_degrees);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    // unreachable
}

ordered_json issues_json(const ValidationReport& rep) {
    ordered_json out = ordered_json::array();
    for (const auto& i : rep.issues) out.push_back({{"rule", i.rule}, {"detail", i.detail}});
    return out;
}

ordered_json group_json(const FGAbGroup& g) {
    ordered_json t = ordered_json::array();
    for (const Int& x : g.torsion()) t.push_back(x.str());
    return {{"free_rank", g.free_rank()}, {"torsion", t}, {"pretty", g.to_string()}};
}

ordered_json cohomology_json(const CohomologyResult& coh) {
    ordered_json out = ordered_json::array();
    for (const auto& lvl : coh.h) {
        ordered_json t = ordered_json::array();
        for (const Int& x : lvl.torsion) t.push_back(x.str());
        out.push_back({{"betti", lvl.betti}, {"torsion", t}});
    }
    return out;
}

void emit(const ordered_json& report, bool pretty) { std::cout << report.dump(pretty ? 2 : -1) << "\n"; }

void enforce_cap(const GradedPoset& poset) {
    if (poset.size() > cell_cap()) throw SemanticError("input exceeds the cell cap; raise POSET_COHO_MAX_CELLS");
}

int cmd_validate(const std::string& path, const std::string& functor_path, bool shift, bool pretty) {
    nlohmann::json j = load_json(path);
    GradedPoset poset = load_poset(j, shift);
    enforce_cap(poset);
    ordered_json report;
    report["input"] = path;
    report["objects"] = poset.size();
    ValidationReport rep = poset.validate();
    report["poset_valid"] = rep.ok();
    report["issues"] = issues_json(rep);
    bool ok = rep.ok();
    if (j.contains("facets") || rep.ok()) {
        CertifyOutcome cert = certify_simplex_like(poset);
        report["simplex_like"] = cert.ok;
        if (!cert.ok) report["simplex_like_reason"] = cert.reason;
        if (j.contains("facets") && !cert.ok) ok = false;
    }
    if (!functor_path.empty()) {
        CoefFunctor f = CoefFunctor::from_json(poset, load_json(functor_path));
        ValidationReport frep = f.validate();
        report["functor_valid"] = frep.ok();
        report["functor_issues"] = issues_json(frep);
        ok = ok && frep.ok();
    }
    emit(report, pretty);
    return ok ? 0 : kExitSemantic;
}

int cmd_cohomology(const std::string& path, std::string method, const std::string& functor_path, bool shift,
                   bool pretty) {
    GradedPoset poset = load_poset(load_json(path), shift);
    enforce_cap(poset);
    ValidationReport rep = poset.validate();
    if (!rep.ok()) throw SemanticError("invalid poset: " + rep.issues[0].detail);
    ordered_json report;
    report["input"] = path;

    if (!functor_path.empty()) {
        CoefFunctor f = CoefFunctor::from_json(poset, load_json(functor_path));
        ValidationReport frep = f.validate();
        if (!frep.ok()) throw SemanticError("invalid functor: " + frep.issues[0].detail);
        HigherLimits hl = higher_limits(f, poset.max_degree());
        ordered_json lims = ordered_json::array();
        for (std::size_t i = 0; i < hl.lim.size(); ++i) {
            ordered_json entry = group_json(hl.lim[i]);
            entry["method"] = hl.method[i];
            lims.push_back(entry);
        }
        report["derived_limits"] = lims;
        emit(report, pretty);
        return 0;
    }

    CertifyOutcome cert = certify_simplex_like(poset);
    if (method == "auto") method = cert.ok ? "simplicial" : "oracle";
    report["method"] = method;
    CohomologyResult coh;
    if (method == "oracle") {
        std::vector<FGAbGroup> lims = higher_limits_oracle(CoefFunctor::constant_z(poset), poset.max_degree());
        for (const FGAbGroup& g : lims) {
            CohomologyResult::Level lvl;
            lvl.betti = g.free_rank();
            lvl.torsion = g.torsion();
            coh.h.push_back(lvl);
        }
    } else {
        if (!cert.ok) throw SemanticError("poset is not simplex-like: " + cert.reason);
        if (method == "simplicial") {
            coh = cohomology(simplicial_differential(poset, cert.cert));
        } else if (method == "sequence") {
            LocalCoveringFamily fam = local_family(poset, cert.cert);
            coh = cohomology(full_complex(FunctorSequence::build(poset, fam)));
        } else {
            throw ParseError("unknown method: " + method);
        }
    }
    report["cohomology"] = cohomology_json(coh);
    report["pretty"] = coh.to_string();
    emit(report, pretty);
    return 0;
}

ordered_json reduce_pipeline(const GradedPoset& poset, const GlobalCoveringFamily& K) {
    CertifyOutcome cert = certify_simplex_like(poset);
    if (!cert.ok) throw SemanticError("poset is not simplex-like: " + cert.reason);
    LocalCoveringFamily fam = local_family(poset, cert.cert);
    std::vector<std::vector<Int>> r = r_values(poset);
    ValidationReport adequate = check_adequate(poset, fam, r);
    if (!adequate.ok()) throw SemanticError("local family inadequate: " + adequate.issues[0].detail);
    FunctorSequence seq = FunctorSequence::build(poset, fam);
    FreeCochainComplex complex = full_complex(seq);

    ordered_json report;
    ValidationReport global = check_global(complex, K);
    report["family_valid"] = global.ok();
    report["family_issues"] = issues_json(global);
    if (!global.ok()) return report;

    std::vector<Int> bk = family_betti(poset, r, K);
    ordered_json bkj = ordered_json::array();
    for (const Int& b : bk) bkj.push_back(b.str());
    report["family_betti"] = bkj;

    ReducedComplex reduced = reduced_complex(complex, K);
    ordered_json omegas = ordered_json::array();
    for (const IntMat& m : reduced.complex.d) {
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).str());
            rows.push_back(row);
        }
        omegas.push_back(rows);
    }
    report["reduced_differentials"] = omegas;

    CohomologyResult full = cohomology(complex);
    CohomologyResult red = cohomology(reduced.complex);
    report["full_cohomology"] = cohomology_json(full);
    report["reduced_cohomology"] = cohomology_json(red);
    report["pretty"] = red.to_string();
    report["cohomology_agrees"] = full == red;
    report["inequalities"] = issues_json(morse_inequalities(full, bk));
    return report;
}

int cmd_reduce(const std::string& path, const std::string& family_path, bool shift, bool pretty) {
    GradedPoset poset = load_poset(load_json(path), shift);
    enforce_cap(poset);
    GlobalCoveringFamily K = GlobalCoveringFamily::from_json(poset, load_json(family_path));
    ordered_json report = reduce_pipeline(poset, K);
    report["input"] = path;
    emit(report, pretty);
    return report["family_valid"].get<bool>() ? 0 : kExitSemantic;
}

int cmd_morse(const std::string& path, bool pretty) {
    MorseFunction mf = MorseFunction::from_json(load_json(path));
    enforce_cap(mf.poset);
    ordered_json report;
    report["input"] = path;
    ValidationReport rep = validate_morse(mf);
    report["morse_valid"] = rep.ok();
    report["issues"] = issues_json(rep);
    if (!rep.ok()) {
        emit(report, pretty);
        return kExitSemantic;
    }
    MorseClassification cls = classify(mf);
    ordered_json critical = ordered_json::array();
    for (const auto& level : cls.C) {
        ordered_json ids = ordered_json::array();
        for (int p : level) ids.push_back(mf.poset.id(p));
        critical.push_back(ids);
    }
    report["critical"] = critical;
    ordered_json pipeline = reduce_pipeline(mf.poset, family_from_morse(cls));
    for (auto& [key, value] : pipeline.items()) report[key] = value;
    emit(report, pretty);
    return report["family_valid"].get<bool>() ? 0 : kExitSemantic;
}

int cmd_coxeter(const std::string& path, bool pretty) {
    CoxeterSystem sys = CoxeterSystem::from_json(load_json(path));
    ValidationReport rep = sys.validate();
    if (!rep.ok()) throw SemanticError("invalid Coxeter system: " + rep.issues[0].detail);
    CoxeterGroup g = enumerate_group(sys, cell_cap());
    CoxeterComplex cx = coxeter_complex(sys, g);
    enforce_cap(cx.poset);
    ordered_json report;
    report["input"] = path;
    report["group_order"] = g.size();
    report["objects"] = cx.poset.size();
    ordered_json pipeline = reduce_pipeline(cx.poset, coxeter_family(g, cx));
    for (auto& [key, value] : pipeline.items()) report[key] = value;
    emit(report, pretty);
    return report["family_valid"].get<bool>() ? 0 : kExitSemantic;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integral cohomology of finite graded posets via covering families"};
    app.require_subcommand(1);
    bool pretty = false;
    bool json = true;
    app.add_flag("--pretty", pretty, "indented JSON output");
    app.add_flag("--json", json, "compact JSON output (default)");

    std::string path, functor_path, family_path, method = "auto";
    bool shift = false;

    CLI::App* validate = app.add_subcommand("validate", "check a poset, complex or functor file");
    validate->add_option("path", path)->required();
    validate->add_option("--coefficients", functor_path, "functor file to validate against the poset");
    validate->add_flag("--shift-degrees", shift, "translate degrees so the minimum is zero");

    CLI::App* coh = app.add_subcommand("cohomology", "integral cohomology / derived limits");
    coh->add_option("path", path)->required();
    coh->add_option("--method", method)->check(CLI::IsMember({"auto", "sequence", "simplicial", "oracle"}));
    coh->add_option("--coefficients", functor_path, "coefficient functor file");
    coh->add_flag("--shift-degrees", shift);

    CLI::App* reduce = app.add_subcommand("reduce", "check a global covering family and reduce");
    reduce->add_option("path", path)->required();
    reduce->add_option("family", family_path)->required();
    reduce->add_flag("--shift-degrees", shift);

    CLI::App* morse = app.add_subcommand("morse", "discrete Morse function front end");
    morse->add_option("path", path)->required();

    CLI::App* coxeter = app.add_subcommand("coxeter", "Coxeter complex front end");
    coxeter->add_option("path", path)->required();

    CLI11_PARSE(app, argc, argv);
    try {
        if (validate->parsed()) return cmd_validate(path, functor_path, shift, pretty);
        if (coh->parsed()) return cmd_cohomology(path, method, functor_path, shift, pretty);
        if (reduce->parsed()) return cmd_reduce(path, family_path, shift, pretty);
        if (morse->parsed()) return cmd_morse(path, pretty);
        if (coxeter->parsed()) return cmd_coxeter(path, pretty);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    }
    return 0;
}
