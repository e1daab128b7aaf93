#include "posetcoho/global.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

namespace posetcoho {

namespace {

std::vector<int> family_level(const GlobalCoveringFamily& fam, std::size_t n) {
    return n < fam.K.size() ? fam.K[n] : std::vector<int>{};
}

std::vector<std::size_t> member_positions(const FreeCochainComplex& complex, std::size_t n,
                                          const std::vector<int>& objects, bool complement) {
    std::set<int> chosen(objects.begin(), objects.end());
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < complex.labels[n].size(); ++i)
        if (chosen.count(complex.labels[n][i].first) != complement) idx.push_back(i);
    return idx;
}

std::string vector_string(const IntMat& m, std::size_t col) {
    std::string s = "(";
    for (std::size_t r = 0; r < m.rows(); ++r) s += (r ? ", " : "") + m(r, col).str();
    return s + ")";
}

}  // namespace

GlobalCoveringFamily GlobalCoveringFamily::from_json(const GradedPoset& poset, const nlohmann::json& j) {
    GlobalCoveringFamily fam;
    fam.K.assign(static_cast<std::size_t>(poset.max_degree()) + 1, {});
    for (const auto& [key, ids] : j.at("K").items()) {
        std::size_t n = std::stoul(key);
        if (n >= fam.K.size()) throw std::invalid_argument("family degree beyond the poset's top degree");
        for (const auto& id : ids) fam.K[n].push_back(poset.index(id.get<std::string>()));
        std::sort(fam.K[n].begin(), fam.K[n].end());
    }
    return fam;
}

nlohmann::json GlobalCoveringFamily::to_json(const GradedPoset& poset) const {
    nlohmann::json k = nlohmann::json::object();
    for (std::size_t n = 0; n < K.size(); ++n) {
        nlohmann::json ids = nlohmann::json::array();
        for (int p : K[n]) ids.push_back(poset.id(p));
        k[std::to_string(n)] = ids;
    }
    return {{"K", k}};
}

ValidationReport check_global(const FreeCochainComplex& complex, const GlobalCoveringFamily& fam) {
    ValidationReport rep;
    const std::size_t levels = complex.ranks.size();
    for (std::size_t n = 0; n < levels; ++n) {
        std::vector<int> k = family_level(fam, n);
        IntMat emb = level_limit_embedding(complex, static_cast<int>(n));
        IntMat restricted = emb.rows_subset(member_positions(complex, n, k, false));
        if (rank_of(restricted) < emb.cols()) {
            IntMat ker = kernel_basis(restricted);
            rep.add("limit-restriction-injective",
                    "degree " + std::to_string(n) + ": limit element " + vector_string(emb * ker, 0) +
                        " vanishes on the family blocks");
        }
    }
    for (std::size_t n = 1; n < levels; ++n) {
        IntMat composite = complex.d[n - 1]
                               .rows_subset(member_positions(complex, n, family_level(fam, n), false))
                               .cols_subset(member_positions(complex, n - 1, family_level(fam, n - 1), true));
        for (const Int& f : invariant_factors(composite))
            if (f > 1)
                rep.add("composite-pure",
                        "degree " + std::to_string(n) + ": invariant factor " + f.str() + " in the composite map");
    }
    return rep;
}

std::vector<Int> family_betti(const GradedPoset& poset, const std::vector<std::vector<Int>>& r,
                              const GlobalCoveringFamily& fam) {
    const int top = poset.max_degree();
    std::vector<Int> b;
    Int b0 = 0;
    for (int p : family_level(fam, 0)) b0 += r[p][0];
    b.push_back(b0);
    for (int n = 1; n <= top; ++n) {
        Int bn = 0;
        for (int p : family_level(fam, static_cast<std::size_t>(n - 1))) bn += r[p][static_cast<std::size_t>(n - 1)];
        for (int p : poset.objects_of_degree(n - 1)) bn -= r[p][static_cast<std::size_t>(n - 1)];
        for (int p : family_level(fam, static_cast<std::size_t>(n))) bn += r[p][static_cast<std::size_t>(n)];
        b.push_back(bn);
    }
    return b;
}

ReducedComplex reduced_complex(const FreeCochainComplex& complex, const GlobalCoveringFamily& fam) {
    const std::size_t levels = complex.ranks.size();
    ReducedComplex out;
    std::vector<std::vector<std::size_t>> kpos(levels);
    for (std::size_t n = 0; n < levels; ++n) kpos[n] = member_positions(complex, n, family_level(fam, n), false);

    for (std::size_t n = 0; n < levels; ++n) {
        const std::size_t k = kpos[n].size();
        IntMat incoming =
            n == 0 ? IntMat(k, 0)
                   : complex.d[n - 1].rows_subset(kpos[n]).cols_subset(
                         member_positions(complex, n - 1, family_level(fam, n - 1), true));
        SmithForm s = smith(incoming);
        for (const Int& f : s.diag)
            if (f != 1) throw std::invalid_argument("family composite is not pure; run the checker first");
        std::vector<std::size_t> tail;
        for (std::size_t i = s.rank; i < k; ++i) tail.push_back(i);
        out.projection.push_back(s.u.rows_subset(tail));
        out.section.push_back(inverse_unimodular(s.u).cols_subset(tail));
        out.complex.ranks.push_back(k - s.rank);
        out.complex.labels.emplace_back();
    }
    for (std::size_t n = 0; n + 1 < levels; ++n) {
        IntMat kk = complex.d[n].rows_subset(kpos[n + 1]).cols_subset(kpos[n]);
        out.complex.d.push_back(out.projection[n + 1] * kk * out.section[n]);
    }
    for (std::size_t n = 0; n + 1 < out.complex.d.size(); ++n)
        if (!(out.complex.d[n + 1] * out.complex.d[n]).is_zero())
            throw std::logic_error("reduced differential does not square to zero");
    return out;
}

ValidationReport morse_inequalities(const CohomologyResult& coh, const std::vector<Int>& bk) {
    ValidationReport rep;
    Int alt_b = 0, alt_bk = 0;
    for (std::size_t n = 0; n < coh.h.size(); ++n) {
        Int b = coh.h[n].betti;
        Int k = n < bk.size() ? bk[n] : Int(0);
        if (b > k) rep.add("weak-inequality", "degree " + std::to_string(n) + ": " + b.str() + " > " + k.str());
        alt_b = b - alt_b;
        alt_bk = k - alt_bk;
        if (alt_b > alt_bk)
            rep.add("strong-inequality",
                    "degree " + std::to_string(n) + ": alternating sum " + alt_b.str() + " > " + alt_bk.str());
    }
    return rep;
}

}  // namespace posetcoho
