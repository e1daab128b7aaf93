#include "posetcoho/morse.hpp"

#include "posetcoho/simplex.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>

namespace posetcoho {

namespace {

struct Counts {
    int cofaces = 0;      // strictly larger simplices one dimension up with f(q) <= f(p)
    int faces = 0;        // one dimension down with f(p) <= f(q)
    int coface_witness = -1;
    int face_witness = -1;
};

Counts count_pairs(const MorseFunction& mf, int p) {
    Counts c;
    const GradedPoset& poset = mf.poset;
    const int n = poset.degree(p);
    for (std::size_t q = 0; q < poset.size(); ++q) {
        int qi = static_cast<int>(q);
        if (poset.degree(qi) == n + 1 && poset.leq(qi, p) && mf.f[q] <= mf.f[p]) {
            ++c.cofaces;
            c.coface_witness = qi;
        }
        if (n > 0 && poset.degree(qi) == n - 1 && poset.leq(p, qi) && mf.f[p] <= mf.f[q]) {
            ++c.faces;
            c.face_witness = qi;
        }
    }
    return c;
}

}  // namespace

MorseFunction MorseFunction::from_json(const nlohmann::json& j) {
    MorseFunction mf;
    mf.poset = complex_from_json(j);
    mf.f.resize(mf.poset.size());
    const nlohmann::json& values = j.at("f");
    for (std::size_t p = 0; p < mf.poset.size(); ++p) {
        const std::string& id = mf.poset.id(static_cast<int>(p));
        if (!values.contains(id)) throw std::invalid_argument("missing value for face: " + id);
        const nlohmann::json& v = values.at(id);
        if (v.is_string())
            mf.f[p] = Rational(v.get<std::string>());
        else if (v.is_number_integer())
            mf.f[p] = Rational(v.get<long long>());
        else if (v.is_number_float() && v.get<double>() == std::floor(v.get<double>()))
            mf.f[p] = Rational(static_cast<long long>(v.get<double>()));
        else
            throw std::invalid_argument("value for " + id + " must be an integer or a rational string like \"3/2\"");
    }
    return mf;
}

ValidationReport validate_morse(const MorseFunction& mf) {
    ValidationReport rep;
    for (std::size_t p = 0; p < mf.poset.size(); ++p) {
        Counts c = count_pairs(mf, static_cast<int>(p));
        if (c.cofaces > 1)
            rep.add("too-many-cofaces", mf.poset.id(static_cast<int>(p)) + " has " + std::to_string(c.cofaces) +
                                            " cofaces with no larger value");
        if (c.faces > 1)
            rep.add("too-many-faces", mf.poset.id(static_cast<int>(p)) + " has " + std::to_string(c.faces) +
                                          " faces with no smaller value");
    }
    return rep;
}

MorseClassification classify(const MorseFunction& mf) {
    ValidationReport rep = validate_morse(mf);
    if (!rep.ok()) throw std::invalid_argument("not a Morse function: " + rep.issues[0].detail);
    const GradedPoset& poset = mf.poset;
    const int top = poset.max_degree();
    MorseClassification cls;
    cls.C.resize(static_cast<std::size_t>(top) + 1);
    cls.D.resize(static_cast<std::size_t>(top) + 1);
    cls.E.resize(static_cast<std::size_t>(top) + 1);
    for (std::size_t p = 0; p < poset.size(); ++p) {
        int pi = static_cast<int>(p);
        const std::size_t n = static_cast<std::size_t>(poset.degree(pi));
        Counts c = count_pairs(mf, pi);
        if (c.cofaces == 1 && c.faces == 1)
            throw std::logic_error("simplex paired in both directions: " + poset.id(pi));
        if (c.cofaces == 0 && c.faces == 0)
            cls.C[n].push_back(pi);
        else if (c.faces == 1)
            cls.D[n].push_back(pi);
        else {
            cls.E[n].push_back(pi);
            cls.pairing.emplace_back(pi, c.coface_witness);
        }
    }
    // The pairing sends each coface-paired simplex to a face-paired one, one
    // dimension up, bijectively.
    for (const auto& [p, q] : cls.pairing) {
        const std::size_t n = static_cast<std::size_t>(poset.degree(q));
        if (std::find(cls.D[n].begin(), cls.D[n].end(), q) == cls.D[n].end())
            throw std::logic_error("pair target is not face-paired: " + poset.id(q));
    }
    std::vector<int> targets;
    for (const auto& [p, q] : cls.pairing) targets.push_back(q);
    std::sort(targets.begin(), targets.end());
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end())
        throw std::logic_error("pairing is not injective");
    return cls;
}

GlobalCoveringFamily family_from_morse(const MorseClassification& cls) {
    GlobalCoveringFamily fam;
    fam.K.resize(cls.C.size());
    for (std::size_t n = 0; n < cls.C.size(); ++n) {
        fam.K[n] = cls.C[n];
        fam.K[n].insert(fam.K[n].end(), cls.D[n].begin(), cls.D[n].end());
        std::sort(fam.K[n].begin(), fam.K[n].end());
    }
    return fam;
}

}  // namespace posetcoho
