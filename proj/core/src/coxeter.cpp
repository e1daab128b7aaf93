#include "posetcoho/coxeter.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace posetcoho {

CoxeterSystem CoxeterSystem::from_json(const nlohmann::json& j) {
    CoxeterSystem sys;
    sys.generators = j.at("generators").get<std::vector<std::string>>();
    sys.matrix = j.at("matrix").get<std::vector<std::vector<int>>>();
    return sys;
}

ValidationReport CoxeterSystem::validate() const {
    ValidationReport rep;
    const std::size_t n = generators.size();
    if (matrix.size() != n) {
        rep.add("matrix-shape", "matrix must be square of the generator count");
        return rep;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n) {
            rep.add("matrix-shape", "row " + std::to_string(i) + " has the wrong length");
            return rep;
        }
        if (matrix[i][i] != 1) rep.add("unit-diagonal", "m(" + generators[i] + "," + generators[i] + ") != 1");
        for (std::size_t k = i + 1; k < n; ++k) {
            if (matrix[i][k] != matrix[k][i])
                rep.add("symmetry", "m(" + generators[i] + "," + generators[k] + ") asymmetric");
            if (matrix[i][k] < 2) rep.add("order-bound", "m(" + generators[i] + "," + generators[k] + ") < 2");
        }
    }
    return rep;
}

namespace {

using Key = std::vector<long long>;

struct Engine {
    Key identity;
    std::function<Key(const Key&, int)> right_mult;
};

// Integer matrices in the root basis. The reflection for generator i sends
// root j to root j minus a Cartan integer multiple of root i; the integers
// depend only on the bond order.
Engine crystallographic_engine(const CoxeterSystem& sys) {
    const std::size_t n = sys.generators.size();
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = 2;
        for (std::size_t j = i + 1; j < n; ++j) {
            int m = sys.matrix[i][j];
            long long big = m == 2 ? 0 : m == 3 ? 1 : m == 4 ? 2 : 3;
            long long small = m == 2 ? 0 : 1;
            a[i][j] = big;
            a[j][i] = small;
        }
    }
    std::vector<Key> gen(n, Key(n * n, 0));
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) gen[s][r * n + c] = (r == c ? 1 : 0) - (r == s ? a[s][c] : 0);
    Engine e;
    e.identity.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) e.identity[i * n + i] = 1;
    e.right_mult = [n, gen](const Key& w, int s) {
        Key out(n * n, 0);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < n; ++k) {
                long long v = w[r * n + k];
                if (v == 0) continue;
                for (std::size_t c = 0; c < n; ++c) out[r * n + c] += v * gen[s][k * n + c];
            }
        return out;
    };
    return e;
}

// Rank-2 groups of any order act faithfully on 2m points on a circle.
Engine dihedral_engine(int m) {
    const long long size = 2LL * m;
    Engine e;
    e.identity.resize(size);
    for (long long x = 0; x < size; ++x) e.identity[x] = x;
    e.right_mult = [size](const Key& w, int s) {
        Key out(size);
        for (long long x = 0; x < size; ++x) {
            long long sx = s == 0 ? (size - x) % size : ((2 - x) % size + size) % size;
            out[x] = w[sx];
        }
        return out;
    };
    return e;
}

}  // namespace

CoxeterGroup enumerate_group(const CoxeterSystem& sys, std::size_t max_elements) {
    ValidationReport rep = sys.validate();
    if (!rep.ok()) throw std::invalid_argument("invalid Coxeter system: " + rep.issues[0].detail);
    const std::size_t n = sys.generators.size();
    bool crystallographic = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            int m = sys.matrix[i][j];
            if (m != 2 && m != 3 && m != 4 && m != 6) crystallographic = false;
        }
    Engine engine;
    if (crystallographic)
        engine = crystallographic_engine(sys);
    else if (n == 2)
        engine = dihedral_engine(sys.matrix[0][1]);
    else
        throw std::invalid_argument("unsupported Coxeter type: bond orders outside {2,3,4,6} need rank 2");

    CoxeterGroup g;
    std::map<Key, int> index;
    std::vector<Key> keys{engine.identity};
    index[engine.identity] = 0;
    g.length.push_back(0);
    g.via.emplace_back(-1, -1);
    for (std::size_t w = 0; w < keys.size(); ++w) {
        g.right.emplace_back(n, -1);
        for (std::size_t s = 0; s < n; ++s) {
            Key next = engine.right_mult(keys[w], static_cast<int>(s));
            auto [it, fresh] = index.emplace(next, static_cast<int>(keys.size()));
            if (fresh) {
                keys.push_back(std::move(next));
                g.length.push_back(g.length[w] + 1);
                g.via.emplace_back(static_cast<int>(w), static_cast<int>(s));
                if (keys.size() > max_elements)
                    throw std::runtime_error("group not finite or larger than " + std::to_string(max_elements) +
                                             " elements");
            }
            g.right[w][s] = it->second;
        }
    }
    const int maxlen = g.length.back();
    if (std::count(g.length.begin(), g.length.end(), maxlen) != 1)
        throw std::runtime_error("no unique maximal-length element; the system is not finite");
    g.w0 = static_cast<int>(g.length.size()) - 1;
    return g;
}

std::vector<int> CoxeterGroup::word(int w) const {
    std::vector<int> out;
    while (via[w].first >= 0) {
        out.push_back(via[w].second);
        w = via[w].first;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<int> descent_set(const CoxeterGroup& g, int w) {
    std::vector<int> out;
    for (std::size_t s = 0; s < g.right[w].size(); ++s)
        if (g.length[g.right[w][s]] > g.length[w]) out.push_back(static_cast<int>(s));
    return out;
}

int max_descent(const CoxeterGroup& g, int w) {
    std::vector<int> s = descent_set(g, w);
    return s.empty() ? -1 : s.back();
}

int minimal_rep(const CoxeterGroup& g, int w, unsigned i_mask) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t s = 0; s < g.right[w].size(); ++s)
            if ((i_mask >> s) & 1u) {
                int next = g.right[w][s];
                if (g.length[next] < g.length[w]) {
                    w = next;
                    moved = true;
                }
            }
    }
    return w;
}

namespace {

std::string coset_id(const CoxeterSystem& sys, const CoxeterGroup& g, int u, unsigned i_mask) {
    std::ostringstream os;
    std::vector<int> w = g.word(u);
    if (w.empty())
        os << "e";
    else
        for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "." : "") << sys.generators[w[i]];
    os << "|";
    bool any = false;
    for (std::size_t s = 0; s < sys.generators.size(); ++s)
        if ((i_mask >> s) & 1u) {
            os << (any ? "." : "") << sys.generators[s];
            any = true;
        }
    if (!any) os << "-";
    return os.str();
}

}  // namespace

CoxeterComplex coxeter_complex(const CoxeterSystem& sys, const CoxeterGroup& g) {
    const unsigned n = static_cast<unsigned>(sys.generators.size());
    const unsigned full = (1u << n) - 1;
    std::vector<std::string> ids;
    std::vector<int> degrees;
    std::map<std::string, std::pair<int, unsigned>> data;
    for (unsigned mask = 0; mask < full; ++mask)
        for (std::size_t u = 0; u < g.size(); ++u) {
            unsigned su = 0;
            for (int s : descent_set(g, static_cast<int>(u))) su |= 1u << s;
            if ((mask & ~su) != 0) continue;  // u must be the minimal coset rep
            std::string id = coset_id(sys, g, static_cast<int>(u), mask);
            ids.push_back(id);
            degrees.push_back(static_cast<int>(n) - __builtin_popcount(mask) - 1);
            data[id] = {static_cast<int>(u), mask};
        }
    std::vector<std::pair<std::string, std::string>> rels;
    for (const auto& [id, um] : data)
        for (unsigned s = 0; s < n; ++s) {
            unsigned bigger = um.second | (1u << s);
            if (bigger == um.second || bigger == full) continue;
            int v = minimal_rep(g, um.first, bigger);
            rels.emplace_back(id, coset_id(sys, g, v, bigger));
        }
    CoxeterComplex cx{GradedPoset(std::move(ids), std::move(degrees), rels), {}, {}, {}};
    cx.rep.resize(cx.poset.size());
    cx.mask.resize(cx.poset.size());
    for (const auto& [id, um] : data) {
        cx.rep[cx.poset.index(id)] = um.first;
        cx.mask[cx.poset.index(id)] = um.second;
    }
    CertifyOutcome outcome = certify_simplex_like(cx.poset);
    if (!outcome.ok) throw std::logic_error("parabolic coset poset is not simplex-like: " + outcome.reason);
    cx.cert = std::move(outcome.cert);
    return cx;
}

GlobalCoveringFamily coxeter_family(const CoxeterGroup& g, const CoxeterComplex& cx) {
    GlobalCoveringFamily fam;
    fam.K.assign(static_cast<std::size_t>(cx.poset.max_degree()) + 1, {});
    for (std::size_t p = 0; p < cx.poset.size(); ++p) {
        int s = max_descent(g, cx.rep[p]);
        if (s < 0 || !((cx.mask[p] >> s) & 1u))
            fam.K[static_cast<std::size_t>(cx.poset.degree(static_cast<int>(p)))].push_back(static_cast<int>(p));
    }
    return fam;
}

}  // namespace posetcoho
