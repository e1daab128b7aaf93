#include "posetcoho/simplex.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace posetcoho {

namespace {

std::string face_id(std::vector<std::string> verts) {
    std::sort(verts.begin(), verts.end());
    std::ostringstream os;
    for (std::size_t i = 0; i < verts.size(); ++i) os << (i ? " " : "") << verts[i];
    return os.str();
}

}  // namespace

GradedPoset complex_from_facets(const std::vector<std::vector<std::string>>& facets) {
    std::set<std::set<std::string>> faces;
    for (const auto& f : facets) {
        std::set<std::string> facet(f.begin(), f.end());
        if (facet.empty()) throw std::invalid_argument("empty facet");
        // all nonempty subsets
        std::vector<std::string> v(facet.begin(), facet.end());
        for (unsigned long long mask = 1; mask < (1ull << v.size()); ++mask) {
            std::set<std::string> sub;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (mask & (1ull << i)) sub.insert(v[i]);
            faces.insert(std::move(sub));
        }
        if (v.size() > 30) throw std::invalid_argument("facet too large");
    }
    std::vector<std::string> ids;
    std::vector<int> degrees;
    std::map<std::set<std::string>, std::string> name;
    for (const auto& f : faces) {
        name[f] = face_id({f.begin(), f.end()});
        ids.push_back(name[f]);
        degrees.push_back(static_cast<int>(f.size()) - 1);
    }
    std::vector<std::pair<std::string, std::string>> rels;
    for (const auto& f : faces)
        for (const auto& v : f) {
            std::set<std::string> sub = f;
            sub.erase(v);
            if (!sub.empty()) rels.emplace_back(name[f], name[sub]);
        }
    return GradedPoset(std::move(ids), std::move(degrees), rels);
}

GradedPoset complex_from_json(const nlohmann::json& j) {
    return complex_from_facets(j.at("facets").get<std::vector<std::vector<std::string>>>());
}

CertifyOutcome certify_simplex_like(const GradedPoset& poset, const std::vector<std::string>& vertex_order) {
    CertifyOutcome out;
    // Global rank of each degree-0 object.
    std::vector<int> rank(poset.size(), -1);
    if (vertex_order.empty()) {
        int r = 0;
        for (int v : poset.objects_of_degree(0)) rank[v] = r++;
    } else {
        int r = 0;
        for (const auto& id : vertex_order) {
            int v = poset.index(id);
            if (poset.degree(v) != 0) {
                out.reason = "vertex order lists a positive-degree object: " + id;
                return out;
            }
            rank[v] = r++;
        }
        for (int v : poset.objects_of_degree(0))
            if (rank[v] < 0) {
                out.witness = v;
                out.reason = "vertex order misses " + poset.id(v);
                return out;
            }
    }

    out.cert.vertices.resize(poset.size());
    out.cert.face.resize(poset.size());
    for (std::size_t p = 0; p < poset.size(); ++p) {
        int pi = static_cast<int>(p);
        std::vector<int> under = poset.under_all(pi);
        std::vector<int> verts;
        for (int q : under)
            if (poset.degree(q) == 0) verts.push_back(q);
        const int k = static_cast<int>(verts.size());
        if (k != poset.degree(pi) + 1 || k > 30) {
            out.witness = pi;
            out.reason = poset.id(pi) + " has " + std::to_string(k) + " vertices but degree " +
                         std::to_string(poset.degree(pi));
            return out;
        }
        if (under.size() != (1u << k) - 1) {
            out.witness = pi;
            out.reason = poset.id(pi) + " has " + std::to_string(under.size()) + " faces, expected " +
                         std::to_string((1u << k) - 1);
            return out;
        }
        std::sort(verts.begin(), verts.end(), [&](int a, int b) { return rank[a] < rank[b]; });
        std::vector<int> face(1u << k, -1);
        for (int q : under) {
            unsigned mask = 0;
            for (int i = 0; i < k; ++i)
                if (poset.leq(q, verts[i])) mask |= 1u << i;
            if (static_cast<int>(__builtin_popcount(mask)) != poset.degree(q) + 1) {
                out.witness = pi;
                out.reason = "face " + poset.id(q) + " of " + poset.id(pi) + " has the wrong vertex count";
                return out;
            }
            if (face[mask] != -1) {
                out.witness = pi;
                out.reason = "faces " + poset.id(face[mask]) + " and " + poset.id(q) + " of " + poset.id(pi) +
                             " share a vertex set";
                return out;
            }
            face[mask] = q;
        }
        out.cert.vertices[p] = std::move(verts);
        out.cert.face[p] = std::move(face);
    }
    out.ok = true;
    return out;
}

LocalCoveringFamily local_family(const GradedPoset& poset, const SimplexCertificate& cert) {
    LocalCoveringFamily fam;
    fam.J.resize(poset.size());
    for (std::size_t p = 0; p < poset.size(); ++p) {
        const int k = static_cast<int>(cert.vertices[p].size());
        const unsigned top = 1u << (k - 1);
        fam.J[p].resize(k);
        for (unsigned mask = 1; mask < (1u << k); ++mask)
            if (mask & top) fam.J[p][__builtin_popcount(mask) - 1].push_back(cert.face[p][mask]);
        for (auto& level : fam.J[p]) std::sort(level.begin(), level.end());
    }
    return fam;
}

ValidationReport check_local_family(const GradedPoset& poset, const LocalCoveringFamily& fam) {
    ValidationReport rep;
    auto contains = [](const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); };
    for (std::size_t p0 = 0; p0 < poset.size(); ++p0) {
        int pi = static_cast<int>(p0);
        const int d = poset.degree(pi);
        if (static_cast<int>(fam.J[p0].size()) != d + 1) {
            rep.add("family-shape", poset.id(pi) + " needs levels 0.." + std::to_string(d));
            continue;
        }
        for (int m = 0; m <= d; ++m)
            for (int q : fam.J[p0][m])
                if (!poset.leq(pi, q) || poset.degree(q) != m)
                    rep.add("family-member", poset.id(q) + " is not a degree-" + std::to_string(m) + " face of " +
                                                 poset.id(pi));
        if (fam.J[p0][d] != std::vector<int>{pi})
            rep.add("top-degree-singleton", poset.id(pi) + ": level " + std::to_string(d) + " must be the object itself");
        for (int n = 0; n + 1 <= d; ++n) {
            std::set<int> covered;
            for (int q : fam.J[p0][n + 1])
                for (int r : poset.under_fixed(q, n)) covered.insert(r);
            for (int r : poset.under_fixed(pi, n))
                if (!covered.count(r))
                    rep.add("covering", poset.id(r) + " not covered at level " + std::to_string(n) + " under " +
                                            poset.id(pi));
            for (int q : fam.J[p0][n + 1])
                for (int r : fam.J[q][n])
                    if (!contains(fam.J[p0][n], r))
                        rep.add("nesting", poset.id(r) + " in level " + std::to_string(n) + " of " + poset.id(q) +
                                               " but not of " + poset.id(pi));
        }
    }
    return rep;
}

std::vector<std::vector<Int>> r_values(const GradedPoset& poset) {
    std::vector<std::vector<Int>> r(poset.size());
    for (std::size_t p = 0; p < poset.size(); ++p) {
        r[p].assign(static_cast<std::size_t>(poset.degree(static_cast<int>(p))) + 1, 0);
        r[p][0] = 1;
    }
    for (int n = 1; n <= poset.max_degree(); ++n)
        for (std::size_t p = 0; p < poset.size(); ++p) {
            int pi = static_cast<int>(p);
            if (poset.degree(pi) < n) continue;
            Int sum = -r[p][n - 1];
            for (int q : poset.under_fixed(pi, n - 1)) sum += r[q][n - 1];
            r[p][n] = sum;
        }
    return r;
}

Int r_closed_form(int deg, int m) {
    Int sum = 0;
    Int binom = 1;  // C(deg+1, l)
    for (int l = 0; l <= m; ++l) {
        sum += ((m - l) % 2 == 0 ? binom : -binom);
        binom = binom * (deg + 1 - l) / (l + 1);
    }
    return sum;
}

ValidationReport check_adequate(const GradedPoset& poset, const LocalCoveringFamily& fam,
                                const std::vector<std::vector<Int>>& r) {
    ValidationReport rep;
    for (std::size_t p0 = 0; p0 < poset.size(); ++p0) {
        int pi = static_cast<int>(p0);
        if (poset.degree(pi) >= 2) {
            std::vector<int> members = poset.under_strict(pi);
            if (!members.empty()) {
                std::vector<char> seen(members.size(), 0);
                std::vector<std::size_t> stack{0};
                seen[0] = 1;
                while (!stack.empty()) {
                    std::size_t i = stack.back();
                    stack.pop_back();
                    for (std::size_t j = 0; j < members.size(); ++j)
                        if (!seen[j] && (poset.leq(members[i], members[j]) || poset.leq(members[j], members[i]))) {
                            seen[j] = 1;
                            stack.push_back(j);
                        }
                }
                if (std::find(seen.begin(), seen.end(), 0) != seen.end())
                    rep.add("connectivity", "strict under-set of " + poset.id(pi) + " is disconnected");
            }
        }
        for (int n = 0; n + 1 <= poset.degree(pi); ++n) {
            Int sum = 0;
            for (int q : fam.J[p0][n]) sum += r[q][n];
            if (sum != r[p0][n])
                rep.add("rank-equation", poset.id(pi) + " level " + std::to_string(n) + ": " + r[p0][n].str() +
                                             " != " + sum.str());
        }
    }
    return rep;
}

}  // namespace posetcoho
