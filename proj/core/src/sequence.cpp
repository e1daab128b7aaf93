#include "posetcoho/sequence.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace posetcoho {

namespace {

std::vector<std::size_t> rank_offsets(const CoefFunctor& f, const std::vector<int>& objects) {
    std::vector<std::size_t> off(objects.size() + 1, 0);
    for (std::size_t i = 0; i < objects.size(); ++i) off[i + 1] = off[i] + f.value(objects[i]).gens;
    return off;
}

}  // namespace

FunctorSequence FunctorSequence::build(const GradedPoset& poset, const LocalCoveringFamily& fam, int max_level) {
    if (fam.J.size() != poset.size()) throw std::invalid_argument("family must cover every object");
    if (max_level < 0) max_level = poset.max_degree();

    FunctorSequence out;
    out.poset_ = &poset;
    out.fam_ = &fam;
    out.levels_.push_back(CoefFunctor::constant_z(poset));
    out.children_.emplace_back(poset.size());
    out.pi_.emplace_back(poset.size());

    for (int n = 1; n <= max_level; ++n) {
        const CoefFunctor& prev = out.levels_.back();
        std::vector<std::vector<int>> children(poset.size());
        std::vector<IntMat> pi(poset.size());
        std::vector<std::size_t> rank(poset.size(), 0);

        for (std::size_t p = 0; p < poset.size(); ++p) {
            int pi_idx = static_cast<int>(p);
            if (poset.degree(pi_idx) < n) continue;
            std::vector<int> members = poset.under_fixed(pi_idx, n - 1);
            std::vector<std::size_t> memoff = rank_offsets(prev, members);
            const std::vector<int>& J = fam.J[p][n - 1];

            // Restriction of the level-(n-1) value at p to the family blocks
            // must be a square integer isomorphism; that is the rank equation
            // plus the determinacy condition in matrix form.
            std::size_t jrows = 0;
            for (int q : J) jrows += prev.value(q).gens;
            if (jrows != prev.value(pi_idx).gens)
                throw AdequacyError("rank equation fails at " + poset.id(pi_idx) + ", level " + std::to_string(n - 1) +
                                    ": " + std::to_string(prev.value(pi_idx).gens) + " vs " + std::to_string(jrows));
            IntMat rho(jrows, prev.value(pi_idx).gens);
            std::size_t r0 = 0;
            for (int q : J) {
                rho.set_block(r0, 0, prev.arrow(pi_idx, q));
                r0 += prev.value(q).gens;
            }
            auto tau = solve_in_span(rho, IntMat::identity(jrows));
            if (!tau)
                throw AdequacyError("family restriction is not invertible at " + poset.id(pi_idx) + ", level " +
                                    std::to_string(n - 1));

            IntMat lambda(memoff.back(), prev.value(pi_idx).gens);
            for (std::size_t i = 0; i < members.size(); ++i) lambda.set_block(memoff[i], 0, prev.arrow(pi_idx, members[i]));
            IntMat pj(jrows, memoff.back());
            r0 = 0;
            for (int q : J) {
                std::size_t idx = static_cast<std::size_t>(
                    std::find(members.begin(), members.end(), q) - members.begin());
                for (std::size_t i = 0; i < prev.value(q).gens; ++i) pj(r0 + i, memoff[idx] + i) = 1;
                r0 += prev.value(q).gens;
            }
            IntMat normalize = IntMat::identity(memoff.back()) - lambda * (*tau * pj);

            for (std::size_t i = 0; i < members.size(); ++i)
                if (std::find(J.begin(), J.end(), members[i]) == J.end()) children[p].push_back(members[i]);
            std::vector<std::size_t> rows;
            for (std::size_t i = 0; i < members.size(); ++i)
                if (std::find(J.begin(), J.end(), members[i]) == J.end())
                    for (std::size_t k = 0; k < prev.value(members[i]).gens; ++k) rows.push_back(memoff[i] + k);
            pi[p] = normalize.rows_subset(rows);
            rank[p] = rows.size();
        }

        std::vector<FGAbGroup> values;
        for (std::size_t p = 0; p < poset.size(); ++p) values.push_back(FGAbGroup::free_of_rank(rank[p]));
        std::map<std::pair<int, int>, IntMat> edges;
        for (std::size_t p = 0; p < poset.size(); ++p) {
            int src = static_cast<int>(p);
            std::vector<std::size_t> childoff;
            if (poset.degree(src) >= n) childoff = rank_offsets(prev, children[p]);
            for (int dst : poset.hasse_succ(src)) {
                if (poset.degree(dst) < n) {
                    edges[{src, dst}] = IntMat(0, rank[p]);
                    continue;
                }
                std::vector<int> dmembers = poset.under_fixed(dst, n - 1);
                std::vector<std::size_t> dmemoff = rank_offsets(prev, dmembers);
                IntMat t(dmemoff.back(), rank[p]);
                for (std::size_t c = 0; c < children[p].size(); ++c) {
                    auto it = std::find(dmembers.begin(), dmembers.end(), children[p][c]);
                    if (it == dmembers.end()) continue;
                    std::size_t idx = static_cast<std::size_t>(it - dmembers.begin());
                    for (std::size_t i = 0; i < prev.value(children[p][c]).gens; ++i)
                        t(dmemoff[idx] + i, childoff[c] + i) = 1;
                }
                edges[{src, dst}] = pi[dst] * t;
            }
        }
        out.levels_.emplace_back(poset, std::move(values), std::move(edges));
        out.children_.push_back(std::move(children));
        out.pi_.push_back(std::move(pi));
    }
    return out;
}

FreeCochainComplex full_complex(const FunctorSequence& seq) {
    const GradedPoset& poset = seq.poset();
    const int top = poset.max_degree();
    if (seq.max_level() < top) throw std::invalid_argument("sequence not built to the top degree");

    FreeCochainComplex out;
    std::vector<std::vector<int>> layer(static_cast<std::size_t>(top) + 1);
    std::vector<std::vector<std::size_t>> layeroff(static_cast<std::size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) {
        layer[n] = poset.objects_of_degree(n);
        layeroff[n] = rank_offsets(seq.level(n), layer[n]);
        out.ranks.push_back(layeroff[n].back());
        out.labels.emplace_back();
        for (int p : layer[n])
            for (std::size_t i = 0; i < seq.rank(n, p); ++i) out.labels.back().emplace_back(p, i);
    }
    for (int n = 0; n < top; ++n) {
        IntMat d(out.ranks[n + 1], out.ranks[n]);
        for (std::size_t t = 0; t < layer[n + 1].size(); ++t) {
            int dst = layer[n + 1][t];
            std::vector<int> members = poset.under_fixed(dst, n);
            std::vector<std::size_t> memoff = rank_offsets(seq.level(n), members);
            IntMat select(memoff.back(), out.ranks[n]);
            for (std::size_t i = 0; i < members.size(); ++i) {
                std::size_t idx = static_cast<std::size_t>(
                    std::find(layer[n].begin(), layer[n].end(), members[i]) - layer[n].begin());
                for (std::size_t k = 0; k < seq.rank(n, members[i]); ++k) select(memoff[i] + k, layeroff[n][idx] + k) = 1;
            }
            d.set_block(layeroff[n + 1][t], 0, seq.projection(n + 1, dst) * select);
        }
        out.d.push_back(std::move(d));
    }
    for (std::size_t n = 0; n + 1 < out.d.size(); ++n)
        if (!(out.d[n + 1] * out.d[n]).is_zero()) throw std::logic_error("differential does not square to zero");
    return out;
}

FreeCochainComplex simplicial_differential(const GradedPoset& poset, const SimplexCertificate& cert) {
    const int top = poset.max_degree();
    FreeCochainComplex out;
    std::vector<std::vector<int>> layer(static_cast<std::size_t>(top) + 1);
    std::vector<std::vector<std::size_t>> pos(1, std::vector<std::size_t>(poset.size()));
    pos.resize(static_cast<std::size_t>(top) + 1, std::vector<std::size_t>(poset.size()));
    for (int n = 0; n <= top; ++n) {
        layer[n] = poset.objects_of_degree(n);
        out.ranks.push_back(layer[n].size());
        out.labels.emplace_back();
        for (std::size_t i = 0; i < layer[n].size(); ++i) {
            pos[n][layer[n][i]] = i;
            out.labels.back().emplace_back(layer[n][i], 0);
        }
    }
    for (int n = 0; n < top; ++n) {
        IntMat d(out.ranks[n + 1], out.ranks[n]);
        for (std::size_t t = 0; t < layer[n + 1].size(); ++t) {
            int p = layer[n + 1][t];
            const int m = n + 1;
            const unsigned full = (1u << (m + 1)) - 1;
            for (int j = 0; j <= m; ++j) {
                int q = cert.face[p][full ^ (1u << j)];
                d(t, pos[n][q]) += ((m - j) % 2 == 0 ? 1 : -1);
            }
        }
        out.d.push_back(std::move(d));
    }
    return out;
}

CohomologyResult cohomology(const FreeCochainComplex& complex) {
    for (std::size_t n = 0; n + 1 < complex.d.size(); ++n)
        if (!(complex.d[n + 1] * complex.d[n]).is_zero())
            throw std::invalid_argument("differential does not square to zero");
    CohomologyResult out;
    std::size_t prev_rank = 0;
    std::vector<Int> prev_factors;
    for (std::size_t n = 0; n < complex.ranks.size(); ++n) {
        std::size_t out_rank = 0;
        if (n < complex.d.size()) {
            std::vector<Int> f = invariant_factors(complex.d[n]);
            out_rank = f.size();
            CohomologyResult::Level lvl;
            lvl.betti = complex.ranks[n] - out_rank - prev_rank;
            for (const Int& x : prev_factors)
                if (x > 1) lvl.torsion.push_back(x);
            out.h.push_back(std::move(lvl));
            prev_rank = out_rank;
            prev_factors = std::move(f);
        } else {
            CohomologyResult::Level lvl;
            lvl.betti = complex.ranks[n] - prev_rank;
            for (const Int& x : prev_factors)
                if (x > 1) lvl.torsion.push_back(x);
            out.h.push_back(std::move(lvl));
            prev_rank = 0;
            prev_factors.clear();
        }
    }
    return out;
}

std::string CohomologyResult::to_string() const {
    std::ostringstream os;
    for (std::size_t n = 0; n < h.size(); ++n) {
        if (n) os << "; ";
        os << "H^" << n << " = ";
        bool first = true;
        if (h[n].betti > 0) {
            os << "Z";
            if (h[n].betti > 1) os << "^" << h[n].betti;
            first = false;
        }
        for (const Int& t : h[n].torsion) {
            os << (first ? "" : " + ") << "Z/" << t.str();
            first = false;
        }
        if (first) os << "0";
    }
    return os.str();
}

bool euler_check(const GradedPoset& poset, const std::vector<std::vector<Int>>& r, const CohomologyResult& coh) {
    Int lhs = 0, rhs = 0;
    for (std::size_t n = 0; n < coh.h.size(); ++n) lhs += (n % 2 == 0 ? 1 : -1) * Int(coh.h[n].betti);
    for (std::size_t p = 0; p < poset.size(); ++p) {
        int d = poset.degree(static_cast<int>(p));
        rhs += (d % 2 == 0 ? 1 : -1) * r[p][static_cast<std::size_t>(d)];
    }
    return lhs == rhs;
}

IntMat level_limit_embedding(const FreeCochainComplex& complex, int n) {
    if (static_cast<std::size_t>(n) < complex.d.size()) return kernel_basis(complex.d[n]);
    return IntMat::identity(complex.ranks[n]);
}

nlohmann::json FreeCochainComplex::to_json() const {
    nlohmann::json out;
    out["ranks"] = ranks;
    nlohmann::json ds = nlohmann::json::array();
    for (const IntMat& m : d) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
            rows.push_back(row);
        }
        ds.push_back(rows);
    }
    out["differentials"] = ds;
    return out;
}

}  // namespace posetcoho
