#include "posetcoho/functor.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace posetcoho {

namespace {

IntMat block_diag(const std::vector<const IntMat*>& blocks) {
    std::size_t r = 0, c = 0;
    for (const IntMat* b : blocks) r += b->rows(), c += b->cols();
    IntMat out(r, c);
    r = c = 0;
    for (const IntMat* b : blocks) {
        out.set_block(r, c, *b);
        r += b->rows();
        c += b->cols();
    }
    return out;
}

IntMat relations_block_diag(const CoefFunctor& f, const std::vector<int>& objects) {
    std::vector<const IntMat*> blocks;
    blocks.reserve(objects.size());
    for (int p : objects) blocks.push_back(&f.value(p).relations);
    return block_diag(blocks);
}

bool equal_mod_relations(const IntMat& a, const IntMat& b, const IntMat& rels) {
    return in_span(rels, a - b);
}

}  // namespace

CoefFunctor::CoefFunctor(const GradedPoset& poset, std::vector<FGAbGroup> values,
                         std::map<std::pair<int, int>, IntMat> edge_arrows)
    : poset_(&poset), values_(std::move(values)), edges_(std::move(edge_arrows)) {
    if (values_.size() != poset.size()) throw std::invalid_argument("one value per object required");
    for (std::size_t p = 0; p < poset.size(); ++p)
        for (int q : poset.hasse_succ(static_cast<int>(p)))
            if (!edges_.count({static_cast<int>(p), q}))
                throw std::invalid_argument("missing arrow " + poset.id(static_cast<int>(p)) + " -> " + poset.id(q));
    for (const auto& [e, m] : edges_) {
        if (!poset.precedes(e.first, e.second)) throw std::invalid_argument("arrow on a non-covering pair");
        if (m.rows() != values_[e.second].gens || m.cols() != values_[e.first].gens)
            throw std::invalid_argument("arrow matrix shape mismatch on " + poset.id(e.first) + " -> " +
                                        poset.id(e.second));
    }
}

const IntMat& CoefFunctor::arrow(int p, int q) const {
    if (!poset_->leq(p, q)) throw std::invalid_argument("arrow requested for unrelated pair");
    auto key = std::make_pair(p, q);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    IntMat m;
    if (p == q) {
        m = IntMat::identity(values_[p].gens);
    } else if (auto e = edges_.find(key); e != edges_.end()) {
        m = e->second;
    } else {
        for (int r : poset_->hasse_succ(p))
            if (poset_->leq(r, q)) {
                m = arrow(r, q) * edges_.at({p, r});
                break;
            }
    }
    return memo_.emplace(key, std::move(m)).first->second;
}

ValidationReport CoefFunctor::validate() const {
    ValidationReport rep;
    for (const auto& [e, m] : edges_)
        if (!hom_well_defined(values_[e.first], values_[e.second], m))
            rep.add("arrow-well-defined",
                    poset_->id(e.first) + " -> " + poset_->id(e.second) + " does not respect relations");
    if (!rep.ok()) return rep;
    // Path independence: composites through any two covering first steps must
    // agree modulo the target's relations.
    for (std::size_t p = 0; p < poset_->size(); ++p)
        for (std::size_t q = 0; q < poset_->size(); ++q) {
            int pi = static_cast<int>(p), qi = static_cast<int>(q);
            if (!poset_->lt(pi, qi)) continue;
            std::optional<IntMat> first;
            for (int r : poset_->hasse_succ(pi)) {
                if (!poset_->leq(r, qi)) continue;
                IntMat m = arrow(r, qi) * edges_.at({pi, r});
                if (!first)
                    first = std::move(m);
                else if (!equal_mod_relations(*first, m, values_[qi].relations))
                    rep.add("functoriality", "composites " + poset_->id(pi) + " -> " + poset_->id(qi) +
                                                 " depend on the path");
            }
        }
    return rep;
}

CoefFunctor CoefFunctor::constant_z(const GradedPoset& poset) {
    std::vector<FGAbGroup> values(poset.size(), FGAbGroup::free_of_rank(1));
    std::map<std::pair<int, int>, IntMat> edges;
    for (std::size_t p = 0; p < poset.size(); ++p)
        for (int q : poset.hasse_succ(static_cast<int>(p))) edges[{static_cast<int>(p), q}] = IntMat::identity(1);
    return {poset, std::move(values), std::move(edges)};
}

namespace {

// Entries may be JSON integers or decimal strings (for values beyond the
// native integer range).
Int json_int(const nlohmann::json& v) {
    if (v.is_string()) return Int(v.get<std::string>());
    return Int(v.get<long long>());
}

}  // namespace

CoefFunctor CoefFunctor::from_json(const GradedPoset& poset, const nlohmann::json& j) {
    std::vector<FGAbGroup> values(poset.size());
    for (const auto& [id, g] : j.at("values").items()) {
        std::size_t k = g.at("rank").get<std::size_t>();
        nlohmann::json cols = nlohmann::json::array();
        if (g.contains("relations")) cols = g.at("relations");
        IntMat rels(k, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c].size() != k) throw std::invalid_argument("relation column length mismatch for " + id);
            for (std::size_t r = 0; r < k; ++r) rels(r, c) = json_int(cols[c][r]);
        }
        values[poset.index(id)] = FGAbGroup(k, std::move(rels));
    }
    std::map<std::pair<int, int>, IntMat> edges;
    for (const auto& a : j.at("arrows")) {
        int p = poset.index(a.at("source").get<std::string>());
        int q = poset.index(a.at("target").get<std::string>());
        const nlohmann::json& rows = a.at("matrix");
        IntMat m(rows.size(), rows.empty() ? values[p].gens : rows[0].size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = json_int(rows[r][c]);
        edges[{p, q}] = std::move(m);
    }
    return {poset, std::move(values), std::move(edges)};
}

nlohmann::json CoefFunctor::to_json() const {
    nlohmann::json values = nlohmann::json::object();
    for (std::size_t p = 0; p < poset_->size(); ++p) {
        const FGAbGroup& g = values_[p];
        nlohmann::json cols = nlohmann::json::array();
        for (std::size_t c = 0; c < g.relations.cols(); ++c) {
            nlohmann::json col = nlohmann::json::array();
            for (std::size_t r = 0; r < g.gens; ++r) col.push_back(g.relations(r, c).str());
            cols.push_back(col);
        }
        values[poset_->id(static_cast<int>(p))] = {{"rank", g.gens}, {"relations", cols}};
    }
    nlohmann::json arrows = nlohmann::json::array();
    for (const auto& [e, m] : edges_) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
            rows.push_back(row);
        }
        arrows.push_back({{"source", poset_->id(e.first)}, {"target", poset_->id(e.second)}, {"matrix", rows}});
    }
    return {{"values", values}, {"arrows", arrows}};
}

std::vector<std::size_t> product_offsets(const CoefFunctor& f, const std::vector<int>& objects) {
    std::vector<std::size_t> off(objects.size() + 1, 0);
    for (std::size_t i = 0; i < objects.size(); ++i) off[i + 1] = off[i] + f.value(objects[i]).gens;
    return off;
}

LimitGroup limit(const CoefFunctor& f) {
    const GradedPoset& poset = f.poset();
    std::vector<int> all(poset.size());
    for (std::size_t p = 0; p < poset.size(); ++p) all[p] = static_cast<int>(p);
    std::vector<std::size_t> off = product_offsets(f, all);
    const std::size_t total = off.back();

    std::vector<std::pair<int, int>> edges;
    for (std::size_t p = 0; p < poset.size(); ++p)
        for (int q : poset.hasse_succ(static_cast<int>(p))) edges.emplace_back(static_cast<int>(p), q);

    std::size_t rows = 0;
    for (const auto& [p, q] : edges) rows += f.value(q).gens;
    IntMat diff(rows, total);
    std::vector<const IntMat*> target_rels;
    std::size_t r0 = 0;
    for (const auto& [p, q] : edges) {
        const IntMat& m = f.arrow(p, q);
        diff.set_block(r0, off[p], m);
        for (std::size_t i = 0; i < f.value(q).gens; ++i) diff(r0 + i, off[q] + i) -= 1;
        target_rels.push_back(&f.value(q).relations);
        r0 += f.value(q).gens;
    }

    IntMat compatible = preimage_lattice(diff, block_diag(target_rels));
    LimitGroup out{lattice_quotient(compatible, relations_block_diag(f, all)), compatible, std::move(off)};
    out.offset.pop_back();
    return out;
}

CoefFunctor ker_functor(const CoefFunctor& f) {
    const GradedPoset& poset = f.poset();
    std::vector<FGAbGroup> values;
    values.reserve(poset.size());
    for (std::size_t p = 0; p < poset.size(); ++p) {
        const auto& succ = poset.hasse_succ(static_cast<int>(p));
        if (succ.empty()) {
            values.push_back(f.value(static_cast<int>(p)));
            continue;
        }
        std::size_t rows = 0;
        for (int q : succ) rows += f.value(q).gens;
        IntMat stacked(rows, f.value(static_cast<int>(p)).gens);
        std::vector<const IntMat*> rel_blocks;
        FGAbGroup target = FGAbGroup::zero();
        std::size_t r0 = 0;
        for (int q : succ) {
            stacked.set_block(r0, 0, f.arrow(static_cast<int>(p), q));
            rel_blocks.push_back(&f.value(q).relations);
            r0 += f.value(q).gens;
        }
        values.push_back(hom_kernel(f.value(static_cast<int>(p)), FGAbGroup(rows, block_diag(rel_blocks)), stacked));
    }
    std::map<std::pair<int, int>, IntMat> edges;
    for (std::size_t p = 0; p < poset.size(); ++p)
        for (int q : poset.hasse_succ(static_cast<int>(p)))
            edges[{static_cast<int>(p), q}] = IntMat(values[q].gens, values[p].gens);
    return {poset, std::move(values), std::move(edges)};
}

CoefFunctor prime_functor(const CoefFunctor& f) {
    const GradedPoset& poset = f.poset();
    std::vector<FGAbGroup> values;
    std::vector<std::vector<int>> members(poset.size());
    std::vector<std::vector<std::size_t>> offsets(poset.size());
    for (std::size_t p = 0; p < poset.size(); ++p) {
        members[p] = poset.under_all(static_cast<int>(p));
        offsets[p] = product_offsets(f, members[p]);
        FGAbGroup g(offsets[p].back(), relations_block_diag(f, members[p]));
        values.push_back(std::move(g));
    }
    std::map<std::pair<int, int>, IntMat> edges;
    for (std::size_t p = 0; p < poset.size(); ++p)
        for (int q : poset.hasse_succ(static_cast<int>(p))) {
            IntMat m(values[q].gens, values[p].gens);
            for (std::size_t jt = 0; jt < members[q].size(); ++jt) {
                auto it = std::find(members[p].begin(), members[p].end(), members[q][jt]);
                std::size_t js = static_cast<std::size_t>(it - members[p].begin());
                for (std::size_t i = 0; i < f.value(members[q][jt]).gens; ++i)
                    m(offsets[q][jt] + i, offsets[p][js] + i) = 1;
            }
            edges[{static_cast<int>(p), q}] = std::move(m);
        }
    return {poset, std::move(values), std::move(edges)};
}

CondensedCheck is_n_condensed(const CoefFunctor& f, int n) {
    CoefFunctor ker = ker_functor(f);
    const GradedPoset& poset = f.poset();
    for (std::size_t p = 0; p < poset.size(); ++p) {
        int pi = static_cast<int>(p);
        if (poset.degree(pi) < n && !f.value(pi).trivial())
            return {false, pi, "value " + f.value(pi).to_string() + " below degree " + std::to_string(n)};
        if (poset.degree(pi) > n && !ker.value(pi).trivial())
            return {false, pi,
                    "arrow-kernel intersection " + ker.value(pi).to_string() + " above degree " + std::to_string(n)};
    }
    return {};
}

ShiftStep shift_step(const CoefFunctor& f, int n) {
    CondensedCheck cc = is_n_condensed(f, n);
    if (!cc.ok)
        throw std::invalid_argument("shift step needs an " + std::to_string(n) + "-condensed functor: " + cc.reason +
                                    (cc.witness >= 0 ? " at " + f.poset().id(cc.witness) : ""));
    const GradedPoset& poset = f.poset();
    std::vector<std::vector<int>> members(poset.size());
    std::vector<std::vector<std::size_t>> offsets(poset.size());
    std::vector<FGAbGroup> values;
    for (std::size_t p = 0; p < poset.size(); ++p) {
        int pi = static_cast<int>(p);
        members[p] = poset.under_fixed(pi, n);
        offsets[p] = product_offsets(f, members[p]);
        IntMat lambda(offsets[p].back(), f.value(pi).gens);
        for (std::size_t j = 0; j < members[p].size(); ++j) lambda.set_block(offsets[p][j], 0, f.arrow(pi, members[p][j]));
        values.emplace_back(offsets[p].back(), hstack(relations_block_diag(f, members[p]), lambda));
    }
    std::map<std::pair<int, int>, IntMat> edges;
    for (std::size_t p = 0; p < poset.size(); ++p)
        for (int q : poset.hasse_succ(static_cast<int>(p))) {
            IntMat m(values[q].gens, values[p].gens);
            for (std::size_t jt = 0; jt < members[q].size(); ++jt) {
                auto it = std::find(members[p].begin(), members[p].end(), members[q][jt]);
                std::size_t js = static_cast<std::size_t>(it - members[p].begin());
                for (std::size_t i = 0; i < f.value(members[q][jt]).gens; ++i)
                    m(offsets[q][jt] + i, offsets[p][js] + i) = 1;
            }
            edges[{static_cast<int>(p), q}] = std::move(m);
        }
    CoefFunctor g(poset, std::move(values), std::move(edges));

    // The first derived limit is lim(g) modulo the image of the map that
    // restricts a tuple over the degree-n objects to each object's quotient.
    std::vector<int> layer = poset.objects_of_degree(n);
    std::vector<std::size_t> layer_off = product_offsets(f, layer);
    const std::size_t total = layer_off.back();
    std::size_t rows = 0;
    for (std::size_t p = 0; p < poset.size(); ++p) rows += offsets[p].back();
    IntMat restrict(rows, total);
    std::vector<const IntMat*> rel_blocks;
    std::size_t r0 = 0;
    for (std::size_t p = 0; p < poset.size(); ++p) {
        for (std::size_t j = 0; j < members[p].size(); ++j) {
            auto it = std::find(layer.begin(), layer.end(), members[p][j]);
            std::size_t js = static_cast<std::size_t>(it - layer.begin());
            for (std::size_t i = 0; i < f.value(members[p][j]).gens; ++i)
                restrict(r0 + offsets[p][j] + i, layer_off[js] + i) = 1;
        }
        rel_blocks.push_back(&g.value(static_cast<int>(p)).relations);
        r0 += offsets[p].back();
    }
    LimitGroup lim_g = limit(g);
    FGAbGroup derived = lattice_quotient(lim_g.embedding, hstack(restrict, block_diag(rel_blocks)));
    return {std::move(g), std::move(derived)};
}

std::vector<FGAbGroup> complex_cohomology(const std::vector<IntMat>& deltas, const std::vector<IntMat>& rels) {
    const std::size_t levels = rels.size();
    std::vector<FGAbGroup> h;
    h.reserve(levels);
    for (std::size_t m = 0; m < levels; ++m) {
        const std::size_t gens = rels[m].rows();
        IntMat cocycles = m + 1 < levels ? preimage_lattice(deltas[m], rels[m + 1]) : IntMat::identity(gens);
        IntMat boundaries = m > 0 ? hstack(deltas[m - 1], rels[m]) : rels[m];
        h.push_back(lattice_quotient(cocycles, boundaries));
    }
    return h;
}

std::vector<FGAbGroup> higher_limits_oracle(const CoefFunctor& f, int max_i) {
    const GradedPoset& poset = f.poset();
    // Nondegenerate chains p0 < p1 < ... < pm, grouped by length.
    std::vector<std::vector<std::vector<int>>> chains;
    std::vector<std::vector<int>> layer;
    for (std::size_t p = 0; p < poset.size(); ++p) layer.push_back({static_cast<int>(p)});
    while (!layer.empty()) {
        chains.push_back(layer);
        std::vector<std::vector<int>> next;
        for (const auto& c : layer)
            for (std::size_t q = 0; q < poset.size(); ++q)
                if (poset.lt(c.back(), static_cast<int>(q))) {
                    next.push_back(c);
                    next.back().push_back(static_cast<int>(q));
                }
        layer = std::move(next);
    }

    std::vector<std::vector<std::size_t>> offsets(chains.size());
    std::vector<std::map<std::vector<int>, std::size_t>> position(chains.size());
    std::vector<IntMat> rels;
    for (std::size_t m = 0; m < chains.size(); ++m) {
        offsets[m].assign(1, 0);
        std::vector<const IntMat*> blocks;
        for (std::size_t i = 0; i < chains[m].size(); ++i) {
            position[m][chains[m][i]] = i;
            offsets[m].push_back(offsets[m].back() + f.value(chains[m][i].back()).gens);
            blocks.push_back(&f.value(chains[m][i].back()).relations);
        }
        rels.push_back(block_diag(blocks));
    }

    std::vector<IntMat> deltas;
    for (std::size_t m = 0; m + 1 < chains.size(); ++m) {
        IntMat d(offsets[m + 1].back(), offsets[m].back());
        for (std::size_t i = 0; i < chains[m + 1].size(); ++i) {
            const std::vector<int>& c = chains[m + 1][i];
            for (std::size_t j = 0; j < c.size(); ++j) {
                std::vector<int> face = c;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
                std::size_t src = position[m].at(face);
                int sign = (j % 2 == 0) ? 1 : -1;
                if (j + 1 == c.size()) {
                    // The last face ends elsewhere: push its value forward.
                    const IntMat& a = f.arrow(face.back(), c.back());
                    for (std::size_t r = 0; r < a.rows(); ++r)
                        for (std::size_t s = 0; s < a.cols(); ++s)
                            d(offsets[m + 1][i] + r, offsets[m][src] + s) += sign * a(r, s);
                } else {
                    for (std::size_t r = 0; r < f.value(c.back()).gens; ++r)
                        d(offsets[m + 1][i] + r, offsets[m][src] + r) += sign;
                }
            }
        }
        deltas.push_back(std::move(d));
    }

    std::vector<FGAbGroup> h = complex_cohomology(deltas, rels);
    h.resize(static_cast<std::size_t>(max_i) + 1, FGAbGroup::zero());
    return h;
}

HigherLimits higher_limits(const CoefFunctor& f, int max_i) {
    HigherLimits out;
    out.lim.push_back(limit(f).group);
    out.method.push_back("limit");
    std::optional<CoefFunctor> cur(f);
    std::optional<int> n;
    for (int c = 0; c <= f.poset().max_degree() + 1 && !n; ++c)
        if (is_n_condensed(*cur, c).ok) n = c;
    for (int i = 1; i <= max_i; ++i) {
        if (n) {
            ShiftStep step = shift_step(*cur, *n);
            out.lim.push_back(std::move(step.derived_limit));
            out.method.push_back("shift");
            cur.emplace(std::move(step.g));
            ++*n;
            if (!is_n_condensed(*cur, *n).ok) n.reset();
        } else {
            std::vector<FGAbGroup> oracle = higher_limits_oracle(f, max_i);
            for (std::size_t j = out.lim.size(); j <= static_cast<std::size_t>(max_i); ++j) {
                out.lim.push_back(oracle[j]);
                out.method.push_back("chains");
            }
            break;
        }
    }
    return out;
}

}  // namespace posetcoho
