#ifndef POSETCOHO_FUNCTOR_HPP
#define POSETCOHO_FUNCTOR_HPP

#include "posetcoho/abelian.hpp"
#include "posetcoho/poset.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace posetcoho {

/// Functor from a graded poset to finitely generated abelian groups. Arrow
/// matrices are stored on covering (Hasse) edges; composites are derived and
/// memoized. Non-owning: the poset must outlive the functor.
class CoefFunctor {
public:
    CoefFunctor(const GradedPoset& poset, std::vector<FGAbGroup> values,
                std::map<std::pair<int, int>, IntMat> edge_arrows);

    const GradedPoset& poset() const { return *poset_; }
    const FGAbGroup& value(int p) const { return values_[p]; }

    /// Matrix of the composite arrow p -> q for any p <= q.
    const IntMat& arrow(int p, int q) const;

    /// Checks identity/edge well-definedness and path-independence of
    /// composites (equality modulo target relations on every diamond).
    ValidationReport validate() const;

    static CoefFunctor constant_z(const GradedPoset& poset);
    static CoefFunctor from_json(const GradedPoset& poset, const nlohmann::json& j);
    nlohmann::json to_json() const;

private:
    const GradedPoset* poset_;
    std::vector<FGAbGroup> values_;
    std::map<std::pair<int, int>, IntMat> edges_;
    mutable std::map<std::pair<int, int>, IntMat> memo_;
};

/// Generator offsets of the direct sum of the listed objects' values.
std::vector<std::size_t> product_offsets(const CoefFunctor& f, const std::vector<int>& objects);

/// The limit as an abstract group together with its embedding into the
/// product of all values: column j of `embedding` is the tuple representing
/// the j-th generator, with per-object coordinate blocks at `offset`.
struct LimitGroup {
    FGAbGroup group;
    IntMat embedding;
    std::vector<std::size_t> offset;  // indexed by object
};

LimitGroup limit(const CoefFunctor& f);

/// Ker_F: the intersection of the kernels of all arrows out of each object;
/// every non-identity arrow is zero.
CoefFunctor ker_functor(const CoefFunctor& f);

/// F': the product of the values over the under-set, with component
/// forwarding arrows.
CoefFunctor prime_functor(const CoefFunctor& f);

struct CondensedCheck {
    bool ok = true;
    int witness = -1;        // first violating object, or -1
    std::string reason;      // which condition failed and the observed group
};

/// F is n-condensed when F vanishes below degree n and Ker_F vanishes above.
CondensedCheck is_n_condensed(const CoefFunctor& f, int n);

/// One step of the shifting argument for an n-condensed functor F: the
/// quotient G of F -> Ker'_F, and Coim{lim Ker'_F -> lim G}, which is the
/// first derived limit of F.
struct ShiftStep {
    CoefFunctor g;
    FGAbGroup derived_limit;
};

ShiftStep shift_step(const CoefFunctor& f, int n);

/// Derived limits computed from the cochain complex over nondegenerate
/// chains of the poset; independent ground truth for the other paths.
std::vector<FGAbGroup> higher_limits_oracle(const CoefFunctor& f, int max_i);

/// Derived limits via iterated shifting steps while each successive quotient
/// stays condensed, otherwise via the chain-complex fallback. `method[i]`
/// records which path produced degree i ("limit", "shift" or "chains").
struct HigherLimits {
    std::vector<FGAbGroup> lim;
    std::vector<std::string> method;
};

HigherLimits higher_limits(const CoefFunctor& f, int max_i);

/// Cohomology of a cochain complex of presented groups: level m has
/// `rels[m].rows()` generators with relation columns rels[m], and
/// deltas[m] maps level m to level m+1 (deltas.size() == rels.size()-1).
std::vector<FGAbGroup> complex_cohomology(const std::vector<IntMat>& deltas, const std::vector<IntMat>& rels);

}  // namespace posetcoho

#endif
