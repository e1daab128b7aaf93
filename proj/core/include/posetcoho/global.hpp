#ifndef POSETCOHO_GLOBAL_HPP
#define POSETCOHO_GLOBAL_HPP

#include "posetcoho/sequence.hpp"

#include <vector>

namespace posetcoho {

/// K[n] is a subset of the degree-n objects, sorted by index.
struct GlobalCoveringFamily {
    std::vector<std::vector<int>> K;

    static GlobalCoveringFamily from_json(const GradedPoset& poset, const nlohmann::json& j);
    nlohmann::json to_json(const GradedPoset& poset) const;
};

/// Both defining conditions, degree by degree: the limit of level n must
/// restrict injectively to the K-blocks, and the cross-degree composite from
/// the non-K degree-(n-1) blocks into the K degree-n blocks must have free
/// cokernel. Failures carry the degree and the offending kernel vector or
/// invariant factor.
ValidationReport check_global(const FreeCochainComplex& complex, const GlobalCoveringFamily& fam);

/// Family Betti numbers; negative entries mean the family is defective.
std::vector<Int> family_betti(const GradedPoset& poset, const std::vector<std::vector<Int>>& r,
                              const GlobalCoveringFamily& fam);

/// The reduced complex: degree n is the cokernel of the restricted
/// differential into the K degree-n blocks, with the induced differentials.
struct ReducedComplex {
    FreeCochainComplex complex;           // ranks are the family Betti numbers
    std::vector<IntMat> projection;       // K-block coordinates -> reduced coordinates
    std::vector<IntMat> section;          // reduced coordinates -> K-block coordinates
};

ReducedComplex reduced_complex(const FreeCochainComplex& complex, const GlobalCoveringFamily& fam);

/// Weak (b_n <= b_n^K) and strong alternating-sum inequalities; every
/// violation is reported (they are theorems, so a violation flags a bug).
ValidationReport morse_inequalities(const CohomologyResult& coh, const std::vector<Int>& bk);

}  // namespace posetcoho

#endif
