#ifndef POSETCOHO_SEQUENCE_HPP
#define POSETCOHO_SEQUENCE_HPP

#include "posetcoho/functor.hpp"
#include "posetcoho/simplex.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace posetcoho {

/// A rank equation of the family failed, so the sequence construction cannot
/// continue past the reported object and level.
struct AdequacyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The tower of free functors built from an adequate local covering family.
/// Level 0 is the constant functor with value the integers; level n+1 of an
/// object is based on the level-n values of its non-family degree-n faces.
class FunctorSequence {
public:
    static FunctorSequence build(const GradedPoset& poset, const LocalCoveringFamily& fam, int max_level = -1);

    const GradedPoset& poset() const { return *poset_; }
    const LocalCoveringFamily& family() const { return *fam_; }
    int max_level() const { return static_cast<int>(levels_.size()) - 1; }
    const CoefFunctor& level(int n) const { return levels_[n]; }
    std::size_t rank(int n, int p) const { return levels_[n].value(p).gens; }

    /// Basis block structure of level n at p (n >= 1, deg(p) >= n): the
    /// degree-(n-1) faces outside the family, in id order.
    const std::vector<int>& basis_children(int n, int p) const { return children_[n][p]; }

    /// Matrix of the quotient map from the degree-(n-1) face product onto
    /// level n at p, realized by zeroing the family components (n >= 1,
    /// deg(p) >= n).
    const IntMat& projection(int n, int p) const { return pi_[n][p]; }

private:
    const GradedPoset* poset_ = nullptr;
    const LocalCoveringFamily* fam_ = nullptr;
    std::vector<CoefFunctor> levels_;
    std::vector<std::vector<std::vector<int>>> children_;
    std::vector<std::vector<IntMat>> pi_;
};

/// Free cochain complex with labeled product bases.
struct FreeCochainComplex {
    std::vector<std::size_t> ranks;
    std::vector<IntMat> d;  // d[n]: level n -> level n+1; d.size() == ranks.size()-1
    std::vector<std::vector<std::pair<int, std::size_t>>> labels;  // (object, local index)

    nlohmann::json to_json() const;
};

/// The complex whose degree-n piece is the product of the level-n values over
/// the degree-n objects; its cohomology is the cohomology of the poset.
FreeCochainComplex full_complex(const FunctorSequence& seq);

/// The same complex for a certified poset via the signed vertex-deletion
/// differential; one generator per object.
FreeCochainComplex simplicial_differential(const GradedPoset& poset, const SimplexCertificate& cert);

struct CohomologyResult {
    struct Level {
        std::size_t betti = 0;
        std::vector<Int> torsion;

        bool operator==(const Level&) const = default;
    };
    std::vector<Level> h;

    bool operator==(const CohomologyResult&) const = default;
    std::string to_string() const;
};

CohomologyResult cohomology(const FreeCochainComplex& complex);

/// Alternating sums: Betti numbers vs r-numbers over the objects per degree.
bool euler_check(const GradedPoset& poset, const std::vector<std::vector<Int>>& r, const CohomologyResult& coh);

/// Basis of the limit of level n inside the degree-n product (the kernel of
/// the outgoing differential).
IntMat level_limit_embedding(const FreeCochainComplex& complex, int n);

}  // namespace posetcoho

#endif
