#ifndef POSETCOHO_ABELIAN_HPP
#define POSETCOHO_ABELIAN_HPP

#include "posetcoho/matrix.hpp"

#include <string>
#include <vector>

namespace posetcoho {

/// Finitely generated abelian group Z^gens / column-span(relations).
struct FGAbGroup {
    std::size_t gens = 0;
    IntMat relations;  // gens x r

    FGAbGroup() : relations(0, 0) {}
    FGAbGroup(std::size_t k, IntMat rels) : gens(k), relations(std::move(rels)) {}

    static FGAbGroup free_of_rank(std::size_t k) { return {k, IntMat(k, 0)}; }
    static FGAbGroup zero() { return free_of_rank(0); }
    static FGAbGroup cyclic(const Int& n);

    FGAbGroup direct_sum(const FGAbGroup& other) const;

    std::size_t free_rank() const;
    /// Invariant factors > 1, as a divisibility chain.
    std::vector<Int> torsion() const;
    bool trivial() const { return free_rank() == 0 && torsion().empty(); }
    bool is_free() const { return torsion().empty(); }
    bool isomorphic(const FGAbGroup& other) const;

    std::string to_string() const;  // e.g. "Z^2 + Z/2 + Z/12", "0"
};

/// span(gens_lattice) / span(sub), presented on the columns of gens_lattice.
/// Requires span(sub) contained in span(gens_lattice).
FGAbGroup lattice_quotient(const IntMat& gens_lattice, const IntMat& sub);

/// Homomorphism between presented groups, as a matrix on generators.
struct GroupHom {
    IntMat matrix;  // target.gens x source.gens
};

/// matrix maps source relations into the span of target relations.
bool hom_well_defined(const FGAbGroup& source, const FGAbGroup& target, const IntMat& matrix);

/// Kernel of the induced map as an abstract group (not an embedding).
FGAbGroup hom_kernel(const FGAbGroup& source, const FGAbGroup& target, const IntMat& matrix);

bool hom_injective(const FGAbGroup& source, const FGAbGroup& target, const IntMat& matrix);

/// Image of the induced map, as a subgroup of the target.
FGAbGroup hom_image(const FGAbGroup& source, const FGAbGroup& target, const IntMat& matrix);

}  // namespace posetcoho

#endif
