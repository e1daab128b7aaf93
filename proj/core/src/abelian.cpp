#include "posetcoho/abelian.hpp"

#include <sstream>
#include <stdexcept>

namespace posetcoho {

FGAbGroup FGAbGroup::cyclic(const Int& n) {
    IntMat r(1, 1);
    r(0, 0) = n;
    return {1, r};
}

FGAbGroup FGAbGroup::direct_sum(const FGAbGroup& other) const {
    IntMat r(gens + other.gens, relations.cols() + other.relations.cols());
    r.set_block(0, 0, relations);
    r.set_block(gens, relations.cols(), other.relations);
    return {gens + other.gens, r};
}

std::size_t FGAbGroup::free_rank() const { return gens - rank_of(relations); }

std::vector<Int> FGAbGroup::torsion() const {
    std::vector<Int> t;
    for (const Int& d : invariant_factors(relations))
        if (d > 1) t.push_back(d);
    return t;
}

bool FGAbGroup::isomorphic(const FGAbGroup& other) const {
    return free_rank() == other.free_rank() && torsion() == other.torsion();
}

std::string FGAbGroup::to_string() const {
    std::size_t b = free_rank();
    std::vector<Int> t = torsion();
    if (b == 0 && t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    if (b == 1) {
        os << "Z";
        first = false;
    } else if (b > 1) {
        os << "Z^" << b;
        first = false;
    }
    for (const Int& d : t) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return os.str();
}

FGAbGroup lattice_quotient(const IntMat& gens_lattice, const IntMat& sub) {
    if (!in_span(gens_lattice, sub))
        throw std::invalid_argument("lattice_quotient: subgroup does not lie in the span of the generators");
    return {gens_lattice.cols(), preimage_lattice(gens_lattice, sub)};
}

bool hom_well_defined(const FGAbGroup& source, const FGAbGroup& target, const IntMat& matrix) {
    if (matrix.rows() != target.gens || matrix.cols() != source.gens) return false;
    return in_span(target.relations, matrix * source.relations);
}

FGAbGroup hom_kernel(const FGAbGroup& source, const FGAbGroup& target, const IntMat& matrix) {
    // {x : matrix x in span(target rels)} / span(source rels)
    IntMat pre = preimage_lattice(matrix, target.relations);
    return lattice_quotient(pre, source.relations);
}

bool hom_injective(const FGAbGroup& source, const FGAbGroup& target, const IntMat& matrix) {
    return hom_kernel(source, target, matrix).trivial();
}

FGAbGroup hom_image(const FGAbGroup& source, const FGAbGroup& target, const IntMat& matrix) {
    return lattice_quotient(column_lattice_basis(hstack(matrix, target.relations)), target.relations);
}

}  // namespace posetcoho
