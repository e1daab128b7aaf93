#ifndef POSETCOHO_COXETER_HPP
#define POSETCOHO_COXETER_HPP

#include "posetcoho/global.hpp"
#include "posetcoho/simplex.hpp"

#include <string>
#include <vector>

namespace posetcoho {

/// Generators in a fixed order plus the symmetric order matrix m(s,t).
struct CoxeterSystem {
    std::vector<std::string> generators;
    std::vector<std::vector<int>> matrix;

    static CoxeterSystem from_json(const nlohmann::json& j);
    ValidationReport validate() const;
};

/// A finite Coxeter group as a length-graded right-multiplication table.
/// Element 0 is the identity; indices are in breadth-first discovery order,
/// so lengths are non-decreasing.
struct CoxeterGroup {
    std::vector<int> length;
    std::vector<std::vector<int>> right;  // right[w][s] = index of w*s
    std::vector<std::pair<int, int>> via; // (parent, generator) along a shortest word; (-1,-1) for 1
    int w0 = -1;

    std::size_t size() const { return length.size(); }
    /// A shortest word for w, as generator indices.
    std::vector<int> word(int w) const;
};

/// Exact enumeration: integer matrices in the root basis for matrices with
/// entries in {2,3,4,6}, a 2m-point permutation model for rank-2 systems of
/// any order. Throws when the group exceeds max_elements (in particular when
/// it is infinite) or when the type is unsupported.
CoxeterGroup enumerate_group(const CoxeterSystem& sys, std::size_t max_elements = 100000);

/// S_u = generators extending the length of u.
std::vector<int> descent_set(const CoxeterGroup& g, int w);
/// Largest member of the descent set in generator order, -1 when empty.
int max_descent(const CoxeterGroup& g, int w);
/// Minimal-length representative of w W_I (I as a generator bitmask).
int minimal_rep(const CoxeterGroup& g, int w, unsigned i_mask);

/// The poset of proper parabolic cosets u W_I graded by |S|-|I|-1, with its
/// simplex structure. Object p corresponds to the coset rep[p] W_{mask[p]}.
struct CoxeterComplex {
    GradedPoset poset;
    SimplexCertificate cert;
    std::vector<int> rep;
    std::vector<unsigned> mask;
};

CoxeterComplex coxeter_complex(const CoxeterSystem& sys, const CoxeterGroup& g);

/// The covering family K_n = {u W_I : max descent of u outside I}, including
/// the top coset of the longest element.
GlobalCoveringFamily coxeter_family(const CoxeterGroup& g, const CoxeterComplex& cx);

}  // namespace posetcoho

#endif
