#ifndef POSETCOHO_SIMPLEX_HPP
#define POSETCOHO_SIMPLEX_HPP

#include "posetcoho/matrix.hpp"
#include "posetcoho/poset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace posetcoho {

/// Face poset of a simplicial complex, graded by dimension with arrows from
/// faces to their subfaces. Face ids are space-joined sorted vertex names.
GradedPoset complex_from_facets(const std::vector<std::vector<std::string>>& facets);
GradedPoset complex_from_json(const nlohmann::json& j);

/// Witness that every under-set is the face lattice of a simplex: for each
/// object, its vertex list (sorted by a global total order on the degree-0
/// objects) and the object realizing each nonempty vertex subset, indexed by
/// bitmask over the vertex list.
struct SimplexCertificate {
    std::vector<std::vector<int>> vertices;
    std::vector<std::vector<int>> face;  // face[p][mask]; index 0 unused (-1)
};

struct CertifyOutcome {
    bool ok = false;
    SimplexCertificate cert;
    int witness = -1;
    std::string reason;
};

/// vertex_order optionally overrides the global vertex order (default:
/// lexicographic id order); it must list every degree-0 object.
CertifyOutcome certify_simplex_like(const GradedPoset& poset, const std::vector<std::string>& vertex_order = {});

/// J[p][m] is the chosen subset of the degree-m under-set of p, 0 <= m <= deg(p).
struct LocalCoveringFamily {
    std::vector<std::vector<std::vector<int>>> J;
};

/// The adequate family of a certified poset: the m-faces containing the
/// greatest vertex.
LocalCoveringFamily local_family(const GradedPoset& poset, const SimplexCertificate& cert);

/// Covering, nesting and top-degree singleton conditions.
ValidationReport check_local_family(const GradedPoset& poset, const LocalCoveringFamily& fam);

/// r[p][n] for 0 <= n <= deg(p): r[p][0] = 1 and
/// r[p][n] = sum of r[q][n-1] over the degree-(n-1) under-set of p, minus r[p][n-1].
std::vector<std::vector<Int>> r_values(const GradedPoset& poset);

/// Closed form of the same numbers on a simplex of the given dimension.
Int r_closed_form(int deg, int m);

/// Connectivity of strict under-sets in degrees >= 2 plus the rank equations
/// tying r-numbers to the family.
ValidationReport check_adequate(const GradedPoset& poset, const LocalCoveringFamily& fam,
                                const std::vector<std::vector<Int>>& r);

}  // namespace posetcoho

#endif
