#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "posetcoho/abelian.hpp"
#include "posetcoho/matrix.hpp"

#include <random>

using namespace posetcoho;

namespace {

IntMat from_rows(std::vector<std::vector<long>> rows) {
    IntMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

IntMat random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    return m;
}

}  // namespace

TEST_CASE("smith normal form reproduces the input and has dividing diagonal") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::size_t> size(0, 6);
    for (int trial = 0; trial < 60; ++trial) {
        IntMat a = random_matrix(rng, size(rng), size(rng));
        SmithForm s = smith(a, true);
        CHECK(s.u * a * s.v == s.d);
        for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) {
            if (s.diag[i + 1] != 0) CHECK(s.diag[i + 1] % s.diag[i] == 0);
        }
        for (const Int& x : s.diag) CHECK(x > 0);
        CHECK(rank_of(a) == s.rank);
        // transforms must be invertible over the integers
        CHECK(inverse_unimodular(s.u) * s.u == IntMat::identity(s.u.rows()));
        CHECK(inverse_unimodular(s.v) * s.v == IntMat::identity(s.v.rows()));
    }
}

TEST_CASE("known invariant factors") {
    IntMat a = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    std::vector<Int> inv = invariant_factors(a);
    REQUIRE(inv.size() == 3);
    CHECK(inv[0] == 2);
    CHECK(inv[1] == 2);
    CHECK(inv[2] == 156);
}

TEST_CASE("kernel basis is saturated and spans the kernel") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<std::size_t> size(0, 5);
    for (int trial = 0; trial < 60; ++trial) {
        IntMat a = random_matrix(rng, size(rng), size(rng));
        IntMat k = kernel_basis(a);
        CHECK((a * k).is_zero());
        CHECK(rank_of(k) == k.cols());
        CHECK(k.cols() == a.cols() - rank_of(a));
        // saturation: the kernel lattice has unit invariant factors
        for (const Int& f : invariant_factors(k)) CHECK(f == 1);
    }
}

TEST_CASE("solve_in_span finds exact integer preimages") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        IntMat a = random_matrix(rng, 4, 3);
        IntMat x = random_matrix(rng, 3, 2);
        IntMat b = a * x;
        auto sol = solve_in_span(a, b);
        REQUIRE(sol.has_value());
        CHECK(a * *sol == b);
    }
    IntMat two = from_rows({{2}});
    IntMat one = from_rows({{1}});
    CHECK_FALSE(solve_in_span(two, one).has_value());
    CHECK(in_span(two, from_rows({{6}})));
    CHECK_FALSE(in_span(two, from_rows({{3}})));
}

TEST_CASE("preimage lattice of a map with a relation lattice") {
    // x mod 2 = 0 under Z -(x)-> Z/2: preimage is 2Z.
    IntMat a = from_rows({{1}});
    IntMat r = from_rows({{2}});
    IntMat pre = preimage_lattice(a, r);
    IntMat expected = from_rows({{2}});
    CHECK(in_span(pre, expected));
    CHECK(in_span(expected, pre));
}

TEST_CASE("hstack and vstack shapes and content") {
    IntMat a = from_rows({{1, 2}, {3, 4}});
    IntMat b = from_rows({{5}, {6}});
    IntMat h = hstack(a, b);
    CHECK(h.rows() == 2);
    CHECK(h.cols() == 3);
    CHECK(h(0, 2) == 5);
    IntMat v = vstack(a, from_rows({{7, 8}}));
    CHECK(v.rows() == 3);
    CHECK(v(2, 1) == 8);
}

TEST_CASE("presented groups from relation lattices") {
    // Z^2 / <(2,0),(0,3)> = Z/2 + Z/3 = Z/6
    FGAbGroup g{2, from_rows({{2, 0}, {0, 3}})};
    CHECK(g.free_rank() == 0);
    REQUIRE(g.torsion().size() == 1);
    CHECK(g.torsion()[0] == 6);
    CHECK(g.isomorphic(FGAbGroup::cyclic(6)));

    FGAbGroup z{1, IntMat(1, 0)};
    CHECK(z.is_free());
    CHECK(z.free_rank() == 1);

    // Z^3 / <(1,1,1)> = Z^2
    FGAbGroup q{3, from_rows({{1}, {1}, {1}})};
    CHECK(q.free_rank() == 2);
    CHECK(q.torsion().empty());
}

TEST_CASE("lattice quotient of sublattices") {
    // L = 2Z + 4Z inside Z^2 modulo (2,4)Z: quotient Z.
    IntMat gens = from_rows({{2, 0}, {0, 4}});
    IntMat sub = from_rows({{2}, {4}});
    FGAbGroup q = lattice_quotient(gens, sub);
    CHECK(q.free_rank() == 1);
    CHECK(q.torsion().empty());
}

TEST_CASE("hom kernel and image for maps of presented groups") {
    // multiplication by 2 : Z/4 -> Z/4 has kernel Z/2 and image Z/2
    FGAbGroup z4 = FGAbGroup::cyclic(4);
    IntMat two = from_rows({{2}});
    CHECK(hom_well_defined(z4, z4, two));
    CHECK(hom_kernel(z4, z4, two).isomorphic(FGAbGroup::cyclic(2)));
    CHECK(hom_image(z4, z4, two).isomorphic(FGAbGroup::cyclic(2)));
    CHECK_FALSE(hom_injective(z4, z4, two));

    // inclusion 2Z/4Z -> Z/4 is injective and not well defined the other way
    IntMat one = from_rows({{1}});
    FGAbGroup z2 = FGAbGroup::cyclic(2);
    CHECK(hom_well_defined(z2, z4, two));
    CHECK(hom_injective(z2, z4, two));
    bool embeds_backwards = hom_well_defined(z4, z2, one) && hom_injective(z4, z2, one);
    CHECK_FALSE(embeds_backwards);
}

TEST_CASE("random multiplication agreement with a naive product") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        IntMat a = random_matrix(rng, 3, 4), b = random_matrix(rng, 4, 2);
        IntMat c = a * b;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                Int acc = 0;
                for (std::size_t k = 0; k < 4; ++k) acc += a(i, k) * b(k, j);
                CHECK(c(i, j) == acc);
            }
    }
}
