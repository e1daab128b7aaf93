#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "posetcoho/coxeter.hpp"

#include <nlohmann/json.hpp>

using namespace posetcoho;

namespace {

// Full pipeline: complex, family, reduction; returns the reduced cohomology
// after asserting the family checks out and agrees with the full complex.
CohomologyResult sphere_pipeline(const CoxeterSystem& sys, std::vector<Int> expected_bk) {
    CoxeterGroup g = enumerate_group(sys);
    CoxeterComplex cx = coxeter_complex(sys, g);
    LocalCoveringFamily local = local_family(cx.poset, cx.cert);
    FreeCochainComplex complex = full_complex(FunctorSequence::build(cx.poset, local));
    GlobalCoveringFamily fam = coxeter_family(g, cx);
    REQUIRE(check_global(complex, fam).ok());
    std::vector<Int> bk = family_betti(cx.poset, r_values(cx.poset), fam);
    CHECK(bk == expected_bk);
    ReducedComplex red = reduced_complex(complex, fam);
    CohomologyResult h = cohomology(red.complex);
    CHECK(h == cohomology(complex));
    CHECK(morse_inequalities(h, bk).ok());
    return h;
}

void check_sphere(const CohomologyResult& h, std::size_t dim) {
    REQUIRE(h.h.size() == dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) {
        CHECK(h.h[i].torsion.empty());
        std::size_t expected = (i == 0 || i == dim) ? 1 : 0;
        if (dim == 0) expected = 2;
        CHECK(h.h[i].betti == expected);
    }
}

}  // namespace

TEST_CASE("group enumeration orders and longest elements") {
    CoxeterGroup a1 = enumerate_group(fixtures::coxeter_a1());
    CHECK(a1.size() == 2);
    CHECK(a1.length[a1.w0] == 1);

    CoxeterGroup a2 = enumerate_group(fixtures::coxeter_a2());
    CHECK(a2.size() == 6);
    CHECK(a2.length[a2.w0] == 3);

    CHECK(enumerate_group(fixtures::coxeter_a1a1()).size() == 4);
    CHECK(enumerate_group(fixtures::coxeter_a3()).size() == 24);
    CHECK(enumerate_group(fixtures::coxeter_b3()).size() == 48);
    for (int m = 4; m <= 8; ++m) CHECK(enumerate_group(fixtures::coxeter_i2(m)).size() == 2 * m);

    // lengths satisfy l(ws) = l(w) +- 1 and breadth-first order is monotone
    for (std::size_t w = 0; w + 1 < a2.size(); ++w) CHECK(a2.length[w] <= a2.length[w + 1]);
    for (std::size_t w = 0; w < a2.size(); ++w)
        for (std::size_t s = 0; s < 2; ++s) {
            int d = a2.length[a2.right[w][s]] - a2.length[w];
            CHECK((d == 1 || d == -1));
        }
}

TEST_CASE("infinite groups hit the enumeration cap") {
    // the (3,3,3) triangle group is infinite
    CoxeterSystem affine = fixtures::coxeter_system({"s1", "s2", "s3"}, {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}});
    CHECK_THROWS_AS(enumerate_group(affine, 2000), std::runtime_error);
}

TEST_CASE("ascent sets and minimal coset representatives") {
    CoxeterGroup g = enumerate_group(fixtures::coxeter_a2());
    // identity ascends by every generator, the longest element by none
    CHECK(descent_set(g, 0) == std::vector<int>{0, 1});
    CHECK(descent_set(g, g.w0).empty());
    CHECK(max_descent(g, 0) == 1);
    CHECK(max_descent(g, g.w0) == -1);

    // the ascent set of s1 is {s2}
    int s1 = g.right[0][0];
    CHECK(descent_set(g, s1) == std::vector<int>{1});

    // minimal representative of (s2 s1) W_{s1} is s2
    int s2 = g.right[0][1];
    int s2s1 = g.right[s2][0];
    CHECK(minimal_rep(g, s2s1, 1u << 0) == s2);
    CHECK(minimal_rep(g, s2s1, 0u) == s2s1);
    // idempotence
    CHECK(minimal_rep(g, s2, 1u << 0) == s2);

    // coset counts: |W^I| * |W_I| = |W| for every proper I
    for (unsigned mask = 0; mask < 3; ++mask) {
        std::size_t minimal = 0;
        for (std::size_t w = 0; w < g.size(); ++w)
            if (minimal_rep(g, static_cast<int>(w), mask) == static_cast<int>(w)) ++minimal;
        std::size_t subgroup = mask == 0 ? 1 : 2;
        CHECK(minimal * subgroup == g.size());
    }
}

TEST_CASE("the hexagon of the rank-two symmetric group") {
    CoxeterSystem sys = fixtures::coxeter_a2();
    CoxeterGroup g = enumerate_group(sys);
    CoxeterComplex cx = coxeter_complex(sys, g);
    CHECK(cx.poset.size() == 12);
    CHECK(cx.poset.objects_of_degree(0).size() == 6);
    CHECK(cx.poset.objects_of_degree(1).size() == 6);
    CHECK(cx.poset.validate().ok());

    // the distinguished bottom coset: identity with the last generator free
    GlobalCoveringFamily fam = coxeter_family(g, cx);
    REQUIRE(fam.K[0].size() == 1);
    int k0 = fam.K[0][0];
    CHECK(cx.rep[k0] == 0);
    CHECK(cx.mask[k0] == 1u);  // I = {s1}: s_u = s2 stays outside
    CHECK(fam.K[1].size() == 6);

    check_sphere(sphere_pipeline(sys, {1, 1}), 1);
}

TEST_CASE("two points for the group of order two") {
    CoxeterSystem sys = fixtures::coxeter_a1();
    CoxeterGroup g = enumerate_group(sys);
    CoxeterComplex cx = coxeter_complex(sys, g);
    CHECK(cx.poset.size() == 2);
    // degenerate rank-one case: both points belong to the family
    GlobalCoveringFamily fam = coxeter_family(g, cx);
    CHECK(fam.K[0].size() == 2);
    check_sphere(sphere_pipeline(sys, {2}), 0);
}

TEST_CASE("spheres for the remaining fixtures") {
    check_sphere(sphere_pipeline(fixtures::coxeter_a1a1(), {1, 1}), 1);
    for (int m = 4; m <= 8; ++m) check_sphere(sphere_pipeline(fixtures::coxeter_i2(m), {1, 1}), 1);
    check_sphere(sphere_pipeline(fixtures::coxeter_a3(), {1, 0, 1}), 2);
    check_sphere(sphere_pipeline(fixtures::coxeter_b3(), {1, 0, 1}), 2);
}

TEST_CASE("triangle counts of the rank-three complexes") {
    CoxeterSystem sys = fixtures::coxeter_a3();
    CoxeterGroup g = enumerate_group(sys);
    CoxeterComplex cx = coxeter_complex(sys, g);
    CHECK(cx.poset.objects_of_degree(0).size() == 14);
    CHECK(cx.poset.objects_of_degree(1).size() == 36);
    CHECK(cx.poset.objects_of_degree(2).size() == 24);
    CertifyOutcome cert = certify_simplex_like(cx.poset);
    CHECK(cert.ok);
}

TEST_CASE("per-representative pairing between family cells and discarded cells") {
    for (const CoxeterSystem& sys :
         {fixtures::coxeter_a2(), fixtures::coxeter_a1a1(), fixtures::coxeter_a3(), fixtures::coxeter_b3()}) {
        CoxeterGroup g = enumerate_group(sys);
        CoxeterComplex cx = coxeter_complex(sys, g);
        GlobalCoveringFamily fam = coxeter_family(g, cx);
        int top = cx.poset.max_degree();
        std::vector<std::vector<char>> in_k(fam.K.size(), std::vector<char>(cx.poset.size(), 0));
        for (std::size_t n = 0; n < fam.K.size(); ++n)
            for (int p : fam.K[n]) in_k[n][p] = 1;
        for (std::size_t u = 0; u < g.size(); ++u) {
            if (static_cast<int>(u) == g.w0) continue;
            for (int n = 0; n + 1 <= top; ++n) {
                std::size_t gained = 0, discarded = 0;
                for (std::size_t p = 0; p < cx.poset.size(); ++p) {
                    if (cx.rep[p] != static_cast<int>(u)) continue;
                    int d = cx.poset.degree(static_cast<int>(p));
                    if (d == n + 1 && in_k[n + 1][p]) ++gained;
                    if (d == n && !in_k[n][p]) ++discarded;
                }
                CHECK(gained == discarded);
            }
        }
    }
}

TEST_CASE("coxeter system json and validation") {
    nlohmann::json j = {{"generators", {"s1", "s2"}}, {"matrix", {{1, 3}, {3, 1}}}};
    CoxeterSystem sys = CoxeterSystem::from_json(j);
    CHECK(sys.validate().ok());
    CHECK(enumerate_group(sys).size() == 6);

    CoxeterSystem bad = fixtures::coxeter_system({"s", "t"}, {{1, 3}, {4, 1}});
    CHECK_FALSE(bad.validate().ok());
    CoxeterSystem diag = fixtures::coxeter_system({"s", "t"}, {{2, 3}, {3, 1}});
    CHECK_FALSE(diag.validate().ok());
}
