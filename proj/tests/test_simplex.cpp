#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "posetcoho/simplex.hpp"

using namespace posetcoho;

TEST_CASE("face poset from facets") {
    GradedPoset tri = fixtures::disk();
    CHECK(tri.size() == 7);  // 3 vertices, 3 edges, 1 triangle
    CHECK(tri.max_degree() == 2);
    CHECK(tri.validate().ok());
    int top = tri.index("v0 v1 v2");
    CHECK(tri.degree(top) == 2);
    CHECK(tri.under_all(top).size() == 7);

    GradedPoset circle = fixtures::circle();
    CHECK(circle.size() == 6);
    CHECK(circle.max_degree() == 1);
}

TEST_CASE("certification of simplex-like posets") {
    for (const GradedPoset& p :
         {fixtures::disk(), fixtures::circle(), fixtures::projective_plane(), fixtures::sphere()}) {
        CertifyOutcome out = certify_simplex_like(p);
        CHECK(out.ok);
        // every object records deg+1 vertices and a full face table
        for (std::size_t i = 0; i < p.size(); ++i) {
            int d = p.degree(static_cast<int>(i));
            CHECK(out.cert.vertices[i].size() == static_cast<std::size_t>(d) + 1);
            CHECK(out.cert.face[i].size() == (std::size_t{1} << (d + 1)));
            CHECK(out.cert.face[i].back() == static_cast<int>(i));
        }
    }
}

TEST_CASE("posets that are not simplex-like are refused with a witness") {
    // three vertices under a single degree-1 object: not a 1-simplex
    GradedPoset bad({"e", "x", "y", "z"}, {1, 0, 0, 0}, {{"e", "x"}, {"e", "y"}, {"e", "z"}});
    CertifyOutcome out = certify_simplex_like(bad);
    CHECK_FALSE(out.ok);
    CHECK(out.witness == bad.index("e"));
    CHECK_FALSE(out.reason.empty());

    // bipartite233: an edge with three vertices under it
    CertifyOutcome w = certify_simplex_like(fixtures::bipartite233());
    CHECK_FALSE(w.ok);
}

TEST_CASE("vertex order override changes the chosen family") {
    GradedPoset p = fixtures::disk();
    CertifyOutcome a = certify_simplex_like(p);
    CertifyOutcome b = certify_simplex_like(p, {"v2", "v1", "v0"});
    CHECK(a.ok);
    CHECK(b.ok);
    LocalCoveringFamily fa = local_family(p, a.cert);
    LocalCoveringFamily fb = local_family(p, b.cert);
    int top = p.index("v0 v1 v2");
    // default greatest vertex is v2, reversed order makes it v0
    CHECK(fa.J[top][0] == std::vector<int>{p.index("v2")});
    CHECK(fb.J[top][0] == std::vector<int>{p.index("v0")});
    CHECK(check_local_family(p, fa).ok());
    CHECK(check_local_family(p, fb).ok());

    // an incomplete override is refused with a witness
    CertifyOutcome partial = certify_simplex_like(p, {"v0"});
    CHECK_FALSE(partial.ok);
    CHECK_FALSE(partial.reason.empty());
}

TEST_CASE("local families from certificates pass the structural checks") {
    for (const GradedPoset& p : {fixtures::disk(), fixtures::circle(), fixtures::projective_plane()}) {
        CertifyOutcome out = certify_simplex_like(p);
        REQUIRE(out.ok);
        LocalCoveringFamily fam = local_family(p, out.cert);
        CHECK(check_local_family(p, fam).ok());
        CHECK(check_adequate(p, fam, r_values(p)).ok());
    }
}

TEST_CASE("r-numbers: recursion matches the closed form on simplices") {
    GradedPoset p = fixtures::disk();
    std::vector<std::vector<Int>> r = r_values(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
        int d = p.degree(static_cast<int>(i));
        for (int m = 0; m <= d; ++m) CHECK(r[i][m] == r_closed_form(d, m));
    }
    CHECK(r_closed_form(0, 0) == 1);
    CHECK(r_closed_form(1, 1) == 1);
    CHECK(r_closed_form(2, 1) == 2);
    CHECK(r_closed_form(2, 2) == 1);
    CHECK(r_closed_form(3, 2) == 3);
}

TEST_CASE("r-numbers on the wedge fixture") {
    GradedPoset p = fixtures::bipartite233();
    std::vector<std::vector<Int>> r = r_values(p);
    int a = p.index("a");
    CHECK(r[a][0] == 1);
    CHECK(r[a][1] == 2);  // three faces of degree 0, minus 1
    CHECK(r[a][2] == 4);  // 3*2 - 2
}

TEST_CASE("adequacy accepts the hand-built family on the wedge") {
    GradedPoset p = fixtures::bipartite233();
    LocalCoveringFamily fam = fixtures::bipartite233_family(p);
    CHECK(check_local_family(p, fam).ok());
    CHECK(check_adequate(p, fam, r_values(p)).ok());
}

TEST_CASE("a family violating the rank equations is flagged") {
    GradedPoset p = fixtures::bipartite233();
    LocalCoveringFamily fam = fixtures::bipartite233_family(p);
    // enlarge the degree-1 family of a: now sums of r-numbers cannot match
    fam.J[p.index("a")][1] = {p.index("c"), p.index("d")};
    ValidationReport rep = check_adequate(p, fam, r_values(p));
    CHECK_FALSE(rep.ok());
    bool found = false;
    for (const auto& issue : rep.issues)
        if (issue.rule == "rank-equation") found = true;
    CHECK(found);
}

TEST_CASE("facet input validation") {
    CHECK_THROWS_AS(complex_from_facets({{}}), std::invalid_argument);
    // repeated vertex names inside a facet collapse
    GradedPoset point = complex_from_facets({{"a", "a"}});
    CHECK(point.size() == 1);
    CHECK(point.max_degree() == 0);
}
