// Shared fixtures for the test suite: small posets, functors and families
// with independently known invariants.

#ifndef POSETCOHO_TEST_FIXTURES_HPP
#define POSETCOHO_TEST_FIXTURES_HPP

#include "posetcoho/coxeter.hpp"
#include "posetcoho/morse.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using namespace posetcoho;

// Three-layer complete bipartite poset: two objects in each of degrees
// 2, 1, 0, with every cross-layer pair related. Realizes the 2-sphere.
inline GradedPoset bipartite222() {
    std::vector<std::string> ids = {"a2", "b2", "a1", "b1", "a0", "b0"};
    std::vector<int> deg = {2, 2, 1, 1, 0, 0};
    std::vector<std::pair<std::string, std::string>> rel;
    for (const std::string& top : {"a2", "b2"})
        for (const std::string& mid : {"a1", "b1"}) rel.emplace_back(top, mid);
    for (const std::string& mid : {"a1", "b1"})
        for (const std::string& bot : {"a0", "b0"}) rel.emplace_back(mid, bot);
    return GradedPoset(ids, deg, rel);
}

// Functor on bipartite222 with cyclic values Z/2 -> Z/4 -> Z/12; the arrows
// into degree 1 multiply by 2, the arrows into a0 by 3 and into b0 by 6.
// Known invariants: lim = Z/2 and lim^1 = Z/2.
inline CoefFunctor cyclic_tower(const GradedPoset& p) {
    std::vector<FGAbGroup> values(6);
    values[p.index("a2")] = FGAbGroup::cyclic(2);
    values[p.index("b2")] = FGAbGroup::cyclic(2);
    values[p.index("a1")] = FGAbGroup::cyclic(4);
    values[p.index("b1")] = FGAbGroup::cyclic(4);
    values[p.index("a0")] = FGAbGroup::cyclic(12);
    values[p.index("b0")] = FGAbGroup::cyclic(12);
    auto scalar = [](long v) {
        IntMat m(1, 1);
        m(0, 0) = v;
        return m;
    };
    std::map<std::pair<int, int>, IntMat> arrows;
    for (const char* top : {"a2", "b2"})
        for (const char* mid : {"a1", "b1"}) arrows[{p.index(top), p.index(mid)}] = scalar(2);
    for (const char* mid : {"a1", "b1"}) {
        arrows[{p.index(mid), p.index("a0")}] = scalar(3);
        arrows[{p.index(mid), p.index("b0")}] = scalar(6);
    }
    return CoefFunctor(p, std::move(values), std::move(arrows));
}

// Three-layer complete bipartite poset with layers {a,b}, {c,d,e}, {f,g,h};
// realizes a wedge of four 2-spheres.
inline GradedPoset bipartite233() {
    std::vector<std::string> ids = {"a", "b", "c", "d", "e", "f", "g", "h"};
    std::vector<int> deg = {2, 2, 1, 1, 1, 0, 0, 0};
    std::vector<std::pair<std::string, std::string>> rel;
    for (const std::string& top : {"a", "b"})
        for (const std::string& mid : {"c", "d", "e"}) rel.emplace_back(top, mid);
    for (const std::string& mid : {"c", "d", "e"})
        for (const std::string& bot : {"f", "g", "h"}) rel.emplace_back(mid, bot);
    return GradedPoset(ids, deg, rel);
}

// Local covering family on bipartite233 used throughout: singleton chains
// a > c > f and b > e > h, plus d > g.
inline LocalCoveringFamily bipartite233_family(const GradedPoset& p) {
    LocalCoveringFamily fam;
    fam.J.assign(p.size(), {});
    auto set = [&](const char* obj, std::vector<std::vector<const char*>> levels) {
        auto& slot = fam.J[p.index(obj)];
        slot.clear();
        for (const auto& level : levels) {
            std::vector<int> members;
            for (const char* id : level) members.push_back(p.index(id));
            slot.push_back(members);
        }
    };
    set("f", {{"f"}});
    set("g", {{"g"}});
    set("h", {{"h"}});
    set("c", {{"f"}, {"c"}});
    set("d", {{"g"}, {"d"}});
    set("e", {{"h"}, {"e"}});
    set("a", {{"f"}, {"c"}, {"a"}});
    set("b", {{"h"}, {"e"}, {"b"}});
    return fam;
}

// Free rank-one functor on bipartite233 whose arrows through d are -1 and all
// other arrows +1. Known derived limits: Z, 0, Z^4.
inline CoefFunctor signed_rank_one(const GradedPoset& p) {
    std::vector<FGAbGroup> values(p.size(), FGAbGroup::free_of_rank(1));
    auto scalar = [](long v) {
        IntMat m(1, 1);
        m(0, 0) = v;
        return m;
    };
    std::map<std::pair<int, int>, IntMat> arrows;
    for (const char* top : {"a", "b"})
        for (const char* mid : {"c", "d", "e"})
            arrows[{p.index(top), p.index(mid)}] = scalar(mid[0] == 'd' ? -1 : 1);
    for (const char* mid : {"c", "d", "e"})
        for (const char* bot : {"f", "g", "h"})
            arrows[{p.index(mid), p.index(bot)}] = scalar(mid[0] == 'd' ? -1 : 1);
    return CoefFunctor(p, std::move(values), std::move(arrows));
}

// Triangulation of the real projective plane with two cells over each face
// of a triangle: vertices u,v,x; edges a,d between u,v; b,f between u,x;
// c,e between v,x; triangles A{a,b,c}, B{a,e,f}, C{b,d,e}, D{c,d,f}.
// Cohomology: Z, 0, Z/2.
inline GradedPoset projective_plane() {
    std::vector<std::string> ids = {"u", "v", "x", "a", "b", "c", "d", "e", "f", "A", "B", "C", "D"};
    std::vector<int> deg = {0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2};
    std::vector<std::pair<std::string, std::string>> rel = {
        {"a", "u"}, {"a", "v"}, {"d", "u"}, {"d", "v"},
        {"b", "u"}, {"b", "x"}, {"f", "u"}, {"f", "x"},
        {"c", "v"}, {"c", "x"}, {"e", "v"}, {"e", "x"},
        {"A", "a"}, {"A", "b"}, {"A", "c"},
        {"B", "a"}, {"B", "e"}, {"B", "f"},
        {"C", "b"}, {"C", "d"}, {"C", "e"},
        {"D", "c"}, {"D", "d"}, {"D", "f"},
    };
    return GradedPoset(ids, deg, rel);
}

// Global covering family on projective_plane with one critical cell per
// degree: K_0 = {x}, K_1 = {d,e,f}, K_2 = everything.
inline GlobalCoveringFamily projective_plane_family(const GradedPoset& p) {
    GlobalCoveringFamily fam;
    fam.K.resize(3);
    fam.K[0] = {p.index("x")};
    fam.K[1] = {p.index("d"), p.index("e"), p.index("f")};
    fam.K[2] = {p.index("A"), p.index("B"), p.index("C"), p.index("D")};
    for (auto& level : fam.K) std::sort(level.begin(), level.end());
    return fam;
}

// Boundary of the triangle on vertices v0,v1,v2 (a circle).
inline GradedPoset circle() {
    return complex_from_facets({{"v0", "v1"}, {"v0", "v2"}, {"v1", "v2"}});
}

// Full triangle (a disk).
inline GradedPoset disk() { return complex_from_facets({{"v0", "v1", "v2"}}); }

// Boundary of the tetrahedron on four vertices: a simplicial 2-sphere.
inline GradedPoset sphere() {
    return complex_from_facets(
        {{"t0", "t1", "t2"}, {"t0", "t1", "t3"}, {"t0", "t2", "t3"}, {"t1", "t2", "t3"}});
}

inline Rational rat(long v) { return Rational(v); }

// Morse function on the circle with one critical vertex and one critical
// edge.
inline MorseFunction circle_morse() {
    MorseFunction mf;
    mf.poset = circle();
    mf.f.assign(mf.poset.size(), Rational(0));
    auto set = [&](const char* id, long v) { mf.f[mf.poset.index(id)] = Rational(v); };
    set("v0", 0);
    set("v1", 1);
    set("v2", 2);
    set("v0 v1", 1);
    set("v0 v2", 2);
    set("v1 v2", 3);
    return mf;
}

// Morse function on a single edge with both endpoints collapsing to v0.
inline MorseFunction path_morse() {
    MorseFunction mf;
    mf.poset = complex_from_facets({{"v0", "v1"}});
    mf.f.assign(mf.poset.size(), Rational(0));
    mf.f[mf.poset.index("v0")] = Rational(0);
    mf.f[mf.poset.index("v1")] = Rational(2);
    mf.f[mf.poset.index("v0 v1")] = Rational(1);
    return mf;
}

inline CoxeterSystem coxeter_system(std::vector<std::string> gens, std::vector<std::vector<int>> m) {
    CoxeterSystem sys;
    sys.generators = std::move(gens);
    sys.matrix = std::move(m);
    return sys;
}

inline CoxeterSystem coxeter_a1() { return coxeter_system({"s"}, {{1}}); }

inline CoxeterSystem coxeter_i2(int m) { return coxeter_system({"s", "t"}, {{1, m}, {m, 1}}); }

inline CoxeterSystem coxeter_a2() { return coxeter_i2(3); }

inline CoxeterSystem coxeter_a1a1() { return coxeter_i2(2); }

inline CoxeterSystem coxeter_a3() {
    return coxeter_system({"s1", "s2", "s3"}, {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
}

inline CoxeterSystem coxeter_b3() {
    return coxeter_system({"s1", "s2", "s3"}, {{1, 4, 2}, {4, 1, 3}, {2, 3, 1}});
}

}  // namespace fixtures

#endif
