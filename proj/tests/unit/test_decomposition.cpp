#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "helpers.hpp"
#include "hullsum/combinations.hpp"
#include "hullsum/decomposition.hpp"
#include "hullsum/geometry.hpp"

using namespace hullsum;
using test::ps;

namespace {

using Tri = std::array<LatticePoint, 3>;

Integer cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Orders the vertices counterclockwise.
Tri ccw(Tri t) {
    if (cross(t[0], t[1], t[2]) < 0) std::swap(t[1], t[2]);
    return t;
}

// Separating axis test restricted to edge lines: two convex polygons have
// disjoint interiors iff one of their edges has the other polygon weakly on
// its outer side.
bool interiors_disjoint(const Tri& s, const Tri& t) {
    auto separates = [](const Tri& p, const Tri& q) {
        for (int e = 0; e < 3; ++e) {
            const auto& a = p[e];
            const auto& b = p[(e + 1) % 3];
            bool all_out = true;
            for (const auto& v : q) all_out = all_out && cross(a, b, v) <= 0;
            if (all_out) return true;
        }
        return false;
    };
    return separates(s, t) || separates(t, s);
}

bool strictly_inside_or_on(const Tri& t, const LatticePoint& q) {
    for (int e = 0; e < 3; ++e) {
        if (cross(t[e], t[(e + 1) % 3], q) < 0) return false;
    }
    return true;
}

std::set<std::set<LatticePoint>> as_point_sets(const Decomposition& d) {
    std::set<std::set<LatticePoint>> out;
    for (const auto& s : d.simplices) {
        std::set<LatticePoint> pts;
        for (auto i : s.vertices) pts.insert(d.ground[i]);
        out.insert(pts);
    }
    return out;
}

// Every triangulation of the planar point set whose simplices have vertices in
// the set, cover its hull (area count) and satisfy the vertex property.
std::vector<std::set<std::set<LatticePoint>>> planar_triangulations(const PointSet& p, const Integer& twice_area) {
    std::vector<Tri> tris;
    for_each_combination(p.size(), 3, [&](const std::vector<std::size_t>& idx) {
        Tri t{p[idx[0]], p[idx[1]], p[idx[2]]};
        if (cross(t[0], t[1], t[2]) != 0) tris.push_back(ccw(t));
        return true;
    });
    std::vector<std::set<std::set<LatticePoint>>> found;
    for (std::size_t r = 1; r <= tris.size(); ++r) {
        for_each_combination(tris.size(), r, [&](const std::vector<std::size_t>& idx) {
            Integer area = 0;
            for (auto i : idx) area += cross(tris[i][0], tris[i][1], tris[i][2]);
            if (area != twice_area) return true;
            for (std::size_t a = 0; a < idx.size(); ++a) {
                for (std::size_t b = a + 1; b < idx.size(); ++b) {
                    if (!interiors_disjoint(tris[idx[a]], tris[idx[b]])) return true;
                }
            }
            for (auto i : idx) {
                for (const auto& q : p) {
                    const auto& t = tris[i];
                    const bool vertex = q == t[0] || q == t[1] || q == t[2];
                    if (!vertex && strictly_inside_or_on(t, q)) return true;
                }
            }
            std::set<std::set<LatticePoint>> tri;
            for (auto i : idx) tri.insert({tris[i][0], tris[i][1], tris[i][2]});
            found.push_back(tri);
            return true;
        });
    }
    return found;
}

Decomposition fan() {
    return decompose(ps(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}}));
}

}  // namespace

TEST_CASE("decompose a triangle yields itself") {
    const auto b = ps(2, {{0, 0}, {1, 0}, {0, 1}});
    const auto d = decompose(b);
    REQUIRE(d.simplices.size() == 1);
    CHECK(d.simplices[0].vertices == std::vector<std::size_t>{0, 1, 2});
    CHECK(d.adjacency.empty());
    CHECK(check_decomposition(d).passed());
}

TEST_CASE("decompose a unit square yields two triangles sharing a diagonal") {
    const auto d = decompose(ps(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    REQUIRE(d.simplices.size() == 2);
    CHECK(d.adjacency.size() == 1);
    std::vector<std::size_t> shared;
    std::set_intersection(d.simplices[0].vertices.begin(), d.simplices[0].vertices.end(),
                          d.simplices[1].vertices.begin(), d.simplices[1].vertices.end(), std::back_inserter(shared));
    CHECK(shared.size() == 2);
    const auto check = check_decomposition(d);
    CHECK(check.passed());
    CHECK(check.cover.simplex_volume_sum == 1);
}

TEST_CASE("square plus center: decompose matches the unique valid triangulation") {
    const auto b = ps(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}});
    const auto all = planar_triangulations(b, 8);
    REQUIRE(all.size() == 1);
    CHECK(all.front().size() == 4);
    const auto d = decompose(b);
    CHECK(as_point_sets(d) == all.front());
    const auto check = check_decomposition(d);
    CHECK(check.passed());
    CHECK(check.cover.simplex_volume_sum == 4);
    CHECK(check.cover.hull_volume == 4);
}

TEST_CASE("decompose rejects tiny inputs") {
    CHECK_THROWS(decompose(ps(2, {{0, 0}})));
}

TEST_CASE("decompose in the intrinsic hull of an improper set") {
    // Four coplanar points in R^3 and a collinear triple in R^2.
    const auto planar = ps(3, {{0, 0, 1}, {2, 0, 1}, {0, 2, 1}, {2, 2, 1}});
    const auto d = decompose(planar);
    CHECK(intrinsic_dimension(d) == 2);
    CHECK(d.simplices.size() == 2);
    CHECK(check_decomposition(d).passed());

    const auto line = decompose(ps(2, {{0, 0}, {1, 1}, {3, 3}}));
    CHECK(intrinsic_dimension(line) == 1);
    CHECK(line.simplices.size() == 2);
    CHECK(check_decomposition(line).passed());
}

TEST_CASE("visible boundary faces of a triangle") {
    const auto d = decompose(test::triangle(2));
    auto faces_as_points = [&](const LatticePoint& b) {
        std::set<std::set<LatticePoint>> out;
        for (const auto& f : visible_boundary_faces(d, b)) {
            std::set<LatticePoint> pts;
            for (auto i : f.vertices) pts.insert(d.ground[i]);
            out.insert(pts);
        }
        return out;
    };
    using S = std::set<std::set<LatticePoint>>;
    CHECK(faces_as_points(LatticePoint{3, 3}) == S{{LatticePoint{2, 0}, LatticePoint{0, 2}}});
    CHECK(faces_as_points(LatticePoint{-1, 1}) == S{{LatticePoint{0, 0}, LatticePoint{0, 2}}});
    // (3,-1) lies on the line x+y=2, so only the bottom edge strictly separates it.
    CHECK(faces_as_points(LatticePoint{3, -1}) == S{{LatticePoint{0, 0}, LatticePoint{2, 0}}});
    CHECK_THROWS_WITH(visible_boundary_faces(d, LatticePoint{1, 1}), "apex not exterior");
    CHECK_THROWS_WITH(visible_boundary_faces(d, LatticePoint{1, 0}), "apex not exterior");
}

TEST_CASE("regular position examples") {
    CHECK(verify_regular_position(decompose(ps(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}))).passed);

    Decomposition overlap{ps(2, {{0, 0}, {4, 0}, {0, 4}, {2, 0}, {6, 0}, {2, 4}}), {{{0, 1, 2}}, {{3, 4, 5}}}, {}};
    const auto r = verify_regular_position(overlap);
    CHECK(!r.passed);
    REQUIRE(r.offending_pair);
    CHECK(*r.offending_pair == std::pair<std::size_t, std::size_t>{0, 1});

    Decomposition disjoint{ps(2, {{0, 0}, {1, 0}, {0, 1}, {5, 5}, {6, 5}, {5, 6}}), {{{0, 1, 2}}, {{3, 4, 5}}}, {}};
    CHECK(verify_regular_position(disjoint).passed);
}

TEST_CASE("intersection vertices of two overlapping triangles") {
    const auto v = intersection_vertices({{0, 0}, {4, 0}, {0, 4}}, {{2, 0}, {6, 0}, {2, 4}});
    const std::vector<linalg::Vec> expected{{2, 0}, {2, 2}, {4, 0}};
    CHECK(v == expected);
    CHECK(intersection_vertices({{0, 0}, {1, 0}, {0, 1}}, {{5, 5}, {6, 5}, {5, 6}}).empty());
}

TEST_CASE("cover examples") {
    const auto square = ps(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    const auto full = decompose(square);
    const auto ok = verify_cover(full);
    CHECK(ok.passed);
    CHECK(ok.simplex_volume_sum == 1);

    Decomposition missing{square, {full.simplices.front()}, {}};
    const auto bad = verify_cover(missing);
    CHECK(!bad.passed);
    CHECK(bad.simplex_volume_sum == Rational(1, 2));
    CHECK(bad.hull_volume == 1);

    // Each fan triangle has area 1.
    const auto f = fan();
    for (const auto& s : f.simplices) {
        std::vector<linalg::Vec> verts;
        for (auto i : s.vertices) verts.push_back(f.ground[i].to_rational());
        CHECK(simplex_volume(verts) == 1);
    }
    CHECK(verify_cover(f).passed);
}

TEST_CASE("adjacency chain examples") {
    CHECK(verify_adjacency_chain(decompose(ps(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}))).passed);

    Decomposition disjoint{ps(2, {{0, 0}, {1, 0}, {0, 1}, {5, 5}, {6, 5}, {5, 6}}), {{{0, 1, 2}}, {{3, 4, 5}}}, {}};
    const auto r = verify_adjacency_chain(disjoint);
    CHECK(!r.passed);
    CHECK(!r.connected);

    // Ground indices: 0=(0,0) 1=(2,0) 2=(0,2) 3=(2,2) 4=(1,1).
    const auto ground = ps(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}});
    const Simplex bottom{{0, 1, 4}}, right{{1, 3, 4}}, top{{2, 3, 4}}, left{{0, 2, 4}};
    Decomposition rotational{ground, {bottom, right, top, left}, {}};
    rotational.adjacency = facet_adjacency(rotational.simplices, 2);
    CHECK(verify_adjacency_chain(rotational).passed);

    Decomposition scrambled{ground, {bottom, top, right, left}, {}};
    scrambled.adjacency = facet_adjacency(scrambled.simplices, 2);
    const auto s = verify_adjacency_chain(scrambled);
    CHECK(!s.passed);
    CHECK(s.connected);
    CHECK(!s.order_ok);
    REQUIRE(s.reordering);
    Decomposition reordered{ground, {}, {}};
    for (auto i : *s.reordering) reordered.simplices.push_back(scrambled.simplices[i]);
    reordered.adjacency = facet_adjacency(reordered.simplices, 2);
    CHECK(verify_adjacency_chain(reordered).passed);

    Decomposition wrong_adjacency = rotational;
    wrong_adjacency.adjacency.pop_back();
    const auto w = verify_adjacency_chain(wrong_adjacency);
    CHECK(!w.passed);
    CHECK(!w.adjacency_consistent);
}

TEST_CASE("vertex property negative control") {
    // (1,1) lies on the hypotenuse of the only simplex without being a vertex.
    Decomposition d{ps(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}}), {{{0, 1, 2}}}, {}};
    const auto r = verify_vertex_property(d);
    CHECK(!r.passed);
    REQUIRE(r.offending);
    CHECK(*r.offending == std::pair<std::size_t, std::size_t>{0, 3});
    CHECK(verify_cover(d).passed);
}

TEST_CASE("validate rejects malformed decompositions") {
    const auto g = ps(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK_THROWS(validate(Decomposition{g, {{{0, 1, 7}}}, {}}));
    CHECK_THROWS(validate(Decomposition{g, {{{0, 1, 2}}, {{0, 1, 2}}}, {}}));
    CHECK_THROWS(validate(Decomposition{ps(2, {{0, 0}, {1, 1}, {2, 2}}), {{{0, 1, 2}}}, {}}));
    CHECK_NOTHROW(validate(decompose(g)));
}

TEST_CASE("property: random decompositions pass every verifier") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 90; ++trial) {
        const std::size_t dim = 1 + trial % 3;
        const std::size_t n = std::min<std::size_t>(dim + 1 + trial % 5, 8);
        const auto b = test::random_points(rng, dim, n, 3);
        if (!is_proper(b)) continue;
        const auto d = decompose(b);
        CAPTURE(trial);
        const auto check = check_decomposition(d);
        CHECK(check.passed());
        CHECK(check.cover.simplex_volume_sum == hull_volume(b.to_rational()));
        CHECK(decompose(b) == d);
        std::vector<bool> used(b.size(), false);
        for (const auto& s : d.simplices) {
            CHECK(s.vertices.size() == dim + 1);
            for (auto i : s.vertices) used[i] = true;
        }
        CHECK(std::all_of(used.begin(), used.end(), [](bool u) { return u; }));
    }
}
