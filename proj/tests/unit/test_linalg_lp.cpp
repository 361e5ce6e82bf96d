#include <doctest.h>

#include <random>

#include "hullsum/linalg.hpp"
#include "hullsum/lp.hpp"

using hullsum::Rational;
using namespace hullsum::linalg;

namespace {

Matrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
    Matrix m;
    for (const auto& r : rows) {
        Vec v;
        for (long long x : r) v.emplace_back(x);
        m.push_back(std::move(v));
    }
    return m;
}

Vec int_vec(std::initializer_list<long long> xs) {
    Vec v;
    for (long long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("rank and determinant") {
    CHECK(rank(int_matrix({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(int_matrix({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}})) == 2);
    CHECK(determinant(int_matrix({{2, 0}, {0, 3}})) == 6);
    CHECK(determinant(int_matrix({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(int_matrix({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("solve distinguishes unique, inconsistent and underdetermined systems") {
    auto r = solve(int_matrix({{1, 1}, {1, -1}}), int_vec({3, 1}));
    REQUIRE(r.status == SolveStatus::unique);
    CHECK(r.x == int_vec({2, 1}));

    CHECK(solve(int_matrix({{1, 1}, {1, 1}}), int_vec({1, 2})).status == SolveStatus::inconsistent);
    CHECK(solve(int_matrix({{1, 1}}), int_vec({1})).status == SolveStatus::underdetermined);

    // Overdetermined but consistent.
    auto over = solve(int_matrix({{1, 0}, {0, 1}, {1, 1}}), int_vec({1, 2, 3}));
    REQUIRE(over.status == SolveStatus::unique);
    CHECK(over.x == int_vec({1, 2}));
}

TEST_CASE("kernel_line returns a normal for a hyperplane") {
    auto n = kernel_line(int_matrix({{1, -1, 0}, {1, 0, -1}}), 3);
    REQUIRE(n);
    CHECK(dot(*n, int_vec({1, -1, 0})) == 0);
    CHECK(dot(*n, int_vec({1, 0, -1})) == 0);
    CHECK(!kernel_line(int_matrix({{1, 0, 0}}), 3));
}

TEST_CASE("affine frame coordinates") {
    // Points on the plane z = 1 inside R^3.
    const std::vector<Vec> pts{int_vec({0, 0, 1}), int_vec({2, 0, 1}), int_vec({0, 2, 1})};
    const auto frame = AffineFrame::of(pts);
    CHECK(frame.dimension() == 2);
    CHECK(!frame.is_identity());
    auto c = frame.coordinates(int_vec({1, 1, 1}));
    REQUIRE(c);
    CHECK(*c == Vec{Rational(1, 2), Rational(1, 2)});
    CHECK(!frame.coordinates(int_vec({1, 1, 2})));

    const auto full = AffineFrame::of({int_vec({0, 0}), int_vec({1, 0}), int_vec({0, 1})});
    CHECK(full.is_identity());
    CHECK(*full.coordinates(int_vec({5, -3})) == int_vec({5, -3}));
}

TEST_CASE("phase-1 simplex finds feasible points or proves infeasibility") {
    using hullsum::lp::find_nonnegative_solution;
    CHECK(!find_nonnegative_solution(int_matrix({{1, 1}}), int_vec({-1})));
    CHECK(!find_nonnegative_solution(int_matrix({{1, 1}, {1, 1}}), int_vec({1, 2})));

    auto x = find_nonnegative_solution(int_matrix({{1, 2, 3}, {1, 1, 1}}), int_vec({2, 1}));
    REQUIRE(x);
    CHECK((*x)[0] + 2 * (*x)[1] + 3 * (*x)[2] == 2);
    CHECK((*x)[0] + (*x)[1] + (*x)[2] == 1);

    // Highly degenerate system: many zero right-hand sides.
    auto deg = find_nonnegative_solution(int_matrix({{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {1, 1, 1, 1}}),
                                         int_vec({0, 0, 0, 4}));
    REQUIRE(deg);
    CHECK(*deg == int_vec({1, 1, 1, 1}));
}

TEST_CASE("phase-1 simplex on random systems with a planted solution") {
    using hullsum::lp::find_nonnegative_solution;
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> val(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + trial % 4;
        const std::size_t cols = 2 + trial % 5;
        Matrix a(rows, Vec(cols));
        Vec planted(cols);
        for (auto& v : planted) v = val(rng);
        Vec b(rows, Rational(0));
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                a[i][j] = coef(rng);
                b[i] += a[i][j] * planted[j];
            }
        }
        auto x = find_nonnegative_solution(a, b);
        REQUIRE(x);
        for (const auto& v : *x) CHECK(v >= 0);
        for (std::size_t i = 0; i < rows; ++i) CHECK(dot(a[i], *x) == b[i]);
    }
}
