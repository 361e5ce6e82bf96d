#include "hullsum/lp.hpp"

#include <limits>
#include <vector>

namespace hullsum::lp {

using linalg::Matrix;
using linalg::Vec;

std::optional<Vec> find_nonnegative_solution(const Matrix& a, const Vec& b, FeasibilityStats* stats) {
    const std::size_t rows = a.size();
    const std::size_t n = rows ? a.front().size() : 0;
    if (rows == 0) return Vec(n, Rational(0));

    // Columns: n structural variables, then one artificial per row, then rhs.
    const std::size_t width = n + rows;
    Matrix tab(rows, Vec(width + 1, Rational(0)));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = flip ? -a[i][j] : a[i][j];
        tab[i][n + i] = 1;
        tab[i][width] = flip ? -b[i] : b[i];
        basis[i] = n + i;
    }

    // Reduced costs for minimising the artificial sum; last entry holds -objective.
    Vec cost(width + 1, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) cost[j] -= tab[i][j];
        cost[width] -= tab[i][width];
    }

    std::size_t pivots = 0;
    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < width; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) break;

        std::size_t leave = rows;
        Rational best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rational ratio = tab[i][width] / tab[i][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = std::move(ratio);
            }
        }
        // Phase 1 is bounded below by zero, so an entering column always has a
        // positive entry.
        if (leave == rows) break;

        const Rational inv = 1 / tab[leave][enter];
        for (auto& v : tab[leave]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            const Rational f = tab[i][enter];
            for (std::size_t j = 0; j <= width; ++j) tab[i][j] -= f * tab[leave][j];
        }
        if (cost[enter] != 0) {
            const Rational f = cost[enter];
            for (std::size_t j = 0; j <= width; ++j) cost[j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
        ++pivots;
    }
    if (stats) stats->pivots = pivots;

    if (cost[width] != 0) return std::nullopt;
    Vec x(n, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) {
        if (basis[i] < n) x[basis[i]] = tab[i][width];
    }
    return x;
}

}  // namespace hullsum::lp
