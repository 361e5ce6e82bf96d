#include "hullsum/linalg.hpp"

#include <utility>

namespace hullsum::linalg {

std::vector<std::size_t> row_reduce(Matrix& m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const Rational inv = 1 / m[row][col];
        for (auto& v : m[row]) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m) {
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    return row_reduce(m, cols).size();
}

Rational determinant(Matrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

SolveResult solve(const Matrix& a, const Vec& b) {
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    Matrix aug = a;
    for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
    const auto pivots = row_reduce(aug, cols);
    for (std::size_t r = pivots.size(); r < aug.size(); ++r) {
        if (aug[r][cols] != 0) return {SolveStatus::inconsistent, {}};
    }
    if (pivots.size() < cols) return {SolveStatus::underdetermined, {}};
    Vec x(cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    return {SolveStatus::unique, std::move(x)};
}

std::optional<Vec> kernel_line(const Matrix& rows, std::size_t cols) {
    Matrix m = rows;
    const auto pivots = row_reduce(m, cols);
    if (pivots.size() + 1 != cols) return std::nullopt;
    std::size_t free_col = 0;
    for (std::size_t p = 0; free_col < cols; ++free_col) {
        if (p < pivots.size() && pivots[p] == free_col) {
            ++p;
            continue;
        }
        break;
    }
    Vec v(cols);
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free_col];
    return v;
}

Rational dot(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

AffineFrame AffineFrame::of(const std::vector<Vec>& points) {
    AffineFrame f;
    if (points.empty()) return f;
    const std::size_t n = points.front().size();
    f.origin_ = points.front();

    // Greedy basis selection in input order keeps the frame deterministic.
    Matrix echelon;
    for (std::size_t i = 1; i < points.size() && f.basis_.size() < n; ++i) {
        Vec diff = sub(points[i], f.origin_);
        Matrix trial = echelon;
        trial.push_back(diff);
        if (rank(trial) > echelon.size()) {
            echelon = std::move(trial);
            f.basis_.push_back(std::move(diff));
        }
    }

    if (f.basis_.size() == n) {
        f.identity_ = true;
        f.origin_.assign(n, Rational(0));
        f.basis_.assign(n, Vec(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) f.basis_[i][i] = 1;
    }
    f.transpose_.assign(n, Vec(f.basis_.size()));
    for (std::size_t j = 0; j < f.basis_.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) f.transpose_[i][j] = f.basis_[j][i];
    }
    return f;
}

std::optional<Vec> AffineFrame::coordinates(const Vec& p) const {
    if (identity_) return p;
    const Vec rhs = sub(p, origin_);
    if (basis_.empty()) {
        for (const auto& v : rhs) {
            if (v != 0) return std::nullopt;
        }
        return Vec{};
    }
    auto res = solve(transpose_, rhs);
    if (res.status != SolveStatus::unique) return std::nullopt;
    return std::move(res.x);
}

std::vector<Vec> AffineFrame::coordinates_all(const std::vector<Vec>& points) const {
    std::vector<Vec> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        auto c = coordinates(p);
        if (!c) throw Error("point lies outside the affine frame");
        out.push_back(std::move(*c));
    }
    return out;
}

}  // namespace hullsum::linalg
