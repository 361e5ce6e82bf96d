#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hullsum/types.hpp"

// Exact rational linear algebra on small dense matrices (desk scale: a handful
// of rows and columns). Matrices are row-major vectors of rows.

namespace hullsum::linalg {

using Vec = std::vector<Rational>;
using Matrix = std::vector<Vec>;

/// Reduces `m` in place to reduced row echelon form, pivoting only within the
/// first `pivot_cols` columns. Returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t pivot_cols);

std::size_t rank(Matrix m);

Rational determinant(Matrix m);

enum class SolveStatus { unique, inconsistent, underdetermined };

struct SolveResult {
    SolveStatus status;
    Vec x;  // set iff status == unique
};

/// Solves a x = b for an arbitrary (possibly non-square) system.
SolveResult solve(const Matrix& a, const Vec& b);

/// Nonzero vector spanning the kernel of `rows` when that kernel is
/// one-dimensional; std::nullopt otherwise.
std::optional<Vec> kernel_line(const Matrix& rows, std::size_t cols);

Rational dot(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);

/// Exact affine coordinate system for the affine hull of a point list.
/// When the points span the ambient space the frame is the identity, so
/// intrinsic volumes coincide with ordinary volumes.
class AffineFrame {
public:
    static AffineFrame of(const std::vector<Vec>& points);

    std::size_t dimension() const { return basis_.size(); }
    std::size_t ambient() const { return origin_.size(); }
    bool is_identity() const { return identity_; }
    const Vec& origin() const { return origin_; }
    const Matrix& basis() const { return basis_; }

    /// Intrinsic coordinates of `p`, or std::nullopt when p is off the hull.
    std::optional<Vec> coordinates(const Vec& p) const;
    std::vector<Vec> coordinates_all(const std::vector<Vec>& points) const;

private:
    Vec origin_;
    Matrix basis_;     // basis vectors in ambient coordinates
    Matrix transpose_; // ambient x dimension system for coordinate solves
    bool identity_ = false;
};

}  // namespace hullsum::linalg
