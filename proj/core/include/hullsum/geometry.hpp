#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hullsum/linalg.hpp"
#include "hullsum/types.hpp"

namespace hullsum {

/// Convex coefficients of a point with respect to an ordered vertex list.
struct BarycentricCoords {
    std::vector<Rational> coeffs;
    std::vector<std::size_t> basis;  // indices into the vertex list
};

enum class Side { negative, zero, positive };

/// Affine hyperplane {x : <normal, x> = offset}.
class Hyperplane {
public:
    Hyperplane(linalg::Vec normal, Rational offset);

    /// Hyperplane through `points` (r points spanning an (r-1)-flat in R^r),
    /// or std::nullopt when they do not determine a unique hyperplane.
    static std::optional<Hyperplane> through(const std::vector<linalg::Vec>& points);

    const linalg::Vec& normal() const { return normal_; }
    const Rational& offset() const { return offset_; }
    Rational evaluate(const linalg::Vec& q) const;
    Hyperplane flipped() const;

    /// Scaled so the first nonzero normal entry is +-1; equal hyperplanes with
    /// equal orientation compare equal after normalisation.
    Hyperplane normalized() const;
    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;

private:
    linalg::Vec normal_;
    Rational offset_;
};

Side side_of(const Hyperplane& h, const LatticePoint& q);
Side side_of(const Hyperplane& h, const linalg::Vec& q);

std::size_t affine_dimension(const PointSet& p);
std::size_t affine_dimension(const std::vector<linalg::Vec>& points);

/// True iff `p` is not contained in any affine hyperplane of its ambient space.
bool is_proper(const PointSet& p);

bool conv_contains(const PointSet& p, const LatticePoint& q);
bool conv_contains(const std::vector<linalg::Vec>& points, const linalg::Vec& q);

/// Points of `p` outside the hull of the remaining points, in input order.
PointSet vertex_set(const PointSet& p);
std::vector<std::size_t> vertex_indices(const std::vector<linalg::Vec>& points);

/// Barycentric coordinates of q in the simplex spanned by `simplex`, or
/// std::nullopt when q lies outside it. Throws Error("degenerate simplex")
/// if the vertices are affinely dependent.
std::optional<BarycentricCoords> barycentric(const PointSet& simplex, const LatticePoint& q);
std::optional<linalg::Vec> barycentric(const std::vector<linalg::Vec>& simplex, const linalg::Vec& q);

/// A supporting hyperplane of a full-dimensional point list, oriented so the
/// hull lies on the nonpositive side, together with the points on it.
struct HullFacet {
    Hyperplane plane;
    std::vector<std::size_t> incident;
};

/// Facets of conv(points) by brute-force enumeration of affinely independent
/// subsets. Requires the points to span their ambient space.
std::vector<HullFacet> hull_facets(const std::vector<linalg::Vec>& points);

/// |det| / r! for r+1 vertices in R^r.
Rational simplex_volume(const std::vector<linalg::Vec>& vertices);

/// Volume of conv(points) for full-dimensional points, computed from the
/// facet description by recursive coning. Independent of any triangulation.
Rational hull_volume(const std::vector<linalg::Vec>& points);

/// All lattice points of conv(p), sorted lexicographically.
PointSet lattice_points_in_hull(const PointSet& p);

}  // namespace hullsum
