#include "hullsum/geometry.hpp"

#include <algorithm>

#include "hullsum/combinations.hpp"
#include "hullsum/lp.hpp"

namespace hullsum {

using linalg::Matrix;
using linalg::Vec;

namespace {

Side sign_of(const Rational& v) {
    if (v < 0) return Side::negative;
    if (v > 0) return Side::positive;
    return Side::zero;
}

void require_nonempty(std::size_t n) {
    if (n == 0) throw Error("empty point set");
}

}  // namespace

Hyperplane::Hyperplane(Vec normal, Rational offset) : normal_(std::move(normal)), offset_(std::move(offset)) {
    if (std::all_of(normal_.begin(), normal_.end(), [](const Rational& v) { return v == 0; })) {
        throw Error("hyperplane normal must be nonzero");
    }
}

std::optional<Hyperplane> Hyperplane::through(const std::vector<Vec>& points) {
    if (points.empty()) return std::nullopt;
    const std::size_t n = points.front().size();
    Matrix rows;
    for (std::size_t i = 1; i < points.size(); ++i) rows.push_back(linalg::sub(points[i], points[0]));
    auto normal = linalg::kernel_line(rows, n);
    if (!normal) return std::nullopt;
    Rational offset = linalg::dot(*normal, points[0]);
    return Hyperplane(std::move(*normal), std::move(offset));
}

Rational Hyperplane::evaluate(const Vec& q) const {
    if (q.size() != normal_.size()) throw Error("dimension mismatch in hyperplane evaluation");
    return linalg::dot(normal_, q) - offset_;
}

Hyperplane Hyperplane::flipped() const {
    Vec n = normal_;
    for (auto& v : n) v = -v;
    return Hyperplane(std::move(n), -offset_);
}

Hyperplane Hyperplane::normalized() const {
    Rational scale;
    for (const auto& v : normal_) {
        if (v != 0) {
            scale = abs(v);
            break;
        }
    }
    Vec n = normal_;
    for (auto& v : n) v /= scale;
    return Hyperplane(std::move(n), offset_ / scale);
}

Side side_of(const Hyperplane& h, const Vec& q) { return sign_of(h.evaluate(q)); }

Side side_of(const Hyperplane& h, const LatticePoint& q) { return side_of(h, q.to_rational()); }

std::size_t affine_dimension(const std::vector<Vec>& points) {
    require_nonempty(points.size());
    Matrix rows;
    rows.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) rows.push_back(linalg::sub(points[i], points[0]));
    return linalg::rank(std::move(rows));
}

std::size_t affine_dimension(const PointSet& p) { return affine_dimension(p.to_rational()); }

bool is_proper(const PointSet& p) { return !p.empty() && affine_dimension(p) == p.dim(); }

bool conv_contains(const std::vector<Vec>& points, const Vec& q) {
    if (points.empty()) return false;
    const std::size_t d = q.size();
    for (const auto& p : points) {
        if (p.size() != d) throw Error("dimension mismatch in hull membership test");
        if (p == q) return true;
    }
    // Columns are the points lifted by a trailing 1: sum l_i p_i = q, sum l_i = 1.
    Matrix a(d + 1, Vec(points.size()));
    for (std::size_t j = 0; j < points.size(); ++j) {
        for (std::size_t i = 0; i < d; ++i) a[i][j] = points[j][i];
        a[d][j] = 1;
    }
    Vec b = q;
    b.emplace_back(1);
    return lp::find_nonnegative_solution(a, b).has_value();
}

bool conv_contains(const PointSet& p, const LatticePoint& q) {
    require_nonempty(p.size());
    if (q.dim() != p.dim()) {
        throw Error("dimension mismatch: point " + q.to_string() + " vs set dimension " +
                    std::to_string(p.dim()));
    }
    return conv_contains(p.to_rational(), q.to_rational());
}

std::vector<std::size_t> vertex_indices(const std::vector<Vec>& points) {
    require_nonempty(points.size());
    std::vector<std::size_t> out;
    std::vector<Vec> rest;
    for (std::size_t i = 0; i < points.size(); ++i) {
        rest.clear();
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j != i) rest.push_back(points[j]);
        }
        if (!conv_contains(rest, points[i])) out.push_back(i);
    }
    return out;
}

PointSet vertex_set(const PointSet& p) {
    std::vector<LatticePoint> verts;
    for (std::size_t i : vertex_indices(p.to_rational())) verts.push_back(p[i]);
    return PointSet(p.dim(), std::move(verts));
}

std::optional<Vec> barycentric(const std::vector<Vec>& simplex, const Vec& q) {
    require_nonempty(simplex.size());
    if (affine_dimension(simplex) + 1 != simplex.size()) throw Error("degenerate simplex");
    const std::size_t d = q.size();
    Matrix a(d + 1, Vec(simplex.size()));
    for (std::size_t j = 0; j < simplex.size(); ++j) {
        if (simplex[j].size() != d) throw Error("dimension mismatch in barycentric coordinates");
        for (std::size_t i = 0; i < d; ++i) a[i][j] = simplex[j][i];
        a[d][j] = 1;
    }
    Vec b = q;
    b.emplace_back(1);
    auto res = linalg::solve(a, b);
    if (res.status != linalg::SolveStatus::unique) return std::nullopt;
    for (const auto& v : res.x) {
        if (v < 0) return std::nullopt;
    }
    return std::move(res.x);
}

std::optional<BarycentricCoords> barycentric(const PointSet& simplex, const LatticePoint& q) {
    if (q.dim() != simplex.dim()) throw Error("dimension mismatch in barycentric coordinates");
    auto coeffs = barycentric(simplex.to_rational(), q.to_rational());
    if (!coeffs) return std::nullopt;
    BarycentricCoords out;
    out.coeffs = std::move(*coeffs);
    for (std::size_t i = 0; i < simplex.size(); ++i) out.basis.push_back(i);
    return out;
}

std::vector<HullFacet> hull_facets(const std::vector<Vec>& points) {
    require_nonempty(points.size());
    const std::size_t r = points.front().size();
    std::vector<HullFacet> facets;
    std::vector<Vec> subset(r);
    std::vector<Rational> values(points.size());
    for_each_combination(points.size(), r, [&](const std::vector<std::size_t>& idx) {
        for (std::size_t i = 0; i < r; ++i) subset[i] = points[idx[i]];
        auto plane = Hyperplane::through(subset);
        if (!plane) return true;
        bool any_pos = false;
        bool any_neg = false;
        for (std::size_t i = 0; i < points.size(); ++i) {
            values[i] = plane->evaluate(points[i]);
            any_pos = any_pos || values[i] > 0;
            any_neg = any_neg || values[i] < 0;
        }
        if (any_pos && any_neg) return true;
        Hyperplane oriented = (any_pos ? plane->flipped() : *plane).normalized();
        for (const auto& f : facets) {
            if (f.plane == oriented) return true;
        }
        HullFacet facet{std::move(oriented), {}};
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (values[i] == 0) facet.incident.push_back(i);
        }
        facets.push_back(std::move(facet));
        return true;
    });
    return facets;
}

Rational simplex_volume(const std::vector<Vec>& vertices) {
    require_nonempty(vertices.size());
    const std::size_t r = vertices.size() - 1;
    Matrix m(r, Vec(r));
    for (std::size_t i = 0; i < r; ++i) m[i] = linalg::sub(vertices[i + 1], vertices[0]);
    Rational det = abs(linalg::determinant(std::move(m)));
    for (std::size_t i = 2; i <= r; ++i) det /= i;
    return det;
}

Rational hull_volume(const std::vector<Vec>& points) {
    require_nonempty(points.size());
    const std::size_t r = points.front().size();
    if (r == 1) {
        auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                            [](const Vec& a, const Vec& b) { return a[0] < b[0]; });
        return (*hi)[0] - (*lo)[0];
    }
    const Vec& apex = points.front();
    Rational total = 0;
    for (const auto& facet : hull_facets(points)) {
        if (facet.plane.evaluate(apex) == 0) continue;
        std::vector<Vec> on_facet;
        for (std::size_t i : facet.incident) on_facet.push_back(points[i]);
        const auto frame = linalg::AffineFrame::of(on_facet);
        const Rational base = hull_volume(frame.coordinates_all(on_facet));
        // Map (c, t) -> origin + E c + t (apex - origin); the cone is the
        // image of {(c, t) : c in (1 - t) F', 0 <= t <= 1}, of volume |F'| / r.
        Matrix jac(r, Vec(r));
        for (std::size_t j = 0; j + 1 < r; ++j) {
            for (std::size_t i = 0; i < r; ++i) jac[i][j] = frame.basis()[j][i];
        }
        const Vec height = linalg::sub(apex, frame.origin());
        for (std::size_t i = 0; i < r; ++i) jac[i][r - 1] = height[i];
        total += abs(linalg::determinant(std::move(jac))) * base / r;
    }
    return total;
}

PointSet lattice_points_in_hull(const PointSet& p) {
    require_nonempty(p.size());
    const std::size_t d = p.dim();
    const auto rational = p.to_rational();
    const auto frame = linalg::AffineFrame::of(rational);
    const auto intrinsic = frame.coordinates_all(rational);
    std::vector<HullFacet> facets;
    if (frame.dimension() > 0) facets = hull_facets(intrinsic);

    LatticePoint lo = p[0];
    LatticePoint hi = p[0];
    for (const auto& q : p) {
        for (std::size_t i = 0; i < d; ++i) {
            if (q[i] < lo[i]) lo[i] = q[i];
            if (q[i] > hi[i]) hi[i] = q[i];
        }
    }

    std::vector<LatticePoint> found;
    LatticePoint cur = lo;
    for (;;) {
        if (auto c = frame.coordinates(cur.to_rational())) {
            const bool inside = std::all_of(facets.begin(), facets.end(),
                                            [&](const HullFacet& f) { return f.plane.evaluate(*c) <= 0; });
            if (inside) found.push_back(cur);
        }
        // Odometer over the bounding box; last coordinate fastest gives sorted output.
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (cur[i] < hi[i]) {
                ++cur[i];
                break;
            }
            cur[i] = lo[i];
            if (i == 0) return PointSet::from_sorted_unique(d, std::move(found));
        }
    }
}

}  // namespace hullsum
