#include "hullsum/types.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hullsum {

LatticePoint::LatticePoint(std::initializer_list<long long> coords) {
    coords_.reserve(coords.size());
    for (long long c : coords) coords_.emplace_back(c);
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& other) {
    if (other.dim() != dim()) throw Error("dimension mismatch in point addition");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& other) {
    if (other.dim() != dim()) throw Error("dimension mismatch in point subtraction");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
    const std::size_t n = std::min(a.dim(), b.dim());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = a.coords_[i].compare(b.coords_[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return a.dim() <=> b.dim();
}

std::vector<Rational> LatticePoint::to_rational() const {
    std::vector<Rational> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.emplace_back(c);
    return out;
}

std::string LatticePoint::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ',';
        os << coords_[i];
    }
    os << ')';
    return os.str();
}

PointSet::PointSet(std::size_t dim, std::vector<LatticePoint> points)
    : dim_(dim), points_(std::move(points)) {
    if (dim_ == 0) throw Error("point set dimension must be ≥ 1");
    for (const auto& p : points_) {
        if (p.dim() != dim_) {
            throw Error("point " + p.to_string() + " has dimension " + std::to_string(p.dim()) +
                        ", expected " + std::to_string(dim_));
        }
    }
    std::vector<std::size_t> order(points_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return points_[i] < points_[j]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (points_[order[i]] == points_[order[i - 1]]) {
            throw Error("duplicate point " + points_[order[i]].to_string());
        }
    }
}

PointSet PointSet::from_sorted_unique(std::size_t dim, std::vector<LatticePoint> points) {
    PointSet out;
    out.dim_ = dim;
    out.points_ = std::move(points);
    return out;
}

bool PointSet::contains(const LatticePoint& p) const {
    return std::find(points_.begin(), points_.end(), p) != points_.end();
}

PointSet PointSet::without(std::size_t index) const {
    PointSet out = *this;
    out.points_.erase(out.points_.begin() + static_cast<std::ptrdiff_t>(index));
    return out;
}

PointSet PointSet::sorted() const {
    PointSet out = *this;
    std::sort(out.points_.begin(), out.points_.end());
    return out;
}

PointSet PointSet::translated(const LatticePoint& t) const {
    PointSet out = *this;
    for (auto& p : out.points_) p += t;
    return out;
}

std::vector<std::vector<Rational>> PointSet::to_rational() const {
    std::vector<std::vector<Rational>> out;
    out.reserve(points_.size());
    for (const auto& p : points_) out.push_back(p.to_rational());
    return out;
}

std::size_t intersection_size(const PointSet& a, const PointSet& b) {
    std::size_t n = 0;
    for (const auto& p : a) n += b.contains(p) ? 1 : 0;
    return n;
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(q);
    if (boost::multiprecision::denominator(q) != 1) os << '/' << boost::multiprecision::denominator(q);
    return os.str();
}

}  // namespace hullsum
