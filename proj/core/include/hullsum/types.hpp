#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace hullsum {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Base class for every error raised by the library. Messages name the
/// violated precondition so the CLI can print them verbatim.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A theorem hypothesis does not hold for the given instance.
class HypothesisError : public Error {
public:
    explicit HypothesisError(const std::string& what) : Error(what) {}
};

/// Integer coordinate vector. Ordering is lexicographic on coordinates.
class LatticePoint {
public:
    LatticePoint() = default;
    explicit LatticePoint(std::vector<Integer> coords) : coords_(std::move(coords)) {}
    LatticePoint(std::initializer_list<long long> coords);

    std::size_t dim() const { return coords_.size(); }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    Integer& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Integer>& coords() const { return coords_; }

    LatticePoint& operator+=(const LatticePoint& other);
    LatticePoint& operator-=(const LatticePoint& other);
    friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
    friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.coords_ == b.coords_; }
    friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b);

    std::vector<Rational> to_rational() const;
    std::string to_string() const;

private:
    std::vector<Integer> coords_;
};

/// Ordered, duplicate-free list of lattice points of a common dimension.
class PointSet {
public:
    PointSet() = default;
    /// Throws Error on dimension mismatch or duplicate points.
    PointSet(std::size_t dim, std::vector<LatticePoint> points);

    static PointSet from_sorted_unique(std::size_t dim, std::vector<LatticePoint> points);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const LatticePoint& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<LatticePoint>& points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    bool contains(const LatticePoint& p) const;
    PointSet without(std::size_t index) const;
    PointSet sorted() const;
    PointSet translated(const LatticePoint& t) const;
    std::vector<std::vector<Rational>> to_rational() const;

    friend bool operator==(const PointSet& a, const PointSet& b) = default;

private:
    std::size_t dim_ = 0;
    std::vector<LatticePoint> points_;
};

/// Number of elements of `a` that also lie in `b`.
std::size_t intersection_size(const PointSet& a, const PointSet& b);

std::string to_string(const Rational& q);

}  // namespace hullsum
