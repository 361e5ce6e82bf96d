#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "hullsum/types.hpp"

namespace test {

inline hullsum::PointSet ps(std::size_t dim, std::initializer_list<std::initializer_list<long long>> pts) {
    std::vector<hullsum::LatticePoint> out;
    for (const auto& p : pts) out.emplace_back(p);
    return hullsum::PointSet(dim, std::move(out));
}

inline hullsum::PointSet triangle(long long s) { return ps(2, {{0, 0}, {s, 0}, {0, s}}); }

/// Random distinct points with coordinates in [-c, c].
inline hullsum::PointSet random_points(std::mt19937_64& rng, std::size_t dim, std::size_t n, long long c) {
    std::uniform_int_distribution<long long> coord(-c, c);
    std::vector<hullsum::LatticePoint> pts;
    while (pts.size() < n) {
        std::vector<hullsum::Integer> v(dim);
        for (auto& x : v) x = coord(rng);
        hullsum::LatticePoint p(std::move(v));
        bool dup = false;
        for (const auto& q : pts) dup = dup || q == p;
        if (!dup) pts.push_back(std::move(p));
    }
    return hullsum::PointSet(dim, std::move(pts));
}

}  // namespace test
