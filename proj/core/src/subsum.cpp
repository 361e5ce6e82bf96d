#include "hullsum/subsum.hpp"

#include <algorithm>
#include <numeric>

#include "hullsum/geometry.hpp"
#include "hullsum/sumset.hpp"

namespace hullsum {

SubsumInstance::SubsumInstance(std::vector<std::vector<Integer>> sets) : sets_(std::move(sets)) {
    if (sets_.size() < 2) throw Error("k must be ≥ 2 (bound divides by k−1)");
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        if (sets_[i].empty()) throw Error("set A_" + std::to_string(i + 1) + " is empty");
        auto sorted = sets_[i];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw Error("set A_" + std::to_string(i + 1) + " repeats a value");
        }
    }
}

std::vector<PointSet> SubsumInstance::as_point_sets() const {
    std::vector<PointSet> out;
    for (const auto& s : sets_) {
        std::vector<LatticePoint> pts;
        for (const auto& v : s) pts.emplace_back(std::vector<Integer>{v});
        out.emplace_back(1, std::move(pts));
    }
    return out;
}

std::vector<Integer> endpoints(const std::vector<Integer>& a) {
    if (a.empty()) throw Error("empty set has no endpoints");
    auto [lo, hi] = std::minmax_element(a.begin(), a.end());
    if (*lo == *hi) return {*lo};
    return {*lo, *hi};
}

std::size_t SubsumSizes::sum_si() const { return std::accumulate(sizes_si.begin(), sizes_si.end(), std::size_t{0}); }

namespace {

PointSet reduced(const PointSet& a) {
    if (a.dim() != 1) return vertex_set(a);
    std::vector<Integer> values;
    for (const auto& p : a) values.push_back(p[0]);
    std::vector<LatticePoint> pts;
    for (const auto& v : endpoints(values)) pts.emplace_back(std::vector<Integer>{v});
    return PointSet(1, std::move(pts));
}

}  // namespace

SubsumSizes subsum_sizes(const std::vector<PointSet>& sets) {
    if (sets.size() < 2) throw Error("k must be ≥ 2 (bound divides by k−1)");
    SubsumSizes out;
    std::vector<LatticePoint> union_points;
    PointSet full;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::vector<PointSet> others;
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (j != i) others.push_back(sets[j]);
        }
        const PointSet si = sum_of(others).points;
        const PointSet si_prime = sumset(si, reduced(sets[i])).points;
        if (i == 0) full = sumset(si, sets[0]).points;
        out.sizes_si.push_back(si.size());
        out.sizes_si_prime.push_back(si_prime.size());
        union_points.insert(union_points.end(), si_prime.begin(), si_prime.end());
    }
    std::sort(union_points.begin(), union_points.end());
    union_points.erase(std::unique(union_points.begin(), union_points.end()), union_points.end());
    out.size_s = full.size();
    out.size_s_prime = union_points.size();
    out.s_prime_subset_of_s = std::includes(full.begin(), full.end(), union_points.begin(), union_points.end());
    return out;
}

SubsumReport subsum_report(const SubsumInstance& instance) {
    SubsumReport r;
    r.sizes = subsum_sizes(instance.as_point_sets());
    const std::size_t k = instance.k();
    r.bound = Rational(Integer(r.sizes.sum_si()) - 1, Integer(k - 1));
    r.left_holds = r.sizes.size_s >= r.sizes.size_s_prime;
    r.right_holds = Rational(r.sizes.size_s_prime) >= r.bound;
    r.chain_satisfied = r.left_holds && r.right_holds;
    return r;
}

}  // namespace hullsum
