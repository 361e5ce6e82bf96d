#pragma once

#include <cstddef>
#include <vector>

#include "hullsum/types.hpp"

namespace hullsum {

/// k >= 2 nonempty, duplicate-free integer sets A_1..A_k.
class SubsumInstance {
public:
    /// Throws Error if k < 2, a set is empty, or a set repeats a value.
    explicit SubsumInstance(std::vector<std::vector<Integer>> sets);

    std::size_t k() const { return sets_.size(); }
    const std::vector<std::vector<Integer>>& sets() const { return sets_; }
    /// The sets as one-dimensional point sets.
    std::vector<PointSet> as_point_sets() const;

private:
    std::vector<std::vector<Integer>> sets_;
};

/// {min A, max A}.
std::vector<Integer> endpoints(const std::vector<Integer>& a);

/// Sizes of the complete sum S = A_1+...+A_k, the leave-one-out sums S_i,
/// the sums S_i' with A_i replaced by its reduced set A_i', and their union S'.
/// A_i' is {min, max} in dimension 1 and vert A_i in general.
struct SubsumSizes {
    std::size_t size_s = 0;
    std::size_t size_s_prime = 0;
    std::vector<std::size_t> sizes_si;
    std::vector<std::size_t> sizes_si_prime;
    bool s_prime_subset_of_s = true;

    std::size_t sum_si() const;
};

SubsumSizes subsum_sizes(const std::vector<PointSet>& sets);

struct SubsumReport {
    SubsumSizes sizes;
    Rational bound;  // (sum |S_i| - 1) / (k - 1)
    bool left_holds = false;   // |S| >= |S'|
    bool right_holds = false;  // |S'| >= bound
    bool chain_satisfied = false;
};

SubsumReport subsum_report(const SubsumInstance& instance);

}  // namespace hullsum
