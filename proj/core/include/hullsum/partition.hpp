#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hullsum/decomposition.hpp"
#include "hullsum/types.hpp"

namespace hullsum {

/// A_i = A ∩ (S_i \ (S_1 ∪ ... ∪ S_{i-1})), aligned with the simplex order.
struct InducedPartition {
    Decomposition decomposition;
    std::vector<PointSet> cells;
};

/// Assigns each point of `a` to the first simplex of `d` containing it.
/// Throws HypothesisError naming the first point outside conv(ground).
InducedPartition induce_partition(const PointSet& a, const Decomposition& d);

/// Vertex set B_i of simplex i as a point set.
PointSet simplex_points(const Decomposition& d, std::size_t i);

struct DisjointSumsReport {
    bool passed = true;
    bool pairwise_disjoint = true;
    bool sum_within_total = true;
    /// |A_i ∩ B_i| <= 1 for every i > 1.
    bool later_cells_meet_vertices_at_most_once = true;
    std::optional<std::pair<std::size_t, std::size_t>> intersecting_cells;
    std::vector<std::size_t> cell_sum_sizes;  // |A_i + kB_i|, zero for empty cells
    std::size_t cell_sum_total = 0;
    std::size_t full_sum_size = 0;  // |A + kB| with A the union of the cells
};

DisjointSumsReport check_disjoint_sums(const InducedPartition& p, std::size_t k);

}  // namespace hullsum
