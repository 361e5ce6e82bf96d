#pragma once

#include <cstddef>
#include <optional>

#include "hullsum/linalg.hpp"

namespace hullsum::lp {

struct FeasibilityStats {
    std::size_t pivots = 0;
};

/// Phase-1 simplex over the rationals with Bland's smallest-index rule.
/// Returns some x >= 0 with a x = b, or std::nullopt when none exists.
std::optional<linalg::Vec> find_nonnegative_solution(const linalg::Matrix& a, const linalg::Vec& b,
                                                     FeasibilityStats* stats = nullptr);

}  // namespace hullsum::lp
