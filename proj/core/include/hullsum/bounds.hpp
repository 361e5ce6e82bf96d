#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hullsum/types.hpp"

namespace hullsum {

/// C(n, r); zero when r > n.
Integer binom(std::uint64_t n, std::uint64_t r);

/// m(d+1) - d(d+1)/2, the lower bound for |A+A| with A proper d-dimensional.
Integer freiman_bound(std::uint64_t m, std::uint64_t d);

/// m C(d+k,k) - k C(d+k,k+1). May be negative, in which case it is vacuous.
Integer kfold_bound(std::uint64_t m, std::uint64_t d, std::uint64_t k);

/// The same bound in the factored form (m - kd/(k+1)) C(d+k,k).
Rational kfold_bound_factored(std::uint64_t m, std::uint64_t d, std::uint64_t k);

/// Exact |A+kB| when B is a d-simplex, A ⊂ conv B, |A| = m, |A ∩ B| = m1:
/// (m-m1) C(d+k,k) + C(d+k+1,k+1) - C(d-m1+k+1,k+1).
/// Throws Error when m1 > d+1 or m1 > m.
Integer simplex_exact_count(std::uint64_t m, std::uint64_t m1, std::uint64_t d, std::uint64_t k);

enum class Theorem {
    freiman,        // |A+A|
    vertex_sum,     // |A + vert A|
    two_sets,       // |A+B|, A ⊂ conv B
    k_fold,         // |A+kB|, A ⊂ conv B
    simplex_exact,  // |A+kB| with B a simplex; equality
    nested_chain,   // |A+B_1+...+B_k| with nested hulls
};

std::string_view to_string(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view name);

struct VerificationRecord {
    std::string instance_id;
    Theorem theorem = Theorem::freiman;
    std::uint64_t m = 0;
    std::uint64_t d = 0;
    std::uint64_t k = 1;
    std::optional<std::uint64_t> m1;  // simplex_exact only, always measured from the sets
    Integer bound;
    Integer actual;
    bool satisfied = false;
    PointSet a;
    std::vector<PointSet> b;  // empty for freiman; vert A for vertex_sum; the chain for nested_chain

    Integer slack() const { return actual - bound; }
};

/// Checks the hypotheses of `tag` (throwing HypothesisError naming the first
/// one that fails), then compares the brute-force sumset size to the bound.
VerificationRecord verify_theorem(Theorem tag, const PointSet& a, const std::optional<PointSet>& b, std::uint64_t k,
                                  std::string instance_id = {});

/// |A + B_1 + ... + B_k| against kfold_bound(|A|, d, k), for
/// A ⊂ conv B_1 ⊂ ... ⊂ conv B_k with every B_i proper.
VerificationRecord verify_nested_chain(const PointSet& a, const std::vector<PointSet>& chain,
                                       std::string instance_id = {});

}  // namespace hullsum
