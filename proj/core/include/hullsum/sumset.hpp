#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hullsum/types.hpp"

namespace hullsum {

struct SumsetProvenance {
    std::string operation;                 // "sumset", "k_fold", "a_plus_kb" or "sum"
    std::vector<std::size_t> operand_sizes;
    std::size_t k = 1;
};

/// Points are sorted lexicographically and duplicate-free.
struct SumsetResult {
    PointSet points;
    SumsetProvenance provenance;
    std::size_t cardinality() const { return points.size(); }
};

enum class Arithmetic {
    automatic,  // machine words when every partial sum provably fits, else bignum
    machine,    // int64 lanes; throws Error if the bound check fails
    bignum,     // arbitrary precision with canonical-byte hashing
};

struct SumsetOptions {
    Arithmetic arithmetic = Arithmetic::automatic;
};

SumsetResult sumset(const PointSet& x, const PointSet& y, SumsetOptions opts = {});

/// kB enumerated over multisets of size k drawn from B.
SumsetResult k_fold(const PointSet& b, std::size_t k, SumsetOptions opts = {});

SumsetResult a_plus_kb(const PointSet& a, const PointSet& b, std::size_t k, SumsetOptions opts = {});

/// X_1 + ... + X_n for n >= 1 operands.
SumsetResult sum_of(const std::vector<PointSet>& operands, SumsetOptions opts = {});

/// Fixed-width encoding: per coordinate one sign byte followed by `width`
/// big-endian magnitude bytes. Throws if a coordinate needs more bytes.
std::vector<std::uint8_t> canonical_bytes(const LatticePoint& p, std::size_t width);

/// Smallest width that encodes every coordinate of magnitude <= bound.
std::size_t canonical_width(const Integer& bound);

/// FNV-1a over canonical_bytes with a fixed width.
struct CanonicalPointHash {
    std::size_t width = 8;
    std::size_t operator()(const LatticePoint& p) const;
};

}  // namespace hullsum
