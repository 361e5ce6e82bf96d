#include "hullsum/sumset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace hullsum {

namespace {

// Every partial sum on the machine path stays below this in magnitude.
const Integer kMachineLimit = Integer(1) << 62;

struct FlatSet {
    std::size_t dim = 0;
    std::vector<std::int64_t> data;
    std::size_t size() const { return dim ? data.size() / dim : 0; }
    const std::int64_t* row(std::size_t i) const { return data.data() + i * dim; }
};

Integer max_abs(const PointSet& p) {
    Integer m = 0;
    for (const auto& q : p) {
        for (const auto& c : q.coords()) {
            if (abs(c) > m) m = abs(c);
        }
    }
    return m;
}

void require_operand(const PointSet& p) {
    if (p.empty()) throw Error("empty point set");
}

void require_same_dim(const PointSet& x, const PointSet& y) {
    if (x.dim() != y.dim()) {
        throw Error("dimension mismatch: " + std::to_string(x.dim()) + " vs " + std::to_string(y.dim()));
    }
}

bool use_machine(SumsetOptions opts, const Integer& bound) {
    const bool fits = bound < kMachineLimit;
    switch (opts.arithmetic) {
        case Arithmetic::bignum:
            return false;
        case Arithmetic::machine:
            if (!fits) throw Error("coordinates too large for machine arithmetic");
            return true;
        case Arithmetic::automatic:
            break;
    }
    return fits;
}

FlatSet to_flat(const PointSet& p) {
    FlatSet f{p.dim(), {}};
    f.data.reserve(p.size() * p.dim());
    for (const auto& q : p) {
        for (const auto& c : q.coords()) f.data.push_back(c.convert_to<std::int64_t>());
    }
    return f;
}

PointSet from_flat_sorted_unique(FlatSet f) {
    const std::size_t d = f.dim;
    std::vector<std::size_t> order(f.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(f.row(a), f.row(a) + d, f.row(b), f.row(b) + d);
    });
    std::vector<LatticePoint> pts;
    pts.reserve(order.size());
    const std::int64_t* prev = nullptr;
    for (std::size_t i : order) {
        const std::int64_t* r = f.row(i);
        if (prev && std::equal(r, r + d, prev)) continue;
        prev = r;
        std::vector<Integer> coords(r, r + d);
        pts.emplace_back(std::move(coords));
    }
    return PointSet::from_sorted_unique(d, std::move(pts));
}

using PointHashSet = std::unordered_set<LatticePoint, CanonicalPointHash>;

PointSet from_hash_set(std::size_t dim, PointHashSet&& set) {
    std::vector<LatticePoint> pts;
    pts.reserve(set.size());
    for (auto it = set.begin(); it != set.end();) {
        auto node = set.extract(it++);
        pts.push_back(std::move(node.value()));
    }
    std::sort(pts.begin(), pts.end());
    return PointSet::from_sorted_unique(dim, std::move(pts));
}

PointSet pair_sums(const PointSet& x, const PointSet& y, SumsetOptions opts) {
    const Integer bound = max_abs(x) + max_abs(y);
    const std::size_t d = x.dim();
    if (use_machine(opts, bound)) {
        const FlatSet fx = to_flat(x);
        const FlatSet fy = to_flat(y);
        FlatSet out{d, {}};
        out.data.resize(fx.size() * fy.size() * d);
        std::int64_t* dst = out.data.data();
        for (std::size_t i = 0; i < fx.size(); ++i) {
            const std::int64_t* a = fx.row(i);
            for (std::size_t j = 0; j < fy.size(); ++j) {
                const std::int64_t* b = fy.row(j);
                for (std::size_t c = 0; c < d; ++c) *dst++ = a[c] + b[c];
            }
        }
        return from_flat_sorted_unique(std::move(out));
    }
    PointHashSet set(x.size() * y.size(), CanonicalPointHash{canonical_width(bound)});
    for (const auto& a : x) {
        for (const auto& b : y) set.insert(a + b);
    }
    return from_hash_set(d, std::move(set));
}

}  // namespace

std::size_t canonical_width(const Integer& bound) {
    const Integer m = abs(bound);
    if (m == 0) return 1;
    return static_cast<std::size_t>(msb(m)) / 8 + 1;
}

std::vector<std::uint8_t> canonical_bytes(const LatticePoint& p, std::size_t width) {
    std::vector<std::uint8_t> out;
    out.reserve(p.dim() * (width + 1));
    std::vector<std::uint8_t> mag;
    for (const auto& c : p.coords()) {
        const Integer m = abs(c);
        mag.assign(m == 0 ? 0 : mpz_sizeinbase(m.backend().data(), 256), 0);
        std::size_t count = 0;
        if (!mag.empty()) mpz_export(mag.data(), &count, 1, 1, 1, 0, m.backend().data());
        mag.resize(count);
        if (mag.size() > width) throw Error("coordinate exceeds canonical encoding width");
        out.push_back(c < 0 ? 1 : 0);
        out.insert(out.end(), width - mag.size(), 0);
        out.insert(out.end(), mag.begin(), mag.end());
    }
    return out;
}

std::size_t CanonicalPointHash::operator()(const LatticePoint& p) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint8_t byte : canonical_bytes(p, width)) {
        h ^= byte;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

SumsetResult sumset(const PointSet& x, const PointSet& y, SumsetOptions opts) {
    require_operand(x);
    require_operand(y);
    require_same_dim(x, y);
    return {pair_sums(x, y, opts), {"sumset", {x.size(), y.size()}, 1}};
}

SumsetResult k_fold(const PointSet& b, std::size_t k, SumsetOptions opts) {
    if (k < 1) throw Error("k must be ≥ 1");
    require_operand(b);
    const std::size_t d = b.dim();
    const std::size_t n = b.size();
    SumsetResult result{{}, {"k_fold", {n}, k}};

    if (use_machine(opts, max_abs(b) * k)) {
        const FlatSet fb = to_flat(b);
        FlatSet out{d, {}};
        // partial[level] holds the sum of the first `level` chosen elements.
        std::vector<std::int64_t> partial((k + 1) * d, 0);
        auto descend = [&](auto&& self, std::size_t level, std::size_t start) -> void {
            const std::int64_t* base = partial.data() + level * d;
            if (level == k) {
                out.data.insert(out.data.end(), base, base + d);
                return;
            }
            std::int64_t* next = partial.data() + (level + 1) * d;
            for (std::size_t i = start; i < n; ++i) {
                const std::int64_t* v = fb.row(i);
                for (std::size_t c = 0; c < d; ++c) next[c] = base[c] + v[c];
                self(self, level + 1, i);
            }
        };
        descend(descend, 0, 0);
        result.points = from_flat_sorted_unique(std::move(out));
        return result;
    }

    PointHashSet set(0, CanonicalPointHash{canonical_width(max_abs(b) * k)});
    std::vector<LatticePoint> partial(k + 1, LatticePoint(std::vector<Integer>(d, Integer(0))));
    auto descend = [&](auto&& self, std::size_t level, std::size_t start) -> void {
        if (level == k) {
            set.insert(partial[k]);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            partial[level + 1] = partial[level] + b[i];
            self(self, level + 1, i);
        }
    };
    descend(descend, 0, 0);
    result.points = from_hash_set(d, std::move(set));
    return result;
}

SumsetResult a_plus_kb(const PointSet& a, const PointSet& b, std::size_t k, SumsetOptions opts) {
    require_operand(a);
    require_same_dim(a, b);
    const auto kb = k_fold(b, k, opts);
    return {pair_sums(a, kb.points, opts), {"a_plus_kb", {a.size(), b.size()}, k}};
}

SumsetResult sum_of(const std::vector<PointSet>& operands, SumsetOptions opts) {
    if (operands.empty()) throw Error("sum of zero operands");
    SumsetResult result{{}, {"sum", {}, 1}};
    for (const auto& p : operands) {
        require_operand(p);
        require_same_dim(operands.front(), p);
        result.provenance.operand_sizes.push_back(p.size());
    }
    PointSet acc = operands.front().sorted();
    for (std::size_t i = 1; i < operands.size(); ++i) acc = pair_sums(acc, operands[i], opts);
    result.points = std::move(acc);
    return result;
}

}  // namespace hullsum
