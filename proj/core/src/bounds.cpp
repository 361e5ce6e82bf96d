#include "hullsum/bounds.hpp"

#include <array>

#include "hullsum/geometry.hpp"
#include "hullsum/sumset.hpp"

namespace hullsum {

Integer binom(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    Integer out = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        out *= n - r + i;
        out /= i;
    }
    return out;
}

Integer freiman_bound(std::uint64_t m, std::uint64_t d) {
    return Integer(m) * (d + 1) - Integer(d) * (d + 1) / 2;
}

Integer kfold_bound(std::uint64_t m, std::uint64_t d, std::uint64_t k) {
    return Integer(m) * binom(d + k, k) - Integer(k) * binom(d + k, k + 1);
}

Rational kfold_bound_factored(std::uint64_t m, std::uint64_t d, std::uint64_t k) {
    return (Rational(m) - Rational(Integer(k) * d, Integer(k) + 1)) * Rational(binom(d + k, k));
}

Integer simplex_exact_count(std::uint64_t m, std::uint64_t m1, std::uint64_t d, std::uint64_t k) {
    if (m1 > d + 1) throw Error("m1 = |A ∩ B| cannot exceed d+1");
    if (m1 > m) throw Error("m1 = |A ∩ B| cannot exceed m = |A|");
    return Integer(m - m1) * binom(d + k, k) + binom(d + k + 1, k + 1) - binom(d - m1 + k + 1, k + 1);
}

namespace {

constexpr std::array<std::pair<Theorem, std::string_view>, 6> kTheoremNames{{
    {Theorem::freiman, "freiman"},
    {Theorem::vertex_sum, "vertex_sum"},
    {Theorem::two_sets, "two_sets"},
    {Theorem::k_fold, "k_fold"},
    {Theorem::simplex_exact, "simplex_exact"},
    {Theorem::nested_chain, "nested_chain"},
}};

void require_proper(const PointSet& p, const std::string& name) {
    if (!is_proper(p)) throw HypothesisError(name + " not proper d-dimensional");
}

void require_inside(const PointSet& inner, const PointSet& outer, const std::string& inner_name,
                    const std::string& outer_name) {
    for (const auto& p : inner) {
        if (!conv_contains(outer, p)) {
            throw HypothesisError(inner_name + " ⊄ conv " + outer_name + " (point " + p.to_string() + ")");
        }
    }
}

}  // namespace

std::string_view to_string(Theorem t) {
    for (const auto& [tag, name] : kTheoremNames) {
        if (tag == t) return name;
    }
    return "unknown";
}

std::optional<Theorem> parse_theorem(std::string_view name) {
    for (const auto& [tag, n] : kTheoremNames) {
        if (n == name) return tag;
    }
    return std::nullopt;
}

VerificationRecord verify_theorem(Theorem tag, const PointSet& a, const std::optional<PointSet>& b, std::uint64_t k,
                                  std::string instance_id) {
    if (tag == Theorem::nested_chain) {
        if (!b) throw HypothesisError("B required for theorem nested_chain");
        return verify_nested_chain(a, {*b}, std::move(instance_id));
    }
    if (a.empty()) throw HypothesisError("A must be nonempty");
    if (k < 1) throw HypothesisError("k must be ≥ 1");

    VerificationRecord rec;
    rec.instance_id = std::move(instance_id);
    rec.theorem = tag;
    rec.m = a.size();
    rec.d = a.dim();
    rec.k = k;
    rec.a = a;
    const std::string tag_name(to_string(tag));

    switch (tag) {
        case Theorem::freiman:
        case Theorem::vertex_sum: {
            if (b) throw HypothesisError("B must be absent for theorem " + tag_name);
            if (k != 1) throw HypothesisError("k must be 1 for theorem " + tag_name);
            require_proper(a, "A");
            const PointSet other = tag == Theorem::freiman ? a : vertex_set(a);
            if (tag == Theorem::vertex_sum) rec.b.push_back(other);
            rec.actual = sumset(a, other).cardinality();
            rec.bound = freiman_bound(rec.m, rec.d);
            rec.satisfied = rec.actual >= rec.bound;
            return rec;
        }
        case Theorem::two_sets:
        case Theorem::k_fold:
        case Theorem::simplex_exact: {
            if (!b) throw HypothesisError("B required for theorem " + tag_name);
            if (b->dim() != a.dim()) throw HypothesisError("A and B have different dimensions");
            if (tag == Theorem::two_sets && k != 1) throw HypothesisError("k must be 1 for theorem two_sets");
            require_proper(*b, "B");
            if (tag == Theorem::simplex_exact && b->size() != rec.d + 1) {
                throw HypothesisError("B not a simplex (|B| != d+1)");
            }
            require_inside(a, *b, "A", "B");
            rec.b.push_back(*b);
            rec.actual = a_plus_kb(a, *b, k).cardinality();
            if (tag == Theorem::simplex_exact) {
                rec.m1 = intersection_size(a, *b);
                rec.bound = simplex_exact_count(rec.m, *rec.m1, rec.d, k);
                rec.satisfied = rec.actual == rec.bound;
            } else {
                rec.bound = tag == Theorem::two_sets ? freiman_bound(rec.m, rec.d) : kfold_bound(rec.m, rec.d, k);
                rec.satisfied = rec.actual >= rec.bound;
            }
            return rec;
        }
        case Theorem::nested_chain:
            break;
    }
    throw Error("unhandled theorem tag");
}

VerificationRecord verify_nested_chain(const PointSet& a, const std::vector<PointSet>& chain, std::string instance_id) {
    if (a.empty()) throw HypothesisError("A must be nonempty");
    if (chain.empty()) throw HypothesisError("chain B_1..B_k must be nonempty");
    std::vector<PointSet> operands{a};
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const std::string name = "B_" + std::to_string(i + 1);
        if (chain[i].dim() != a.dim()) throw HypothesisError("A and " + name + " have different dimensions");
        require_proper(chain[i], name);
        if (i == 0) {
            require_inside(a, chain[0], "A", name);
        } else {
            require_inside(chain[i - 1], chain[i], "conv B_" + std::to_string(i), name);
        }
        operands.push_back(chain[i]);
    }
    VerificationRecord rec;
    rec.instance_id = std::move(instance_id);
    rec.theorem = Theorem::nested_chain;
    rec.m = a.size();
    rec.d = a.dim();
    rec.k = chain.size();
    rec.a = a;
    rec.b = chain;
    rec.actual = sum_of(operands).cardinality();
    rec.bound = kfold_bound(rec.m, rec.d, rec.k);
    rec.satisfied = rec.actual >= rec.bound;
    return rec;
}

}  // namespace hullsum
