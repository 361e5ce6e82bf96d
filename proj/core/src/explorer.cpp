#include "hullsum/explorer.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "hullsum/geometry.hpp"
#include "hullsum/io.hpp"

namespace hullsum {

namespace {

constexpr std::size_t kMaxAttempts = 10000;

constexpr std::array<std::pair<CampaignKind, std::string_view>, 8> kCampaignNames{{
    {CampaignKind::freiman, "freiman"},
    {CampaignKind::vertex_sum, "vertex_sum"},
    {CampaignKind::two_sets, "two_sets"},
    {CampaignKind::k_fold, "k_fold"},
    {CampaignKind::simplex_exact, "simplex_exact"},
    {CampaignKind::subsum, "subsum"},
    {CampaignKind::question1, "question1"},
    {CampaignKind::question2, "question2"},
}};

bool is_question(CampaignKind kind) { return kind == CampaignKind::question1 || kind == CampaignKind::question2; }

/// Number of lattice points in the box [-c, c]^d, saturating.
std::size_t box_size(std::size_t d, std::int64_t c) {
    const auto side = static_cast<std::size_t>(2 * c + 1);
    std::size_t n = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (n > std::numeric_limits<std::size_t>::max() / side) return std::numeric_limits<std::size_t>::max();
        n *= side;
    }
    return n;
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return static_cast<std::size_t>(uniform_int(rng, static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

LatticePoint random_point(std::mt19937_64& rng, std::size_t d, std::int64_t c) {
    std::vector<Integer> coords;
    coords.reserve(d);
    for (std::size_t i = 0; i < d; ++i) coords.emplace_back(uniform_int(rng, -c, c));
    return LatticePoint(std::move(coords));
}

/// n distinct points of the box, in draw order.
std::vector<LatticePoint> random_distinct(std::mt19937_64& rng, std::size_t d, std::int64_t c, std::size_t n) {
    std::set<LatticePoint> seen;
    std::vector<LatticePoint> out;
    while (out.size() < n) {
        auto p = random_point(rng, d, c);
        if (seen.insert(p).second) out.push_back(std::move(p));
    }
    return out;
}

PointSet random_proper_set(std::mt19937_64& rng, std::size_t d, std::int64_t c, std::size_t lo, std::size_t hi) {
    for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
        PointSet p(d, random_distinct(rng, d, c, pick(rng, lo, hi)));
        if (is_proper(p)) return p;
    }
    throw Error("could not generate a proper " + std::to_string(d) + "-dimensional set");
}

/// Uniformly random s-subset of `pool`, keeping pool order.
PointSet choose_subset(std::mt19937_64& rng, const PointSet& pool, std::size_t s) {
    std::vector<std::size_t> idx(pool.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t i = 0; i < s; ++i) std::swap(idx[i], idx[pick(rng, i, idx.size() - 1)]);
    idx.resize(s);
    std::sort(idx.begin(), idx.end());
    std::vector<LatticePoint> pts;
    for (std::size_t i : idx) pts.push_back(pool[i]);
    return PointSet(pool.dim(), std::move(pts));
}

PointSet merge(const PointSet& x, const PointSet& y) {
    std::vector<LatticePoint> pts(x.begin(), x.end());
    pts.insert(pts.end(), y.begin(), y.end());
    std::sort(pts.begin(), pts.end());
    return PointSet(x.dim(), std::move(pts));
}

PointSet minus(const PointSet& x, const PointSet& y) {
    std::vector<LatticePoint> pts;
    for (const auto& p : x) {
        if (!y.contains(p)) pts.push_back(p);
    }
    return PointSet(x.dim(), std::move(pts));
}

/// Random subset of the lattice points of conv(outer) with size in [lo, hi],
/// clamped to the number available.
PointSet random_inside(std::mt19937_64& rng, const PointSet& lattice, std::size_t lo, std::size_t hi) {
    const std::size_t cap = lattice.size();
    return choose_subset(rng, lattice, pick(rng, std::min(lo, cap), std::min(hi, cap)));
}

Instance simplex_instance(const GeneratorConfig& cfg, std::mt19937_64& rng) {
    const std::size_t d = cfg.dim;
    for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Instance inst;
        inst.b = random_proper_set(rng, d, cfg.coord, d + 1, d + 1);
        const PointSet lattice = lattice_points_in_hull(*inst.b);
        if (!cfg.m1) {
            inst.a = random_inside(rng, lattice, cfg.a_size.min, cfg.a_size.max);
            return inst;
        }
        const std::size_t m1 = *cfg.m1;
        const PointSet others = minus(lattice, *inst.b);
        const std::size_t lo = std::max<std::size_t>(m1 == 0 ? 1 : 0, cfg.a_size.min > m1 ? cfg.a_size.min - m1 : 0);
        const std::size_t hi = std::min(cfg.a_size.max - m1, others.size());
        if (lo > hi) continue;
        const PointSet extra = choose_subset(rng, others, pick(rng, lo, hi));
        inst.a = merge(choose_subset(rng, *inst.b, m1), extra);
        return inst;
    }
    throw Error("could not generate a simplex with enough interior lattice points");
}

Instance chain_instance(const GeneratorConfig& cfg, std::mt19937_64& rng) {
    const std::size_t d = cfg.dim;
    const std::size_t lo = std::max(cfg.b_size.min, d + 1);
    for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<PointSet> chain{random_proper_set(rng, d, cfg.coord, lo, cfg.b_size.max)};
        bool ok = true;
        while (ok && chain.size() < cfg.k) {
            const PointSet lattice = lattice_points_in_hull(chain.back());
            ok = false;
            for (std::size_t inner = 0; inner < 100 && !ok; ++inner) {
                PointSet next = random_inside(rng, lattice, lo, cfg.b_size.max);
                if (is_proper(next)) {
                    chain.push_back(std::move(next));
                    ok = true;
                }
            }
        }
        if (!ok) continue;
        std::reverse(chain.begin(), chain.end());
        Instance inst;
        inst.a = random_inside(rng, lattice_points_in_hull(chain.front()), cfg.a_size.min, cfg.a_size.max);
        inst.chain = std::move(chain);
        return inst;
    }
    throw Error("could not generate a nested chain of proper sets");
}

Rational rational_power(const Rational& base, std::size_t e) {
    Rational out = 1;
    for (std::size_t i = 0; i < e; ++i) out *= base;
    return out;
}

InstanceOutcome evaluate(const GeneratorConfig& cfg, CampaignKind kind, std::size_t index) {
    Instance inst = generate_instance(cfg, kind, index);
    InstanceOutcome out;
    out.index = index;
    const std::string id = std::string(to_string(kind)) + "/" + std::to_string(cfg.seed) + "/" + std::to_string(index);

    switch (kind) {
        case CampaignKind::freiman:
        case CampaignKind::vertex_sum:
        case CampaignKind::two_sets:
        case CampaignKind::k_fold:
        case CampaignKind::simplex_exact: {
            const Theorem tag = *parse_theorem(to_string(kind));
            const bool multi = kind == CampaignKind::k_fold || kind == CampaignKind::simplex_exact;
            out.record = verify_theorem(tag, inst.a, inst.b, multi ? cfg.k : 1, id);
            out.violation = !out.record->satisfied;
            out.slack = Rational(out.record->slack());
            break;
        }
        case CampaignKind::question2:
            out.record = verify_nested_chain(inst.a, inst.chain, id);
            out.violation = !out.record->satisfied;
            out.slack = Rational(out.record->slack());
            break;
        case CampaignKind::subsum: {
            std::vector<std::vector<Integer>> values;
            for (const auto& s : inst.sets) {
                auto& v = values.emplace_back();
                for (const auto& p : s) v.push_back(p[0]);
            }
            out.subsum = subsum_report(SubsumInstance(std::move(values)));
            out.violation = !out.subsum->chain_satisfied;
            out.slack = Rational(out.subsum->sizes.size_s_prime) - out.subsum->bound;
            out.sets = std::move(inst.sets);
            break;
        }
        case CampaignKind::question1: {
            Question1Record q;
            q.sizes = subsum_sizes(inst.sets);
            const std::size_t k = inst.sets.size();
            q.ratio = Rational(Integer(q.sizes.size_s_prime), Integer(q.sizes.sum_si()));
            q.conjectured = rational_power(Rational(k), cfg.dim - 1) / rational_power(Rational(k - 1), cfg.dim);
            q.below_conjecture = q.ratio < q.conjectured;
            out.slack = Rational(q.sizes.size_s_prime) - q.conjectured * q.sizes.sum_si();
            if (cfg.dim == 1) {
                // In one dimension the chain inequality is a theorem, so a
                // failure is a genuine violation.
                const Rational bound(Integer(q.sizes.sum_si()) - 1, Integer(k - 1));
                out.violation = q.sizes.size_s < q.sizes.size_s_prime || Rational(q.sizes.size_s_prime) < bound;
            }
            out.question1 = std::move(q);
            out.sets = std::move(inst.sets);
            break;
        }
    }
    return out;
}

nlohmann::json range_json(const SizeRange& r) { return nlohmann::json::array({r.min, r.max}); }

}  // namespace

std::string_view to_string(CampaignKind kind) {
    for (const auto& [k, name] : kCampaignNames) {
        if (k == kind) return name;
    }
    return "unknown";
}

std::optional<CampaignKind> parse_campaign(std::string_view name) {
    for (const auto& [k, n] : kCampaignNames) {
        if (n == name) return k;
    }
    return std::nullopt;
}

std::mt19937_64 instance_engine(std::uint64_t seed, std::size_t index) {
    const auto idx = static_cast<std::uint64_t>(index);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
    return std::mt19937_64(seq);
}

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw Error("empty integer range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(rng());
    const std::uint64_t threshold = (0 - span) % span;  // 2^64 mod span
    for (;;) {
        const std::uint64_t x = rng();
        if (x >= threshold) return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
    }
}

void validate_config(const GeneratorConfig& cfg, CampaignKind kind) {
    const std::size_t d = cfg.dim;
    if (d < 1) throw Error("dim must be ≥ 1");
    if (cfg.coord < 1) throw Error("coordinate range c must be ≥ 1");
    if (cfg.k < 1) throw Error("k must be ≥ 1");
    if (cfg.a_size.min < 1 || cfg.a_size.min > cfg.a_size.max) throw Error("A size range must satisfy 1 <= min <= max");
    if (cfg.b_size.min < 1 || cfg.b_size.min > cfg.b_size.max) throw Error("B size range must satisfy 1 <= min <= max");
    const std::size_t box = box_size(d, cfg.coord);

    switch (kind) {
        case CampaignKind::freiman:
        case CampaignKind::vertex_sum:
            if (cfg.a_size.max < d + 1) throw Error("A size range must allow at least d+1 points for a proper set");
            if (std::max(cfg.a_size.min, d + 1) > box) throw Error("A size exceeds the number of lattice points in the box");
            break;
        case CampaignKind::two_sets:
        case CampaignKind::k_fold:
        case CampaignKind::question2:
            if (cfg.b_size.max < d + 1) throw Error("B size range must allow at least d+1 points for a proper set");
            if (std::max(cfg.b_size.min, d + 1) > box) throw Error("B size exceeds the number of lattice points in the box");
            break;
        case CampaignKind::simplex_exact:
            if (d + 1 > box) throw Error("box too small for a simplex");
            if (cfg.m1) {
                if (*cfg.m1 > d + 1) throw Error("m1 must be <= d+1");
                if (cfg.a_size.max < std::max<std::size_t>(*cfg.m1, 1)) throw Error("A size range must allow m1 points");
            }
            break;
        case CampaignKind::subsum:
        case CampaignKind::question1:
            if (kind == CampaignKind::subsum && d != 1) throw Error("subsum campaigns are one-dimensional (dim = 1)");
            if (cfg.k < 2) throw Error("k must be ≥ 2 (bound divides by k−1)");
            if (cfg.a_size.max > box) throw Error("A size exceeds the number of lattice points in the box");
            break;
    }
}

Instance generate_instance(const GeneratorConfig& cfg, CampaignKind kind, std::size_t index) {
    validate_config(cfg, kind);
    auto rng = instance_engine(cfg.seed, index);
    const std::size_t d = cfg.dim;
    Instance inst;
    switch (kind) {
        case CampaignKind::freiman:
        case CampaignKind::vertex_sum:
            inst.a = random_proper_set(rng, d, cfg.coord, std::max(cfg.a_size.min, d + 1), cfg.a_size.max);
            return inst;
        case CampaignKind::two_sets:
        case CampaignKind::k_fold: {
            inst.b = random_proper_set(rng, d, cfg.coord, std::max(cfg.b_size.min, d + 1), cfg.b_size.max);
            inst.a = random_inside(rng, lattice_points_in_hull(*inst.b), cfg.a_size.min, cfg.a_size.max);
            return inst;
        }
        case CampaignKind::simplex_exact:
            return simplex_instance(cfg, rng);
        case CampaignKind::question2:
            return chain_instance(cfg, rng);
        case CampaignKind::subsum:
        case CampaignKind::question1:
            for (std::size_t i = 0; i < cfg.k; ++i) {
                inst.sets.emplace_back(d, random_distinct(rng, d, cfg.coord, pick(rng, cfg.a_size.min, cfg.a_size.max)));
            }
            return inst;
    }
    throw Error("unhandled campaign kind");
}

CampaignSummary summarize(const std::vector<InstanceOutcome>& outcomes, CampaignKind kind) {
    CampaignSummary s;
    s.instances = outcomes.size();
    for (const auto& o : outcomes) {
        if (o.violation) {
            ++s.violations;
            s.violation_indices.push_back(o.index);
        }
        if (!s.min_slack || o.slack < *s.min_slack) {
            s.min_slack = o.slack;
            s.min_slack_index = o.index;
        }
        if (kind == CampaignKind::question1 && o.question1) {
            const auto& q = *o.question1;
            s.conjectured = q.conjectured;
            if (q.below_conjecture) ++s.below_conjecture;
            if (!s.min_ratio || q.ratio < *s.min_ratio) {
                s.min_ratio = q.ratio;
                s.min_ratio_index = o.index;
            }
        }
    }
    return s;
}

CampaignReport run_campaign(const GeneratorConfig& cfg, CampaignKind kind) {
    validate_config(cfg, kind);
    CampaignReport report;
    report.config = cfg;
    report.kind = kind;
    report.exploratory = is_question(kind);
    report.assertable = !report.exploratory || (kind == CampaignKind::question2 && cfg.dim == 1);
    report.outcomes.resize(cfg.instances);

    const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(cfg.instances)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < cfg.instances; ++i) report.outcomes[i] = evaluate(cfg, kind, i);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < cfg.instances; i += workers) report.outcomes[i] = evaluate(cfg, kind, i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    report.summary = summarize(report.outcomes, kind);
    return report;
}

nlohmann::json campaign_to_json(const CampaignReport& report) {
    using nlohmann::json;
    const auto& cfg = report.config;
    json config{{"dim", cfg.dim},       {"a_size", range_json(cfg.a_size)}, {"b_size", range_json(cfg.b_size)},
                {"coord", cfg.coord},   {"k", cfg.k},                       {"seed", cfg.seed},
                {"instances", cfg.instances}, {"m1", cfg.m1 ? json(*cfg.m1) : json(nullptr)}};

    json instances = json::array();
    for (const auto& o : report.outcomes) {
        json item{{"index", o.index}, {"violation", o.violation}, {"slack", io::rational_to_json(o.slack)}};
        if (o.record) item["record"] = io::record_to_json(*o.record);
        if (o.subsum) item["subsum"] = io::subsum_report_to_json(*o.subsum);
        if (o.question1) {
            const auto& q = *o.question1;
            item["question1"] = json{{"S", q.sizes.size_s},
                                     {"S_prime", q.sizes.size_s_prime},
                                     {"S_i", q.sizes.sizes_si},
                                     {"S_i_prime", q.sizes.sizes_si_prime},
                                     {"ratio", io::rational_to_json(q.ratio)},
                                     {"conjectured", io::rational_to_json(q.conjectured)},
                                     {"below_conjecture", q.below_conjecture}};
        }
        if (!o.sets.empty()) {
            json sets = json::array();
            for (const auto& s : o.sets) sets.push_back(io::point_set_to_json(s));
            item["sets"] = sets;
        }
        instances.push_back(std::move(item));
    }

    const auto& s = report.summary;
    auto opt_rational = [](const std::optional<Rational>& q) { return q ? io::rational_to_json(*q) : json(nullptr); };
    auto opt_index = [](const std::optional<std::size_t>& i) { return i ? json(*i) : json(nullptr); };
    json summary{{"instances", s.instances},
                 {"violations", s.violations},
                 {"violation_indices", s.violation_indices},
                 {"min_slack", opt_rational(s.min_slack)},
                 {"min_slack_index", opt_index(s.min_slack_index)}};
    if (report.kind == CampaignKind::question1) {
        summary["min_ratio"] = opt_rational(s.min_ratio);
        summary["min_ratio_index"] = opt_index(s.min_ratio_index);
        summary["conjectured"] = opt_rational(s.conjectured);
        summary["below_conjecture"] = s.below_conjecture;
    }

    return json{{"campaign", std::string(to_string(report.kind))},
                {"label", report.exploratory ? "exploratory" : "verification"},
                {"assertable", report.assertable},
                {"config", config},
                {"instances", instances},
                {"summary", summary}};
}

std::string campaign_to_csv(const CampaignReport& report) {
    std::ostringstream os;
    os << "seed,index,tag,bound,actual,slack\n";
    const std::string tag(to_string(report.kind));
    for (const auto& o : report.outcomes) {
        std::string bound;
        std::string actual;
        if (o.record) {
            bound = o.record->bound.str();
            actual = o.record->actual.str();
        } else if (o.subsum) {
            bound = to_string(o.subsum->bound);
            actual = std::to_string(o.subsum->sizes.size_s_prime);
        } else if (o.question1) {
            bound = to_string(o.question1->conjectured * o.question1->sizes.sum_si());
            actual = std::to_string(o.question1->sizes.size_s_prime);
        }
        os << report.config.seed << ',' << o.index << ',' << tag << ',' << bound << ',' << actual << ','
           << to_string(o.slack) << '\n';
    }
    return os.str();
}

}  // namespace hullsum
