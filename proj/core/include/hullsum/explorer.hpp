#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hullsum/bounds.hpp"
#include "hullsum/subsum.hpp"
#include "hullsum/types.hpp"

namespace hullsum {

enum class CampaignKind {
    freiman,
    vertex_sum,
    two_sets,
    k_fold,
    simplex_exact,
    subsum,     // one-dimensional chain inequality
    question1,  // |S'| / sum |S_i| against k^(d-1) / (k-1)^d, exploratory
    question2,  // nested hull chains A+B_1+...+B_k, exploratory unless d = 1
};

std::string_view to_string(CampaignKind kind);
std::optional<CampaignKind> parse_campaign(std::string_view name);

struct SizeRange {
    std::size_t min = 1;
    std::size_t max = 1;
};

struct GeneratorConfig {
    std::size_t dim = 2;
    SizeRange a_size{1, 6};
    SizeRange b_size{3, 6};
    std::int64_t coord = 5;  // coordinates drawn from [-coord, coord]
    std::size_t k = 2;
    std::uint64_t seed = 0;
    std::size_t instances = 100;
    /// simplex_exact only: force |A ∩ B| to this value.
    std::optional<std::size_t> m1;
    unsigned threads = 1;
};

/// Throws Error when the config cannot produce instances of `kind`.
void validate_config(const GeneratorConfig& cfg, CampaignKind kind);

struct Instance {
    PointSet a;                 // theorem and question2 campaigns
    std::optional<PointSet> b;  // two_sets, k_fold, simplex_exact
    std::vector<PointSet> chain;  // question2: B_1..B_k
    std::vector<PointSet> sets;   // subsum, question1: A_1..A_k
};

/// Deterministic function of (cfg.seed, index); independent of other indices.
Instance generate_instance(const GeneratorConfig& cfg, CampaignKind kind, std::size_t index);

/// Per-instance random engine keyed by (seed, index).
std::mt19937_64 instance_engine(std::uint64_t seed, std::size_t index);

/// Uniform integer in [lo, hi] by rejection; identical across standard libraries.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

struct Question1Record {
    SubsumSizes sizes;
    Rational ratio;        // |S'| / sum |S_i|
    Rational conjectured;  // k^(d-1) / (k-1)^d
    bool below_conjecture = false;
};

struct InstanceOutcome {
    std::size_t index = 0;
    std::optional<VerificationRecord> record;
    std::optional<SubsumReport> subsum;
    std::optional<Question1Record> question1;
    std::vector<PointSet> sets;  // subsum and question1 witnesses
    bool violation = false;
    Rational slack;
};

struct CampaignSummary {
    std::size_t instances = 0;
    std::size_t violations = 0;
    std::vector<std::size_t> violation_indices;
    std::optional<Rational> min_slack;
    std::optional<std::size_t> min_slack_index;
    // question1 only
    std::optional<Rational> min_ratio;
    std::optional<std::size_t> min_ratio_index;
    std::optional<Rational> conjectured;
    std::size_t below_conjecture = 0;
};

struct CampaignReport {
    GeneratorConfig config;
    CampaignKind kind = CampaignKind::k_fold;
    bool exploratory = false;
    bool assertable = true;  // violations here fail the run
    std::vector<InstanceOutcome> outcomes;
    CampaignSummary summary;

    bool ok() const { return !assertable || summary.violations == 0; }
};

CampaignReport run_campaign(const GeneratorConfig& cfg, CampaignKind kind);

/// Summary recomputed from the per-instance outcomes alone.
CampaignSummary summarize(const std::vector<InstanceOutcome>& outcomes, CampaignKind kind);

nlohmann::json campaign_to_json(const CampaignReport& report);
/// One row per instance: seed,index,tag,bound,actual,slack.
std::string campaign_to_csv(const CampaignReport& report);

}  // namespace hullsum
