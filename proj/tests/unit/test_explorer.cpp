#include <doctest.h>

#include <sstream>

#include "hullsum/explorer.hpp"
#include "hullsum/geometry.hpp"
#include "hullsum/io.hpp"

using namespace hullsum;

namespace {

std::string instance_bytes(const Instance& inst) {
    nlohmann::json j{{"a", inst.a.empty() ? nlohmann::json(nullptr) : io::point_set_to_json(inst.a)}};
    if (inst.b) j["b"] = io::point_set_to_json(*inst.b);
    for (const auto& c : inst.chain) j["chain"].push_back(io::point_set_to_json(c));
    for (const auto& s : inst.sets) j["sets"].push_back(io::point_set_to_json(s));
    return j.dump();
}

}  // namespace

TEST_CASE("campaign names round trip") {
    for (auto k : {CampaignKind::freiman, CampaignKind::vertex_sum, CampaignKind::two_sets, CampaignKind::k_fold,
                   CampaignKind::simplex_exact, CampaignKind::subsum, CampaignKind::question1, CampaignKind::question2}) {
        CHECK(parse_campaign(to_string(k)) == k);
    }
    CHECK(!parse_campaign("question3"));
}

TEST_CASE("uniform_int stays in range and covers it") {
    auto rng = instance_engine(1, 2);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; ++i) {
        const auto v = uniform_int(rng, -3, 3);
        REQUIRE(v >= -3);
        REQUIRE(v <= 3);
        ++hits[static_cast<std::size_t>(v + 3)];
    }
    for (int h : hits) CHECK(h > 700);
    CHECK(uniform_int(rng, 4, 4) == 4);
    CHECK_THROWS(uniform_int(rng, 2, 1));
}

TEST_CASE("instance engines are keyed by seed and index") {
    auto a = instance_engine(42, 7);
    auto b = instance_engine(42, 7);
    auto c = instance_engine(42, 8);
    auto d = instance_engine(43, 7);
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
    CHECK(x != d());
}

TEST_CASE("generation is deterministic per (seed, index)") {
    GeneratorConfig cfg;
    cfg.seed = 9;
    for (auto kind : {CampaignKind::k_fold, CampaignKind::freiman, CampaignKind::question2}) {
        const auto first = instance_bytes(generate_instance(cfg, kind, 3));
        generate_instance(cfg, kind, 4);
        CHECK(instance_bytes(generate_instance(cfg, kind, 3)) == first);
    }
}

TEST_CASE("generated instances satisfy their construction contracts") {
    GeneratorConfig tri;
    tri.dim = 2;
    tri.b_size = {3, 3};
    tri.a_size = {1, 4};
    tri.coord = 2;
    for (std::size_t i = 0; i < 40; ++i) {
        const auto inst = generate_instance(tri, CampaignKind::k_fold, i);
        REQUIRE(inst.b);
        CHECK(inst.b->size() == 3);
        CHECK(is_proper(*inst.b));
        CHECK(inst.a.size() <= 4);
        for (const auto& p : inst.a) CHECK(conv_contains(*inst.b, p));
    }

    GeneratorConfig exact;
    exact.dim = 2;
    exact.a_size = {1, 8};
    for (std::size_t m1 = 0; m1 <= 3; ++m1) {
        exact.m1 = m1;
        for (std::size_t i = 0; i < 10; ++i) {
            const auto inst = generate_instance(exact, CampaignKind::simplex_exact, i);
            CHECK(intersection_size(inst.a, *inst.b) == m1);
            CHECK(!inst.a.empty());
        }
    }

    GeneratorConfig chain;
    chain.dim = 2;
    chain.k = 3;
    for (std::size_t i = 0; i < 10; ++i) {
        const auto inst = generate_instance(chain, CampaignKind::question2, i);
        REQUIRE(inst.chain.size() == 3);
        for (const auto& p : inst.a) CHECK(conv_contains(inst.chain[0], p));
        for (std::size_t j = 1; j < 3; ++j) {
            CHECK(is_proper(inst.chain[j]));
            for (const auto& p : inst.chain[j - 1]) CHECK(conv_contains(inst.chain[j], p));
        }
    }
}

TEST_CASE("infeasible configs are rejected") {
    GeneratorConfig cfg;
    cfg.dim = 3;
    cfg.b_size = {2, 3};
    CHECK_THROWS_WITH(validate_config(cfg, CampaignKind::k_fold), doctest::Contains("at least d+1 points"));
    GeneratorConfig sub;
    sub.dim = 2;
    CHECK_THROWS_WITH(validate_config(sub, CampaignKind::subsum), doctest::Contains("dim = 1"));
    GeneratorConfig q1;
    q1.dim = 1;
    q1.k = 1;
    CHECK_THROWS_WITH(validate_config(q1, CampaignKind::question1), doctest::Contains("k must be ≥ 2"));
    GeneratorConfig coord;
    coord.coord = 0;
    CHECK_THROWS(validate_config(coord, CampaignKind::freiman));
    GeneratorConfig m1;
    m1.m1 = 4;
    CHECK_THROWS(validate_config(m1, CampaignKind::simplex_exact));
}

TEST_CASE("k_fold campaign has no violations and a recomputable summary") {
    GeneratorConfig cfg;
    cfg.dim = 2;
    cfg.k = 2;
    cfg.instances = 100;
    cfg.seed = 42;
    const auto report = run_campaign(cfg, CampaignKind::k_fold);
    CHECK(report.ok());
    CHECK(!report.exploratory);
    CHECK(report.summary.violations == 0);
    CHECK(report.summary.instances == 100);
    REQUIRE(report.summary.min_slack);
    CHECK(*report.summary.min_slack >= 0);
    const auto again = summarize(report.outcomes, report.kind);
    CHECK(again.violations == report.summary.violations);
    CHECK(again.min_slack == report.summary.min_slack);
    CHECK(again.min_slack_index == report.summary.min_slack_index);

    // Every record is a self-contained witness.
    for (const auto& o : report.outcomes) {
        REQUIRE(o.record);
        const auto replayed = io::replay_record(io::record_to_json(*o.record));
        CHECK(replayed.actual == o.record->actual);
        CHECK(replayed.bound == o.record->bound);
        CHECK(replayed.satisfied == o.record->satisfied);
    }
}

TEST_CASE("question campaigns are labelled and asserted only where settled") {
    GeneratorConfig cfg;
    cfg.dim = 1;
    cfg.k = 2;
    cfg.instances = 50;
    cfg.b_size = {2, 5};
    const auto q2 = run_campaign(cfg, CampaignKind::question2);
    CHECK(q2.exploratory);
    CHECK(q2.assertable);
    CHECK(q2.summary.violations == 0);
    CHECK(q2.ok());

    cfg.dim = 2;
    cfg.b_size = {3, 5};
    const auto q2d2 = run_campaign(cfg, CampaignKind::question2);
    CHECK(!q2d2.assertable);
    CHECK(q2d2.ok());

    cfg.dim = 1;
    cfg.a_size = {1, 5};
    const auto q1 = run_campaign(cfg, CampaignKind::question1);
    CHECK(q1.exploratory);
    CHECK(!q1.assertable);
    REQUIRE(q1.summary.min_ratio);
    CHECK(q1.summary.conjectured == Rational(1));
    const auto j = campaign_to_json(q1);
    CHECK(j["label"] == "exploratory");
    CHECK(j["summary"].contains("min_ratio"));
}

TEST_CASE("parallel campaigns are byte-identical to sequential ones") {
    GeneratorConfig cfg;
    cfg.dim = 2;
    cfg.instances = 40;
    cfg.seed = 5;
    const auto seq = io::dump(campaign_to_json(run_campaign(cfg, CampaignKind::two_sets)));
    cfg.threads = 4;
    const auto par = io::dump(campaign_to_json(run_campaign(cfg, CampaignKind::two_sets)));
    CHECK(seq == par);
    CHECK(seq == io::dump(campaign_to_json(run_campaign(cfg, CampaignKind::two_sets))));
}

TEST_CASE("csv has one row per instance") {
    GeneratorConfig cfg;
    cfg.dim = 1;
    cfg.k = 3;
    cfg.instances = 12;
    cfg.a_size = {1, 4};
    const auto csv = campaign_to_csv(run_campaign(cfg, CampaignKind::subsum));
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line == "seed,index,tag,bound,actual,slack");
    std::size_t rows = 0;
    while (std::getline(is, line)) {
        CHECK(line.rfind("0," + std::to_string(rows) + ",subsum,", 0) == 0);
        ++rows;
    }
    CHECK(rows == 12);
}
