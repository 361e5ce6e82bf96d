#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hullsum/bounds.hpp"
#include "hullsum/decomposition.hpp"
#include "hullsum/explorer.hpp"
#include "hullsum/io.hpp"
#include "hullsum/subsum.hpp"
#include "hullsum/sumset.hpp"

namespace hullsum::cli {

namespace {

struct SumsetArgs {
    std::string a, b, out;
    long long k = 1;
};

struct DecomposeArgs {
    std::string b, out;
    bool check = false;
};

struct VerifyArgs {
    std::string theorem, a;
    std::vector<std::string> b;
    long long k = 1;
    bool json = false;
};

struct ExploreArgs {
    std::optional<int> question;
    std::string theorem;
    std::size_t dim = 2;
    long long k = 2;
    std::size_t instances = 100;
    std::uint64_t seed = 0;
    std::int64_t coord = 5;
    std::size_t a_min = 1, a_max = 8, b_min = 3, b_max = 7;
    std::optional<std::size_t> m1;
    unsigned threads = 1;
    std::string report, csv;
};

std::size_t checked_k(long long k) {
    if (k < 1) throw Error("k must be ≥ 1");
    return static_cast<std::size_t>(k);
}

int cmd_sumset(const SumsetArgs& args, std::ostream& out) {
    const std::size_t k = checked_k(args.k);
    const PointSet a = io::read_point_set(args.a);
    const PointSet b = io::read_point_set(args.b);
    if (a.dim() != b.dim()) throw Error("dimension mismatch: A has dimension " + std::to_string(a.dim()) +
                                        ", B has dimension " + std::to_string(b.dim()));
    const auto result = a_plus_kb(a, b, k);
    if (!args.out.empty()) io::write_text_file(args.out, io::dump(io::point_set_to_json(result.points)));
    out << "cardinality " << result.cardinality() << '\n';
    return kOk;
}

int cmd_decompose(const DecomposeArgs& args, std::ostream& out) {
    const PointSet b = io::read_point_set(args.b);
    const Decomposition d = decompose(b);
    const std::string text = io::dump(io::decomposition_to_json(d));
    if (args.out.empty()) {
        out << text;
    } else {
        io::write_text_file(args.out, text);
        out << "simplices " << d.simplices.size() << '\n';
    }
    if (!args.check) return kOk;
    const auto check = check_decomposition(d);
    out << "check regular_position " << (check.regular.passed ? "pass" : "FAIL") << '\n'
        << "check cover " << (check.cover.passed ? "pass" : "FAIL") << " (volume " << to_string(check.cover.simplex_volume_sum)
        << " of " << to_string(check.cover.hull_volume) << ")\n"
        << "check adjacency_chain " << (check.adjacency.passed ? "pass" : "FAIL") << '\n'
        << "check vertex_property " << (check.vertex_property.passed ? "pass" : "FAIL") << '\n';
    return check.passed() ? kOk : kViolation;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    if (args.theorem == "subsum") {
        if (!args.b.empty()) throw HypothesisError("--b is not used by theorem subsum");
        const auto instance = io::subsum_instance_from_json(io::read_json_file(args.a));
        const auto report = subsum_report(instance);
        if (args.json) {
            out << io::dump(io::subsum_report_to_json(report));
        } else {
            out << "theorem subsum\n|S| " << report.sizes.size_s << "\n|S'| " << report.sizes.size_s_prime
                << "\nbound " << to_string(report.bound) << "\nchain " << (report.chain_satisfied ? "satisfied" : "VIOLATED")
                << '\n';
        }
        return report.chain_satisfied ? kOk : kViolation;
    }

    const auto tag = parse_theorem(args.theorem);
    if (!tag) throw Error("unknown theorem '" + args.theorem + "'");
    const std::size_t k = checked_k(args.k);
    const PointSet a = io::read_point_set(args.a);
    std::vector<PointSet> bs;
    for (const auto& path : args.b) bs.push_back(io::read_point_set(path));

    VerificationRecord rec;
    if (*tag == Theorem::nested_chain) {
        rec = verify_nested_chain(a, bs);
    } else {
        if (bs.size() > 1) throw HypothesisError("theorem " + args.theorem + " takes at most one --b");
        std::optional<PointSet> b;
        if (!bs.empty()) b = bs.front();
        rec = verify_theorem(*tag, a, b, k);
    }
    if (args.json) {
        out << io::dump(io::record_to_json(rec));
    } else {
        out << "theorem " << to_string(rec.theorem) << "\nm " << rec.m << "\nd " << rec.d << "\nk " << rec.k << '\n';
        if (rec.m1) out << "m1 " << *rec.m1 << '\n';
        out << (rec.theorem == Theorem::simplex_exact ? "formula " : "bound ") << rec.bound << "\nactual " << rec.actual
            << '\n'
            << (rec.satisfied ? "satisfied" : "VIOLATED") << '\n';
    }
    return rec.satisfied ? kOk : kViolation;
}

int cmd_explore(const ExploreArgs& args, std::ostream& out) {
    if (args.question.has_value() == !args.theorem.empty()) {
        throw Error("give exactly one of --question or --theorem");
    }
    std::optional<CampaignKind> kind;
    if (args.question) {
        if (*args.question != 1 && *args.question != 2) throw Error("--question must be 1 or 2");
        kind = *args.question == 1 ? CampaignKind::question1 : CampaignKind::question2;
    } else {
        kind = parse_campaign(args.theorem);
        if (!kind || *kind == CampaignKind::question1 || *kind == CampaignKind::question2) {
            throw Error("unknown theorem '" + args.theorem + "'");
        }
    }
    GeneratorConfig cfg;
    cfg.dim = args.dim;
    cfg.k = checked_k(args.k);
    cfg.instances = args.instances;
    cfg.seed = args.seed;
    cfg.coord = args.coord;
    cfg.a_size = {args.a_min, args.a_max};
    cfg.b_size = {args.b_min, args.b_max};
    cfg.m1 = args.m1;
    cfg.threads = args.threads;

    const auto report = run_campaign(cfg, *kind);
    if (!args.report.empty()) io::write_text_file(args.report, io::dump(campaign_to_json(report)));
    if (!args.csv.empty()) io::write_text_file(args.csv, campaign_to_csv(report));

    const auto& s = report.summary;
    out << "campaign " << to_string(*kind) << (report.exploratory ? " (exploratory)" : "") << '\n'
        << "instances " << s.instances << "\nviolations " << s.violations << '\n';
    if (s.min_slack) out << "min_slack " << to_string(*s.min_slack) << " at index " << *s.min_slack_index << '\n';
    if (s.min_ratio) {
        out << "min_ratio " << to_string(*s.min_ratio) << " at index " << *s.min_ratio_index << "\nconjectured "
            << to_string(*s.conjectured) << "\nbelow_conjecture " << s.below_conjecture << '\n';
    }
    return report.ok() ? kOk : kViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact sumset cardinality bounds, simplicial decompositions and counterexample search", "hullsum"};
    app.require_subcommand(1);

    SumsetArgs sumset_args;
    auto* sumset_cmd = app.add_subcommand("sumset", "Compute A + kB");
    sumset_cmd->add_option("--a", sumset_args.a, "PointSetFile for A")->required();
    sumset_cmd->add_option("--b", sumset_args.b, "PointSetFile for B")->required();
    sumset_cmd->add_option("-k", sumset_args.k, "Number of copies of B")->capture_default_str();
    sumset_cmd->add_option("--out", sumset_args.out, "Write the sorted sumset here");

    DecomposeArgs decompose_args;
    auto* decompose_cmd = app.add_subcommand("decompose", "Simplicial decomposition of conv B");
    decompose_cmd->add_option("--b", decompose_args.b, "PointSetFile for B")->required();
    decompose_cmd->add_option("--out", decompose_args.out, "Write the decomposition JSON here");
    decompose_cmd->add_flag("--check", decompose_args.check, "Run every verifier; exit 1 on failure");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Check one theorem on one instance");
    verify_cmd->add_option("--theorem", verify_args.theorem,
                           "freiman | vertex_sum | two_sets | k_fold | simplex_exact | nested_chain | subsum")
        ->required();
    verify_cmd->add_option("--a", verify_args.a, "PointSetFile for A (subsum: {\"sets\": [...]})")->required();
    verify_cmd->add_option("--b", verify_args.b, "PointSetFile for B (repeat for nested_chain)");
    verify_cmd->add_option("-k", verify_args.k, "Number of copies of B")->capture_default_str();
    verify_cmd->add_flag("--json", verify_args.json, "Print the record as JSON");

    ExploreArgs explore_args;
    auto* explore_cmd = app.add_subcommand("explore", "Run a seeded campaign");
    explore_cmd->add_option("--question", explore_args.question, "Open question 1 or 2");
    explore_cmd->add_option("--theorem", explore_args.theorem,
                            "freiman | vertex_sum | two_sets | k_fold | simplex_exact | subsum");
    explore_cmd->add_option("--dim", explore_args.dim, "Dimension d")->capture_default_str();
    explore_cmd->add_option("-k", explore_args.k, "Repetition count or chain length")->capture_default_str();
    explore_cmd->add_option("--instances", explore_args.instances, "Number of instances")->capture_default_str();
    explore_cmd->add_option("--seed", explore_args.seed, "Master seed")->capture_default_str();
    explore_cmd->add_option("--coord", explore_args.coord, "Coordinates drawn from [-c, c]")->capture_default_str();
    explore_cmd->add_option("--a-min", explore_args.a_min, "Minimum |A| (or |A_i|)")->capture_default_str();
    explore_cmd->add_option("--a-max", explore_args.a_max, "Maximum |A| (or |A_i|)")->capture_default_str();
    explore_cmd->add_option("--b-min", explore_args.b_min, "Minimum |B|")->capture_default_str();
    explore_cmd->add_option("--b-max", explore_args.b_max, "Maximum |B|")->capture_default_str();
    explore_cmd->add_option("--m1", explore_args.m1, "simplex_exact: force |A ∩ B|");
    explore_cmd->add_option("--threads", explore_args.threads, "Worker threads")->capture_default_str();
    explore_cmd->add_option("--report", explore_args.report, "Write the JSON campaign report here");
    explore_cmd->add_option("--csv", explore_args.csv, "Write a CSV summary here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*sumset_cmd) return cmd_sumset(sumset_args, out);
        if (*decompose_cmd) return cmd_decompose(decompose_args, out);
        if (*verify_cmd) return cmd_verify(verify_args, out);
        if (*explore_cmd) return cmd_explore(explore_args, out);
    } catch (const HypothesisError& e) {
        err << "hypothesis failed: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace hullsum::cli
