#include "proprep/cli.hpp"

#include "proprep/generators.hpp"
#include "proprep/io.hpp"
#include "proprep/reduction.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace proprep::cli {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw std::runtime_error("cannot write " + path);
    file << text;
}

std::vector<std::size_t> parse_index_list(const std::string& text)
{
    std::vector<std::size_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char ch) { return std::isdigit(ch); }))
            throw std::invalid_argument("malformed candidate list '" + text + "'");
        out.push_back(std::stoull(item));
    }
    return out;
}

int exit_for(const Error& e)
{
    switch (e.code()) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::ParameterTooSmall:
        return exit_refused;
    default:
        return exit_usage;
    }
}

struct CheckArgs {
    std::string profile;
    std::string committee;
    std::string axiom;
    std::string strategy = "auto";
    std::string report;
};

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err)
{
    auto axiom = parse_axiom(args.axiom);
    auto strategy = parse_strategy(args.strategy);
    if (!axiom || !strategy || strategy == Strategy::JrScan) {
        err << "error: unknown axiom or strategy\n";
        return exit_usage;
    }
    auto doc = parse_profile(read_file(args.profile));
    Committee committee;
    if (!args.committee.empty()) {
        auto list = parse_index_list(args.committee);
        committee = Committee::of(list);
        if (committee.size() != list.size()) {
            err << "error: duplicate candidate in --committee\n";
            return exit_usage;
        }
    } else if (doc.committee) {
        committee = *doc.committee;
    } else {
        err << "error: --committee is required when the profile has no `w` line\n";
        return exit_usage;
    }

    CheckOptions options{Budget::from_environment(), {}};
    auto verdict = check(doc.instance, committee, *axiom, *strategy, options);
    write_output(args.report, render_report(verdict, *axiom), out);
    return verdict.satisfied ? exit_satisfied : exit_violated;
}

struct ReduceArgs {
    std::string graph;
    std::size_t ell = 0;
    std::string out;
};

int cmd_reduce(const ReduceArgs& args, std::ostream& out, std::ostream&)
{
    auto graph = parse_graph(read_file(args.graph));
    auto reduced = reduce_biclique_to_pjr(graph, args.ell);
    const auto& inst = reduced.instance;
    write_output(args.out, serialize_profile(inst, reduced.committee), out);
    if (!args.out.empty() && args.out != "-") {
        out << "n " << inst.n() << '\n';
        out << "k " << inst.k() << '\n';
        out << "n_over_k " << inst.n() / inst.k() << '\n';
        out << "m " << inst.m() << '\n';
    }
    return exit_satisfied;
}

struct GenArgs {
    std::string model = "impartial";
    std::size_t n = 10, m = 6, k = 3;
    double p = 0.5;
    std::size_t groups = 2;
    double overlap = 0.0;
    std::size_t left = 4, right = 4;
    std::uint64_t seed = 1;
    bool with_committee = false;
    std::string out;
};

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err)
{
    if (args.model == "bipartite") {
        write_output(args.out, serialize_graph(gen_bipartite(args.left, args.right, args.p, args.seed)), out);
        return exit_satisfied;
    }
    GenSpec spec;
    spec.n = args.n;
    spec.m = args.m;
    spec.k = args.k;
    spec.seed = args.seed;
    if (args.model == "impartial")
        spec.model = ImpartialModel{args.p};
    else if (args.model == "party-list")
        spec.model = PartyListModel{args.groups, args.overlap};
    else {
        err << "error: unknown model '" << args.model << "'\n";
        return exit_usage;
    }
    auto instance = gen_profile(spec);
    std::optional<Committee> committee;
    if (args.with_committee)
        committee = gen_committee(instance, mix_seed(args.seed, 1));
    write_output(args.out, serialize_profile(instance, committee), out);
    return exit_satisfied;
}

struct VerifyArgs {
    std::size_t left = 0, right = 0;
    double p = 0.5;
    std::size_t ell = 3;
    std::size_t samples = 1;
    std::uint64_t seed = 1;
};

int cmd_verify_reduction(const VerifyArgs& args, std::ostream& out, std::ostream&)
{
    if (args.ell < 3 || args.right < 3)
        throw Error(ErrorCode::ParameterTooSmall, "reduction needs --ell >= 3 and --right >= 3");
    CheckOptions options{Budget::from_environment(), {}};
    bool all = true;
    for (std::size_t i = 0; i < args.samples; ++i) {
        const auto seed = mix_seed(args.seed, i);
        auto graph = gen_bipartite(args.left, args.right, args.p, seed);
        auto result = audit_reduction(graph, args.ell, options);
        all = all && result.agrees;
        out << "sample " << i << " seed " << seed << " edges " << graph.edges().size() << " biclique "
            << (result.biclique ? "yes" : "no") << " pjr " << (result.verdict.satisfied ? "satisfied" : "violated") << ' '
            << (result.agrees ? "pass" : "FAIL") << '\n';
    }
    return all ? exit_satisfied : exit_mismatch;
}

struct BenchArgs {
    std::string sweep;
    std::string strategies = "bruteforce,candidate-subsets,bounded-ballot,bounded-degree";
    std::string axiom = "pjr";
    std::int64_t timeout_ms = 10'000;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err)
{
    BenchConfig config;
    config.sweep = parse_sweep(args.sweep);
    auto axiom = parse_axiom(args.axiom);
    if (!axiom) {
        err << "error: unknown axiom '" << args.axiom << "'\n";
        return exit_usage;
    }
    config.axiom = *axiom;
    config.strategies.clear();
    std::stringstream in(args.strategies);
    std::string name;
    while (std::getline(in, name, ',')) {
        auto s = parse_strategy(name);
        if (!s || s == Strategy::JrScan) {
            err << "error: unknown strategy '" << name << "'\n";
            return exit_usage;
        }
        config.strategies.push_back(*s);
    }
    if (config.strategies.empty() || args.timeout_ms <= 0) {
        err << "error: need at least one strategy and a positive timeout\n";
        return exit_usage;
    }
    config.timeout = std::chrono::milliseconds(args.timeout_ms);
    config.seed = args.seed;
    config.budget = Budget::from_environment();

    if (args.out.empty() || args.out == "-")
        return run_bench(config, out, err);
    std::ofstream csv(args.out, std::ios::binary | std::ios::trunc);
    if (!csv)
        throw std::runtime_error("cannot write " + args.out);
    return run_bench(config, csv, err);
}

} // namespace

Verdict run_strategy(const Instance& instance, const Committee& committee, Axiom axiom, Strategy strategy, const CheckOptions& options)
{
    switch (strategy) {
    case Strategy::BruteForceVoters: return check_bruteforce(instance, committee, axiom, options);
    case Strategy::CandidateSubsets: return check_candidate_subsets(instance, committee, axiom, options);
    case Strategy::BoundedBallot: return check_bounded_ballot(instance, committee, axiom, options);
    case Strategy::BoundedDegree: return check_bounded_degree(instance, committee, axiom, options);
    case Strategy::JrScan: return check_jr(instance, committee);
    case Strategy::Auto: break;
    }
    return check(instance, committee, axiom, strategy, options);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Audit approval-based committees for JR, PJR and EJR", "proprep"};
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check_cmd = app.add_subcommand("check", "Audit a committee against one axiom");
    check_cmd->add_option("--profile", check_args.profile, "Profile file")->required();
    check_cmd->add_option("--committee", check_args.committee, "Comma-separated candidate indices (overrides the file's w line)");
    check_cmd->add_option("--axiom", check_args.axiom, "jr | pjr | ejr")->required();
    check_cmd->add_option("--strategy", check_args.strategy, "auto | bruteforce | candidate-subsets | bounded-ballot | bounded-degree");
    check_cmd->add_option("--report", check_args.report, "Report file (default: stdout)");

    ReduceArgs reduce_args;
    auto* reduce_cmd = app.add_subcommand("reduce", "Build the PJR instance encoding a balanced-biclique question");
    reduce_cmd->add_option("--graph", reduce_args.graph, "Graph file")->required();
    reduce_cmd->add_option("--ell", reduce_args.ell, "Biclique size (>= 3)")->required();
    reduce_cmd->add_option("--out", reduce_args.out, "Output profile file")->required();

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded profile or bipartite graph");
    gen_cmd->add_option("--model", gen_args.model, "impartial | party-list | bipartite");
    gen_cmd->add_option("--n", gen_args.n, "Voters");
    gen_cmd->add_option("--m", gen_args.m, "Candidates");
    gen_cmd->add_option("--k", gen_args.k, "Committee size");
    gen_cmd->add_option("--p", gen_args.p, "Approval (or edge) probability");
    gen_cmd->add_option("--groups", gen_args.groups, "Party-list groups");
    gen_cmd->add_option("--overlap", gen_args.overlap, "Party-list cross-group approval probability");
    gen_cmd->add_option("--left", gen_args.left, "Bipartite left side size");
    gen_cmd->add_option("--right", gen_args.right, "Bipartite right side size");
    gen_cmd->add_option("--seed", gen_args.seed, "Seed")->required();
    gen_cmd->add_flag("--with-committee", gen_args.with_committee, "Append a seeded random committee line");
    gen_cmd->add_option("--out", gen_args.out, "Output file (default: stdout)");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify-reduction", "Check the biclique/PJR equivalence on seeded random graphs");
    verify_cmd->add_option("--left", verify_args.left, "Left side size")->required();
    verify_cmd->add_option("--right", verify_args.right, "Right side size")->required();
    verify_cmd->add_option("--p", verify_args.p, "Edge probability")->required();
    verify_cmd->add_option("--ell", verify_args.ell, "Biclique size")->required();
    verify_cmd->add_option("--samples", verify_args.samples, "Number of graphs")->required();
    verify_cmd->add_option("--seed", verify_args.seed, "Base seed")->required();

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Time every strategy over a seeded sweep and cross-check verdicts");
    bench_cmd->add_option("--sweep", bench_args.sweep, "e.g. n=6..12,m=5,p=0.3/0.6,seeds=3")->required();
    bench_cmd->add_option("--strategies", bench_args.strategies, "Comma-separated strategy names");
    bench_cmd->add_option("--axiom", bench_args.axiom, "jr | pjr | ejr");
    bench_cmd->add_option("--timeout-ms", bench_args.timeout_ms, "Per-cell timeout");
    bench_cmd->add_option("--seed", bench_args.seed, "Base seed");
    bench_cmd->add_option("--out", bench_args.out, "CSV file (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_satisfied;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_satisfied;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*check_cmd)
            return cmd_check(check_args, out, err);
        if (*reduce_cmd)
            return cmd_reduce(reduce_args, out, err);
        if (*gen_cmd)
            return cmd_gen(gen_args, out, err);
        if (*verify_cmd)
            return cmd_verify_reduction(verify_args, out, err);
        if (*bench_cmd)
            return cmd_bench(bench_args, out, err);
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return exit_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace proprep::cli
