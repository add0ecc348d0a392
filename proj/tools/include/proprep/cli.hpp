#pragma once

#include "proprep/axioms.hpp"
#include "proprep/model.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace proprep::cli {

/// Process exit codes. No other values are ever returned.
enum ExitCode : int {
    exit_satisfied = 0,
    exit_usage = 2,
    exit_violated = 3,
    exit_refused = 4,
    exit_mismatch = 5,
};

/// Entry point shared by the binary and the tests; `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Calls the named strategy directly (no JR rerouting), Auto through check().
Verdict run_strategy(const Instance& instance, const Committee& committee, Axiom axiom, Strategy strategy, const CheckOptions& options);

using StrategyRunner = std::function<Verdict(const Instance&, const Committee&, Axiom, Strategy, const CheckOptions&)>;

/// Instance family swept by `bench`.
///
/// Textual form: comma-separated `key=value` items, values either a single
/// number, an inclusive integer range `lo..hi`, or a `/`-separated list.
/// Keys: n, m, k, p, seeds, model (impartial|party-list), groups, overlap,
/// dmax. Without k every m uses k = ceil(m/2); (m, k) pairs with k > m are
/// skipped. With dmax, impartial instances are redrawn until d <= dmax.
struct Sweep {
    std::vector<std::size_t> n{8};
    std::vector<std::size_t> m{5};
    std::vector<std::size_t> k{};
    std::vector<double> p{0.5};
    std::size_t seeds = 1;
    bool party_list = false;
    std::size_t groups = 2;
    double overlap = 0.0;
    std::optional<std::size_t> dmax;
};

/// Throws std::invalid_argument on malformed text.
Sweep parse_sweep(std::string_view text);

struct BenchConfig {
    Sweep sweep;
    std::vector<Strategy> strategies{Strategy::BruteForceVoters, Strategy::CandidateSubsets, Strategy::BoundedBallot, Strategy::BoundedDegree};
    Axiom axiom = Axiom::PJR;
    std::chrono::milliseconds timeout{10'000};
    std::uint64_t seed = 1;
    Budget budget{};
};

struct BenchRow {
    Strategy strategy;
    Axiom axiom;
    std::size_t n, m, a, d, k;
    std::uint64_t seed;
    std::string verdict; ///< satisfied | violated | timeout | refused
    std::int64_t elapsed_ms;
};

inline constexpr std::string_view bench_csv_header = "strategy,axiom,n,m,a,d,k,seed,verdict,elapsed_ms";

/// Runs every (instance, strategy) cell and writes CSV to `csv`. Returns
/// exit_mismatch after dumping the instance to `err` if two finished
/// strategies disagree on one instance.
int run_bench(const BenchConfig& config, std::ostream& csv, std::ostream& err, const StrategyRunner& runner = run_strategy);

} // namespace proprep::cli
