#include "proprep/cli.hpp"

#include "proprep/generators.hpp"
#include "proprep/io.hpp"

#include <charconv>
#include <condition_variable>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <stop_token>
#include <thread>

namespace proprep::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        auto next = text.find(sep, pos);
        out.push_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (next == std::string_view::npos)
            return out;
        pos = next + 1;
    }
}

std::size_t to_size(std::string_view text)
{
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("malformed integer '" + std::string(text) + "' in sweep");
    return v;
}

double to_double(std::string_view text)
{
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("malformed number '" + std::string(text) + "' in sweep");
    return v;
}

std::vector<std::size_t> size_values(std::string_view text)
{
    if (auto dots = text.find(".."); dots != std::string_view::npos) {
        auto lo = to_size(text.substr(0, dots));
        auto hi = to_size(text.substr(dots + 2));
        if (lo > hi || hi - lo > 10'000)
            throw std::invalid_argument("bad range '" + std::string(text) + "' in sweep");
        std::vector<std::size_t> out;
        for (auto v = lo; v <= hi; ++v)
            out.push_back(v);
        return out;
    }
    std::vector<std::size_t> out;
    for (auto item : split(text, '/'))
        out.push_back(to_size(item));
    return out;
}

/// Runs one cell; a watchdog thread requests stop once `timeout` passes.
std::optional<Verdict> run_with_timeout(const StrategyRunner& runner, const Instance& instance, const Committee& committee,
    Axiom axiom, Strategy strategy, const Budget& budget, std::chrono::milliseconds timeout)
{
    std::stop_source cancel;
    std::mutex mutex;
    std::condition_variable_any wake;
    std::jthread watchdog([&](std::stop_token done) {
        std::unique_lock lock(mutex);
        if (!wake.wait_for(lock, done, timeout, [] { return false; }) && !done.stop_requested())
            cancel.request_stop();
    });

    CheckOptions options{budget, cancel.get_token()};
    try {
        auto verdict = runner(instance, committee, axiom, strategy, options);
        watchdog.request_stop();
        if (verdict.elapsed > timeout)
            return std::nullopt;
        return verdict;
    } catch (const Error& e) {
        watchdog.request_stop();
        if (e.code() == ErrorCode::Cancelled)
            return std::nullopt;
        throw;
    }
}

struct Cell {
    Instance instance;
    Committee committee;
    std::uint64_t seed;
};

std::vector<Cell> instances(const BenchConfig& config)
{
    const auto& sw = config.sweep;
    std::vector<Cell> out;
    std::uint64_t index = 0;
    for (auto n : sw.n)
        for (auto m : sw.m) {
            std::vector<std::size_t> ks = sw.k;
            if (ks.empty())
                ks.push_back((m + 1) / 2);
            for (auto k : ks) {
                if (k < 1 || k > m)
                    continue;
                for (auto p : sw.p)
                    for (std::size_t s = 0; s < sw.seeds; ++s) {
                        GenSpec spec;
                        spec.n = n;
                        spec.m = m;
                        spec.k = k;
                        if (sw.party_list)
                            spec.model = PartyListModel{sw.groups, sw.overlap};
                        else
                            spec.model = ImpartialModel{p};

                        const auto base = mix_seed(config.seed, index++);
                        std::optional<Instance> inst;
                        std::uint64_t seed = base;
                        for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
                            seed = attempt == 0 ? base : mix_seed(base, attempt);
                            spec.seed = seed;
                            auto candidate = gen_profile(spec);
                            if (!sw.dmax || profile_params(candidate.profile()).max_degree <= *sw.dmax) {
                                inst = std::move(candidate);
                                break;
                            }
                        }
                        if (!inst)
                            continue;
                        auto committee = gen_committee(*inst, mix_seed(seed, 1));
                        out.push_back(Cell{std::move(*inst), std::move(committee), seed});
                    }
            }
        }
    return out;
}

} // namespace

Sweep parse_sweep(std::string_view text)
{
    Sweep sw;
    if (text.empty())
        return sw;
    for (auto item : split(text, ',')) {
        auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("sweep item '" + std::string(item) + "' is not key=value");
        auto key = item.substr(0, eq);
        auto value = item.substr(eq + 1);
        if (key == "n")
            sw.n = size_values(value);
        else if (key == "m")
            sw.m = size_values(value);
        else if (key == "k")
            sw.k = size_values(value);
        else if (key == "p") {
            sw.p.clear();
            for (auto v : split(value, '/'))
                sw.p.push_back(to_double(v));
        } else if (key == "seeds")
            sw.seeds = to_size(value);
        else if (key == "model") {
            if (value != "impartial" && value != "party-list")
                throw std::invalid_argument("unknown sweep model '" + std::string(value) + "'");
            sw.party_list = value == "party-list";
        } else if (key == "groups")
            sw.groups = to_size(value);
        else if (key == "overlap")
            sw.overlap = to_double(value);
        else if (key == "dmax")
            sw.dmax = to_size(value);
        else
            throw std::invalid_argument("unknown sweep key '" + std::string(key) + "'");
    }
    return sw;
}

int run_bench(const BenchConfig& config, std::ostream& csv, std::ostream& err, const StrategyRunner& runner)
{
    auto cells = instances(config);
    std::vector<BenchRow> rows;

    auto flush = [&] {
        csv << bench_csv_header << '\n';
        for (const auto& r : rows)
            csv << to_string(r.strategy) << ',' << to_string(r.axiom) << ',' << r.n << ',' << r.m << ',' << r.a << ',' << r.d
                << ',' << r.k << ',' << r.seed << ',' << r.verdict << ',' << r.elapsed_ms << '\n';
        csv.flush();
    };

    for (const auto& cell : cells) {
        const auto params = profile_params(cell.instance.profile());
        std::optional<bool> agreed;
        std::ostringstream verdicts;
        bool mismatch = false;

        for (auto strategy : config.strategies) {
            BenchRow row{strategy, config.axiom, cell.instance.n(), cell.instance.m(), params.max_ballot, params.max_degree,
                cell.instance.k(), cell.seed, "", 0};
            const auto start = std::chrono::steady_clock::now();
            try {
                auto verdict = run_with_timeout(runner, cell.instance, cell.committee, config.axiom, strategy, config.budget, config.timeout);
                if (verdict) {
                    row.verdict = verdict->satisfied ? "satisfied" : "violated";
                    if (agreed && *agreed != verdict->satisfied)
                        mismatch = true;
                    agreed = verdict->satisfied;
                } else {
                    row.verdict = "timeout";
                }
            } catch (const Error& e) {
                if (e.code() != ErrorCode::BudgetExceeded)
                    throw;
                row.verdict = "refused";
            }
            row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
            verdicts << "  " << to_string(strategy) << ": " << row.verdict << '\n';
            rows.push_back(std::move(row));
        }

        if (mismatch) {
            flush();
            err << "error: strategies disagree on instance seed " << cell.seed << " (axiom " << to_string(config.axiom) << ")\n"
                << verdicts.str() << "instance:\n"
                << serialize_profile(cell.instance, cell.committee);
            return exit_mismatch;
        }
    }
    flush();
    return exit_satisfied;
}

} // namespace proprep::cli
