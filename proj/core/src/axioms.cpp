#include "proprep/axioms.hpp"

#include "audit_context.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <string>

namespace proprep {

namespace detail {

AuditContext::AuditContext(const Instance& instance_, const Committee& committee, Axiom axiom_)
    : instance(instance_)
    , profile(instance_.profile())
    , axiom(axiom_)
    , winners((validate_audit_input(instance_, committee), committee.members_in(instance_.m())))
    , n(instance_.n())
    , m(instance_.m())
    , k(instance_.k())
    , params(profile_params(instance_.profile()))
{
    overlap.reserve(n);
    for (const auto& b : profile.ballots())
        overlap.push_back(b.intersection_count(winners));
}

std::size_t AuditContext::max_level() const noexcept
{
    if (axiom == Axiom::JR)
        return std::min<std::size_t>(1, params.max_ballot);
    return std::min(k, params.max_ballot);
}

VoterSet AuditContext::below_overlap(std::size_t ell) const
{
    VoterSet out(n);
    for (std::size_t i = 0; i < n; ++i)
        if (overlap[i] < ell)
            out.set(i);
    return out;
}

ViolationWitness AuditContext::witness(std::size_t ell, const VoterSet& voters) const
{
    auto stats = coalition_stats(profile, voters, winners);
    return ViolationWitness{axiom, ell, voters, std::move(stats.common), std::move(stats.represented), stats.max_overlap};
}

Verdict make_verdict(std::optional<ViolationWitness> witness, Strategy used, const Stopwatch& clock)
{
    Verdict v;
    v.satisfied = !witness.has_value();
    v.witness = std::move(witness);
    v.strategy_used = used;
    v.elapsed = clock.elapsed();
    return v;
}

void refuse_if(bool over, Strategy strategy, const std::string& what)
{
    if (over)
        throw Error(ErrorCode::BudgetExceeded, std::string(to_string(strategy)) + " refused: " + what);
}

} // namespace detail

namespace {

std::size_t env_or(const char* name, std::size_t fallback)
{
    const char* raw = std::getenv(name);
    if (!raw)
        return fallback;
    std::string_view text(raw);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        return fallback;
    return value;
}

constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    return p > saturated ? saturated : static_cast<std::uint64_t>(p);
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        r = sat_mul(r, base);
        if (r == saturated || r == 0)
            break;
    }
    return exp == 0 ? 1 : r;
}

std::uint64_t sat_binom(std::uint64_t n, std::uint64_t r)
{
    if (r > n)
        return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > saturated)
            return saturated;
    }
    return static_cast<std::uint64_t>(acc);
}

} // namespace

Budget Budget::from_environment()
{
    Budget b;
    b.bruteforce_max_voters = env_or("PROPREP_BUDGET_BRUTEFORCE", b.bruteforce_max_voters);
    b.candidate_subsets_max_candidates = env_or("PROPREP_BUDGET_CANDIDATE_SUBSETS", b.candidate_subsets_max_candidates);
    b.bounded_ballot_max_size = env_or("PROPREP_BUDGET_BOUNDED_BALLOT", b.bounded_ballot_max_size);
    b.bounded_degree_max_degree = env_or("PROPREP_BUDGET_BOUNDED_DEGREE", b.bounded_degree_max_degree);
    b.biclique_max_subsets = env_or("PROPREP_BUDGET_BICLIQUE", b.biclique_max_subsets);
    return b;
}

bool violates_at(const Instance& instance, const Committee& committee, Axiom axiom, std::size_t ell, const VoterSet& voters)
{
    validate_audit_input(instance, committee);
    if (ell < 1 || ell > instance.k() || (axiom == Axiom::JR && ell != 1))
        throw Error(ErrorCode::EllOutOfRange, "ell=" + std::to_string(ell) + " outside the levels of " + std::string(to_string(axiom)));
    auto winners = committee.members_in(instance.m());
    auto stats = coalition_stats(instance.profile(), voters, winners);
    if (!quota_holds(stats.size, ell, instance.n(), instance.k()) || stats.common.count() < ell)
        return false;
    if (axiom == Axiom::EJR)
        return stats.max_overlap < ell;
    return stats.represented.count() < ell;
}

Verdict check_jr(const Instance& instance, const Committee& committee)
{
    detail::Stopwatch clock;
    detail::AuditContext ctx(instance, committee, Axiom::JR);

    VoterSet unrepresented(ctx.n);
    for (std::size_t i = 0; i < ctx.n; ++i)
        if (ctx.overlap[i] == 0)
            unrepresented.set(i);

    for (std::size_t c = 0; c < ctx.m; ++c) {
        auto group = ctx.profile.approvers(c) & unrepresented;
        if (group.none() || !quota_holds(group.count(), 1, ctx.n, ctx.k))
            continue;
        auto w = ctx.witness(1, group);
        if (!validate_witness(instance, committee, w))
            throw std::logic_error("jr scan produced an invalid witness");
        return detail::make_verdict(std::move(w), Strategy::JrScan, clock);
    }
    return detail::make_verdict(std::nullopt, Strategy::JrScan, clock);
}

std::uint64_t strategy_cost(Strategy strategy, std::size_t n, std::size_t m, std::size_t a, std::size_t d, std::size_t k)
{
    const auto mn = sat_mul(m, n);
    switch (strategy) {
    case Strategy::BruteForceVoters:
        return sat_mul(sat_pow(2, n), mn);
    case Strategy::CandidateSubsets:
        return sat_mul(sat_mul(sat_pow(4, m), k), mn);
    case Strategy::BoundedBallot: {
        auto subsets = sat_mul(n, sat_binom(a, std::min(a, k)));
        return sat_mul(sat_mul(subsets, sat_pow(k, a > 0 ? a - 1 : 0)), mn);
    }
    case Strategy::BoundedDegree:
        return sat_mul(sat_mul(sat_mul(m, sat_pow(2, d)), d), mn);
    default:
        return saturated;
    }
}

namespace {

constexpr std::array<Strategy, 4> tie_order{
    Strategy::BoundedDegree,
    Strategy::BoundedBallot,
    Strategy::CandidateSubsets,
    Strategy::BruteForceVoters,
};

bool within_budget(Strategy s, const Instance& instance, const ProfileParams& p, const Budget& b)
{
    switch (s) {
    case Strategy::BruteForceVoters: return instance.n() <= b.bruteforce_max_voters;
    case Strategy::CandidateSubsets: return instance.m() <= b.candidate_subsets_max_candidates;
    case Strategy::BoundedBallot: return p.max_ballot <= b.bounded_ballot_max_size;
    case Strategy::BoundedDegree: return p.max_degree <= b.bounded_degree_max_degree;
    default: return true;
    }
}

} // namespace

Strategy select_strategy(std::size_t n, std::size_t m, std::size_t a, std::size_t d, std::size_t k)
{
    Strategy best = tie_order.front();
    auto best_cost = strategy_cost(best, n, m, a, d, k);
    for (auto s : tie_order) {
        auto c = strategy_cost(s, n, m, a, d, k);
        if (c < best_cost) {
            best = s;
            best_cost = c;
        }
    }
    return best;
}

Verdict check(const Instance& instance, const Committee& committee, Axiom axiom, Strategy strategy, const CheckOptions& options)
{
    if (axiom == Axiom::JR)
        return check_jr(instance, committee);

    if (strategy == Strategy::Auto) {
        validate_audit_input(instance, committee);
        auto p = profile_params(instance.profile());
        const auto n = instance.n(), m = instance.m(), k = instance.k();
        strategy = select_strategy(n, m, p.max_ballot, p.max_degree, k);
        if (!within_budget(strategy, instance, p, options.budget)) {
            // Cheapest strategy the caps allow; if none, keep the argmin and let it refuse.
            auto ranked = std::vector<Strategy>(tie_order.begin(), tie_order.end());
            std::stable_sort(ranked.begin(), ranked.end(), [&](Strategy x, Strategy y) {
                return strategy_cost(x, n, m, p.max_ballot, p.max_degree, k) < strategy_cost(y, n, m, p.max_ballot, p.max_degree, k);
            });
            for (auto s : ranked)
                if (within_budget(s, instance, p, options.budget)) {
                    strategy = s;
                    break;
                }
        }
    }

    switch (strategy) {
    case Strategy::BruteForceVoters: return check_bruteforce(instance, committee, axiom, options);
    case Strategy::CandidateSubsets: return check_candidate_subsets(instance, committee, axiom, options);
    case Strategy::BoundedBallot: return check_bounded_ballot(instance, committee, axiom, options);
    case Strategy::BoundedDegree: return check_bounded_degree(instance, committee, axiom, options);
    case Strategy::JrScan:
    case Strategy::Auto: break;
    }
    throw Error(ErrorCode::InvalidSpec, "strategy " + std::string(to_string(strategy)) + " cannot audit " + std::string(to_string(axiom)));
}

bool validate_witness(const Instance& instance, const Committee& committee, const ViolationWitness& witness)
{
    try {
        validate_audit_input(instance, committee);
        const auto n = instance.n(), k = instance.k();
        const auto ell = witness.ell;
        if (ell < 1 || ell > k || (witness.axiom == Axiom::JR && ell != 1))
            return false;
        if (witness.voters.width() != n || witness.voters.none())
            return false;
        auto winners = committee.members_in(instance.m());
        auto stats = coalition_stats(instance.profile(), witness.voters, winners);
        if (stats.common != witness.common || stats.represented != witness.represented || stats.max_overlap != witness.max_overlap)
            return false;
        if (!quota_holds(stats.size, ell, n, k) || stats.common.count() < ell)
            return false;
        if (witness.axiom == Axiom::EJR)
            return stats.max_overlap <= ell - 1;
        return stats.represented.count() <= ell - 1;
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace proprep
