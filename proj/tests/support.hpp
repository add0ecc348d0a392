#pragma once

// Test-only helpers, including a naive oracle that shares no code with the
// library strategies: ballots are plain sorted vectors, coalitions are
// integer masks, and the quota is checked with a ceiling division.

#include "proprep/axioms.hpp"
#include "proprep/generators.hpp"
#include "proprep/model.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <ostream>
#include <set>
#include <vector>

namespace proprep {

template <class Tag>
void PrintTo(const BitVector<Tag>& set, std::ostream* os)
{
    *os << '{';
    const char* sep = "";
    set.for_each([&](std::size_t i) {
        *os << sep << i;
        sep = ",";
    });
    *os << "}/" << set.width();
}

} // namespace proprep

namespace proprep::testing {

using Ballots = std::vector<std::vector<std::size_t>>;

inline Instance make_instance(std::size_t m, std::size_t k, const Ballots& ballots)
{
    std::vector<CandidateSet> sets;
    for (const auto& b : ballots)
        sets.push_back(CandidateSet::from_indices(m, b));
    return Instance(Profile(ballots.size(), m, std::move(sets)), k);
}

inline Committee committee_of(std::size_t m, std::vector<std::size_t> members)
{
    return Committee{CandidateSet::from_indices(m, members)};
}

inline Ballots ballots_of(const Instance& instance)
{
    Ballots out;
    for (const auto& b : instance.profile().ballots())
        out.push_back(b.indices());
    return out;
}

struct NaiveViolation {
    std::size_t ell;
    std::uint64_t mask;
};

/// ceil(ell * n / k) <= |X|
inline bool naive_quota(std::size_t size, std::size_t ell, std::size_t n, std::size_t k)
{
    return size >= (ell * n + k - 1) / k;
}

/// First violation under (ell ascending, mask ascending), by definition.
inline std::optional<NaiveViolation> naive_first_violation(
    const Ballots& ballots, std::size_t k, const std::vector<std::size_t>& winners, Axiom axiom)
{
    const auto n = ballots.size();
    const std::set<std::size_t> w(winners.begin(), winners.end());
    const std::size_t top = axiom == Axiom::JR ? 1 : k;
    for (std::size_t ell = 1; ell <= top; ++ell) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1)
                    members.push_back(i);
            if (!naive_quota(members.size(), ell, n, k))
                continue;

            std::set<std::size_t> common(ballots[members[0]].begin(), ballots[members[0]].end());
            std::set<std::size_t> uni;
            std::size_t max_overlap = 0;
            for (auto i : members) {
                std::set<std::size_t> next;
                for (auto c : ballots[i])
                    if (common.count(c))
                        next.insert(c);
                common = next;
                uni.insert(ballots[i].begin(), ballots[i].end());
                std::size_t overlap = 0;
                for (auto c : ballots[i])
                    overlap += w.count(c);
                max_overlap = std::max(max_overlap, overlap);
            }
            if (common.size() < ell)
                continue;
            std::size_t represented = 0;
            for (auto c : uni)
                represented += w.count(c);
            const bool violated = axiom == Axiom::EJR ? max_overlap < ell : represented < ell;
            if (violated)
                return NaiveViolation{ell, mask};
        }
    }
    return std::nullopt;
}

inline std::uint64_t mask_of(const VoterSet& voters)
{
    std::uint64_t mask = 0;
    voters.for_each([&](std::size_t i) { mask |= std::uint64_t{1} << i; });
    return mask;
}

struct Audit {
    Instance instance;
    Committee committee;
};

/// Impartial instance with n in [2,10], m in [2,7], p in {0.2,0.5,0.8},
/// k in [1,m] and a random committee, all drawn from `seed`.
inline Audit random_small_audit(std::uint64_t seed, std::size_t max_n = 10, std::size_t max_m = 7)
{
    Rng rng(seed);
    static constexpr double ps[] = {0.2, 0.5, 0.8};
    GenSpec spec;
    spec.n = 2 + rng.below(max_n - 1);
    spec.m = 2 + rng.below(max_m - 1);
    spec.k = 1 + rng.below(spec.m);
    spec.model = ImpartialModel{ps[rng.below(3)]};
    spec.seed = mix_seed(seed, 1);
    auto instance = gen_profile(spec);
    auto committee = gen_committee(instance, mix_seed(seed, 2));
    return Audit{std::move(instance), std::move(committee)};
}

inline constexpr Strategy enumerating_strategies[] = {
    Strategy::BruteForceVoters,
    Strategy::CandidateSubsets,
    Strategy::BoundedBallot,
    Strategy::BoundedDegree,
};

inline Verdict run_named(const Instance& instance, const Committee& committee, Axiom axiom, Strategy strategy)
{
    switch (strategy) {
    case Strategy::BruteForceVoters: return check_bruteforce(instance, committee, axiom);
    case Strategy::CandidateSubsets: return check_candidate_subsets(instance, committee, axiom);
    case Strategy::BoundedBallot: return check_bounded_ballot(instance, committee, axiom);
    case Strategy::BoundedDegree: return check_bounded_degree(instance, committee, axiom);
    case Strategy::JrScan: return check_jr(instance, committee);
    case Strategy::Auto: break;
    }
    return check(instance, committee, axiom, Strategy::Auto);
}

} // namespace proprep::testing
