#pragma once

#include "proprep/model.hpp"

#include <cstddef>
#include <cstdint>
#include <stop_token>

namespace proprep {

/// Input-size caps beyond which a strategy refuses with BudgetExceeded.
/// Exceeding a cap is a refusal, never a wrong answer.
struct Budget {
    std::size_t bruteforce_max_voters = 25;
    std::size_t candidate_subsets_max_candidates = 30;
    std::size_t bounded_ballot_max_size = 8;
    std::size_t bounded_degree_max_degree = 20;
    std::size_t biclique_max_subsets = 10'000'000;

    /// Defaults overridden by PROPREP_BUDGET_BRUTEFORCE, PROPREP_BUDGET_CANDIDATE_SUBSETS,
    /// PROPREP_BUDGET_BOUNDED_BALLOT, PROPREP_BUDGET_BOUNDED_DEGREE and
    /// PROPREP_BUDGET_BICLIQUE when set to a non-negative integer.
    static Budget from_environment();
};

struct CheckOptions {
    Budget budget{};
    /// Strategies poll this and throw Error(Cancelled) once stop is requested.
    std::stop_token stop{};
};

/// Whether X certifies an `ell`-level violation of `axiom`. JR only accepts ell = 1.
/// Throws EmptyCoalition or EllOutOfRange.
bool violates_at(const Instance& instance, const Committee& committee, Axiom axiom, std::size_t ell, const VoterSet& voters);

/// Polynomial JR test: scans every candidate's unrepresented approvers.
Verdict check_jr(const Instance& instance, const Committee& committee);

/// Every nonempty voter subset; the reference oracle. The witness is the
/// minimum under (ell, X read as a binary number).
Verdict check_bruteforce(const Instance& instance, const Committee& committee, Axiom axiom, const CheckOptions& options = {});

/// Enumerates ell-subsets S of candidates (and, for PJR, the represented set
/// U ⊆ W the coalition may touch) and tests the largest coalition they admit.
Verdict check_candidate_subsets(const Instance& instance, const Committee& committee, Axiom axiom, const CheckOptions& options = {});

/// As check_candidate_subsets, with ell <= a and S drawn from subsets of ballots.
Verdict check_bounded_ballot(const Instance& instance, const Committee& committee, Axiom axiom, const CheckOptions& options = {});

/// Enumerates voter subsets of each candidate's approver set.
Verdict check_bounded_degree(const Instance& instance, const Committee& committee, Axiom axiom, const CheckOptions& options = {});

/// Dispatch. JR always goes to check_jr; Auto picks the cheapest strategy
/// the budget allows.
Verdict check(const Instance& instance, const Committee& committee, Axiom axiom, Strategy strategy, const CheckOptions& options = {});

/// Argmin of the per-strategy cost surrogates (saturating 64-bit arithmetic);
/// ties go to BoundedDegree, BoundedBallot, CandidateSubsets, BruteForceVoters in that order.
Strategy select_strategy(std::size_t n, std::size_t m, std::size_t a, std::size_t d, std::size_t k);

/// Cost surrogate select_strategy assigns to `strategy`.
std::uint64_t strategy_cost(Strategy strategy, std::size_t n, std::size_t m, std::size_t a, std::size_t d, std::size_t k);

/// Recomputes the witness from the profile and checks it refutes the axiom.
/// Never throws; malformed witnesses are rejected.
bool validate_witness(const Instance& instance, const Committee& committee, const ViolationWitness& witness);

} // namespace proprep
