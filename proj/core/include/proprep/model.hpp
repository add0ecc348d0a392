#pragma once

#include "proprep/bitset.hpp"
#include "proprep/errors.hpp"

#include <chrono>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace proprep {

/// Approval ballots of n voters over m candidates.
///
/// Immutable once built. The constructor also derives the approver set of
/// every candidate, which is what the voter-side enumerations intersect.
class Profile {
public:
    /// Throws Error(MalformedProfile) if n or m is zero, the ballot count
    /// differs from n, or a ballot has the wrong width.
    Profile(std::size_t voters, std::size_t candidates, std::vector<CandidateSet> ballots);

    std::size_t voter_count() const noexcept { return ballots_.size(); }
    std::size_t candidate_count() const noexcept { return candidates_; }

    const CandidateSet& ballot(std::size_t voter) const { return ballots_.at(voter); }
    std::span<const CandidateSet> ballots() const noexcept { return ballots_; }

    /// Voters approving candidate `c`.
    const VoterSet& approvers(std::size_t c) const { return approvers_.at(c); }

    friend bool operator==(const Profile& a, const Profile& b) noexcept
    {
        return a.candidates_ == b.candidates_ && a.ballots_ == b.ballots_;
    }

private:
    std::size_t candidates_;
    std::vector<CandidateSet> ballots_;
    std::vector<VoterSet> approvers_;
};

/// A profile together with the target committee size k, 1 <= k <= m.
class Instance {
public:
    Instance(Profile profile, std::size_t k);

    const Profile& profile() const noexcept { return profile_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return profile_.voter_count(); }
    std::size_t m() const noexcept { return profile_.candidate_count(); }

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    Profile profile_;
    std::size_t k_;
};

/// The winning set under audit. Its width may differ from the instance's m;
/// validate_audit_input reports members outside the candidate range.
struct Committee {
    CandidateSet members;

    static Committee of(std::span<const std::size_t> indices);
    static Committee of(std::initializer_list<std::size_t> indices);

    std::size_t size() const noexcept { return members.count(); }

    /// Members as a set of width m. Precondition: all members < m.
    CandidateSet members_in(std::size_t m) const { return members.resized(m); }

    friend bool operator==(const Committee&, const Committee&) = default;
};

enum class Axiom { JR, PJR, EJR };

std::string_view to_string(Axiom axiom) noexcept;
std::optional<Axiom> parse_axiom(std::string_view name) noexcept;

enum class Strategy {
    Auto,
    BruteForceVoters,
    CandidateSubsets,
    BoundedBallot,
    BoundedDegree,
    JrScan,
};

std::string_view to_string(Strategy strategy) noexcept;
std::optional<Strategy> parse_strategy(std::string_view name) noexcept;

/// Certificate that a committee fails an axiom at level `ell`.
///
/// `represented` is W ∩ (union of the coalition's ballots) for every axiom;
/// `max_overlap` is max over voters in the coalition of |W ∩ A_i|, which is
/// what the EJR condition bounds.
struct ViolationWitness {
    Axiom axiom = Axiom::PJR;
    std::size_t ell = 0;
    VoterSet voters;
    CandidateSet common;
    CandidateSet represented;
    std::size_t max_overlap = 0;

    friend bool operator==(const ViolationWitness&, const ViolationWitness&) = default;
};

struct Verdict {
    bool satisfied = true;
    std::optional<ViolationWitness> witness;
    Strategy strategy_used = Strategy::Auto;
    std::chrono::nanoseconds elapsed{0};
};

/// k * size_x >= ell * n, in 128-bit integer arithmetic.
bool quota_holds(std::size_t size_x, std::size_t ell, std::size_t n, std::size_t k);

/// Largest ell for which quota_holds(size_x, ell, n, k), i.e. floor(k * size_x / n).
std::size_t quota_level(std::size_t size_x, std::size_t n, std::size_t k);

/// Throws Error with CandidateOutOfRange, WrongCommitteeSize or MalformedProfile.
void validate_audit_input(const Instance& instance, const Committee& committee);

struct CoalitionStats {
    std::size_t size = 0;
    CandidateSet common;
    CandidateSet union_;
    CandidateSet represented;
    std::size_t max_overlap = 0;
};

/// Throws Error(EmptyCoalition) for an empty X, WidthMismatch for a voter set
/// or committee of the wrong width.
CoalitionStats coalition_stats(const Profile& profile, const VoterSet& voters, const CandidateSet& committee);

struct ProfileParams {
    std::size_t max_ballot = 0; ///< a
    std::size_t max_degree = 0; ///< d
};

ProfileParams profile_params(const Profile& profile);

} // namespace proprep
