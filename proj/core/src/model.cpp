#include "proprep/model.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace proprep {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::WrongCommitteeSize: return "WrongCommitteeSize";
    case ErrorCode::CandidateOutOfRange: return "CandidateOutOfRange";
    case ErrorCode::MalformedProfile: return "MalformedProfile";
    case ErrorCode::EmptyCoalition: return "EmptyCoalition";
    case ErrorCode::EllOutOfRange: return "EllOutOfRange";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParameterTooSmall: return "ParameterTooSmall";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Cancelled: return "Cancelled";
    }
    return "Unknown";
}

Profile::Profile(std::size_t voters, std::size_t candidates, std::vector<CandidateSet> ballots)
    : candidates_(candidates), ballots_(std::move(ballots))
{
    if (voters == 0 || candidates == 0)
        throw Error(ErrorCode::MalformedProfile, "profile needs at least one voter and one candidate");
    if (ballots_.size() != voters)
        throw Error(ErrorCode::MalformedProfile,
            "expected " + std::to_string(voters) + " ballots, got " + std::to_string(ballots_.size()));

    approvers_.assign(candidates, VoterSet(voters));
    for (std::size_t i = 0; i < ballots_.size(); ++i) {
        if (ballots_[i].width() != candidates)
            throw Error(ErrorCode::MalformedProfile, "ballot " + std::to_string(i) + " has width "
                    + std::to_string(ballots_[i].width()) + ", expected " + std::to_string(candidates));
        ballots_[i].for_each([&](std::size_t c) { approvers_[c].set(i); });
    }
}

Instance::Instance(Profile profile, std::size_t k) : profile_(std::move(profile)), k_(k)
{
    if (k_ < 1 || k_ > profile_.candidate_count())
        throw Error(ErrorCode::MalformedProfile,
            "committee size k=" + std::to_string(k_) + " outside 1.." + std::to_string(profile_.candidate_count()));
}

Committee Committee::of(std::span<const std::size_t> indices)
{
    std::size_t width = 0;
    for (auto i : indices)
        width = std::max(width, i + 1);
    return Committee{CandidateSet::from_indices(width, indices)};
}

Committee Committee::of(std::initializer_list<std::size_t> indices)
{
    return of(std::span<const std::size_t>(indices.begin(), indices.size()));
}

namespace {

constexpr std::array<std::pair<Axiom, std::string_view>, 3> axiom_names{{
    {Axiom::JR, "jr"},
    {Axiom::PJR, "pjr"},
    {Axiom::EJR, "ejr"},
}};

constexpr std::array<std::pair<Strategy, std::string_view>, 6> strategy_names{{
    {Strategy::Auto, "auto"},
    {Strategy::BruteForceVoters, "bruteforce"},
    {Strategy::CandidateSubsets, "candidate-subsets"},
    {Strategy::BoundedBallot, "bounded-ballot"},
    {Strategy::BoundedDegree, "bounded-degree"},
    {Strategy::JrScan, "jr-scan"},
}};

} // namespace

std::string_view to_string(Axiom axiom) noexcept
{
    for (auto [a, name] : axiom_names)
        if (a == axiom)
            return name;
    return "?";
}

std::optional<Axiom> parse_axiom(std::string_view name) noexcept
{
    for (auto [a, n] : axiom_names)
        if (n == name)
            return a;
    return std::nullopt;
}

std::string_view to_string(Strategy strategy) noexcept
{
    for (auto [s, name] : strategy_names)
        if (s == strategy)
            return name;
    return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) noexcept
{
    for (auto [s, n] : strategy_names)
        if (n == name)
            return s;
    return std::nullopt;
}

bool quota_holds(std::size_t size_x, std::size_t ell, std::size_t n, std::size_t k)
{
    using wide = unsigned __int128;
    return static_cast<wide>(k) * size_x >= static_cast<wide>(ell) * n;
}

std::size_t quota_level(std::size_t size_x, std::size_t n, std::size_t k)
{
    using wide = unsigned __int128;
    return static_cast<std::size_t>(static_cast<wide>(k) * size_x / n);
}

void validate_audit_input(const Instance& instance, const Committee& committee)
{
    const auto& profile = instance.profile();
    if (committee.members.extent() > instance.m())
        throw Error(ErrorCode::CandidateOutOfRange,
            "committee member " + std::to_string(committee.members.extent() - 1) + " outside 0.."
                + std::to_string(instance.m() - 1));
    if (committee.size() != instance.k())
        throw Error(ErrorCode::WrongCommitteeSize,
            "committee has " + std::to_string(committee.size()) + " members, expected k=" + std::to_string(instance.k()));
    for (const auto& b : profile.ballots())
        if (b.width() != instance.m())
            throw Error(ErrorCode::MalformedProfile, "ballot width differs from candidate count");
}

CoalitionStats coalition_stats(const Profile& profile, const VoterSet& voters, const CandidateSet& committee)
{
    if (voters.width() != profile.voter_count())
        throw WidthMismatch(voters.width(), profile.voter_count());
    if (committee.width() != profile.candidate_count())
        throw WidthMismatch(committee.width(), profile.candidate_count());
    if (voters.none())
        throw Error(ErrorCode::EmptyCoalition, "coalition is empty");

    const auto m = profile.candidate_count();
    CoalitionStats s{0, CandidateSet::full(m), CandidateSet(m), CandidateSet(m), 0};
    voters.for_each([&](std::size_t i) {
        const auto& b = profile.ballot(i);
        ++s.size;
        s.common &= b;
        s.union_ |= b;
        s.max_overlap = std::max(s.max_overlap, b.intersection_count(committee));
    });
    s.represented = s.union_ & committee;
    return s;
}

ProfileParams profile_params(const Profile& profile)
{
    ProfileParams p;
    for (const auto& b : profile.ballots())
        p.max_ballot = std::max(p.max_ballot, b.count());
    for (std::size_t c = 0; c < profile.candidate_count(); ++c)
        p.max_degree = std::max(p.max_degree, profile.approvers(c).count());
    return p;
}

} // namespace proprep
