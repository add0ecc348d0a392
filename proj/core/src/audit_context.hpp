#pragma once

#include "proprep/axioms.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

namespace proprep::detail {

/// Per-audit precomputation shared by every strategy.
struct AuditContext {
    AuditContext(const Instance& instance, const Committee& committee, Axiom axiom);

    const Instance& instance;
    const Profile& profile;
    Axiom axiom;
    CandidateSet winners;
    std::size_t n;
    std::size_t m;
    std::size_t k;
    ProfileParams params;
    /// |W ∩ A_i| per voter.
    std::vector<std::size_t> overlap;

    /// Highest ell worth testing: 1 for JR, else min(k, a).
    std::size_t max_level() const noexcept;

    /// Voters with |W ∩ A_i| < ell.
    VoterSet below_overlap(std::size_t ell) const;

    ViolationWitness witness(std::size_t ell, const VoterSet& voters) const;
};

/// Polls a stop token once every 4096 calls.
class StopPoll {
public:
    explicit StopPoll(const std::stop_token& token) : token_(token) {}

    void operator()()
    {
        if ((++ticks_ & 0xfff) == 0 && token_.stop_requested())
            throw Error(ErrorCode::Cancelled, "audit cancelled");
    }

private:
    const std::stop_token& token_;
    std::size_t ticks_ = 0;
};

class Stopwatch {
public:
    std::chrono::nanoseconds elapsed() const { return std::chrono::steady_clock::now() - start_; }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Verdict make_verdict(std::optional<ViolationWitness> witness, Strategy used, const Stopwatch& clock);

void refuse_if(bool over, Strategy strategy, const std::string& what);

} // namespace proprep::detail
