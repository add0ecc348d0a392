// Strategies that enumerate coalitions directly: all voter subsets, or the
// subsets of each candidate's approver set.

#include "audit_context.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace proprep {

namespace {

struct Candidate {
    std::size_t ell;
    VoterSet voters;
};

/// Depth-first walk over the subsets of a voter pool, one node per subset,
/// carrying the running intersection, union and max overlap. Keeps the
/// minimum violation under (ell, X as integer).
///
/// Subtrees are cut when the running intersection is empty, or when the
/// lowest level the current coalition could violate already exceeds its
/// intersection size or the best level found: extending X only shrinks the
/// intersection and only raises the represented count.
class CoalitionWalk {
public:
    CoalitionWalk(const detail::AuditContext& ctx, detail::StopPoll& poll)
        : ctx_(ctx), poll_(poll), max_level_(ctx.max_level())
    {
    }

    /// Only coalitions whose common set has no member below `first_common`
    /// are scored, so a walk per candidate c visits each X once overall.
    void run(std::span<const std::size_t> pool, std::size_t first_common = 0)
    {
        if (max_level_ == 0 || pool.empty())
            return;
        pool_ = pool;
        first_common_ = first_common;
        common_.assign(pool.size() + 1, CandidateSet(ctx_.m));
        union_.assign(pool.size() + 1, CandidateSet(ctx_.m));
        over_.assign(pool.size() + 1, 0);
        chosen_.assign(pool.size(), 0);
        extend(0, 0);
    }

    std::optional<Candidate>& best() { return best_; }

private:
    void extend(std::size_t from, std::size_t depth)
    {
        for (std::size_t j = from; j < pool_.size(); ++j) {
            poll_();
            const auto v = pool_[j];
            const auto& ballot = ctx_.profile.ballot(v);
            auto& common = common_[depth + 1];
            auto& uni = union_[depth + 1];
            if (depth == 0) {
                common = ballot;
                uni = ballot;
                over_[1] = ctx_.overlap[v];
            } else {
                common = common_[depth];
                common &= ballot;
                uni = union_[depth];
                uni |= ballot;
                over_[depth + 1] = std::max(over_[depth], ctx_.overlap[v]);
            }
            const auto common_size = common.count();
            if (common_size == 0)
                continue;
            chosen_[depth] = v;

            const auto size = depth + 1;
            const auto lowest = 1 + (ctx_.axiom == Axiom::EJR ? over_[size] : uni.intersection_count(ctx_.winners));
            const auto ceiling = std::min(common_size, max_level_);
            if (lowest > ceiling || (best_ && lowest > best_->ell))
                continue;

            if (lowest <= quota_level(size, ctx_.n, ctx_.k) && scored(common))
                offer(lowest, size);

            extend(j + 1, depth + 1);
        }
    }

    bool scored(const CandidateSet& common) const
    {
        return common.lowest() >= first_common_;
    }

    void offer(std::size_t ell, std::size_t size)
    {
        VoterSet x(ctx_.n);
        for (std::size_t i = 0; i < size; ++i)
            x.set(chosen_[i]);
        if (!best_ || ell < best_->ell || (ell == best_->ell && x.compare_as_integer(best_->voters) < 0))
            best_ = Candidate{ell, std::move(x)};
    }

    const detail::AuditContext& ctx_;
    detail::StopPoll& poll_;
    std::size_t max_level_;
    std::span<const std::size_t> pool_;
    std::size_t first_common_ = 0;
    std::vector<CandidateSet> common_;
    std::vector<CandidateSet> union_;
    std::vector<std::size_t> over_;
    std::vector<std::size_t> chosen_;
    std::optional<Candidate> best_;
};

std::optional<ViolationWitness> to_witness(const detail::AuditContext& ctx, std::optional<Candidate>& best)
{
    if (!best)
        return std::nullopt;
    return ctx.witness(best->ell, best->voters);
}

} // namespace

Verdict check_bruteforce(const Instance& instance, const Committee& committee, Axiom axiom, const CheckOptions& options)
{
    detail::Stopwatch clock;
    detail::AuditContext ctx(instance, committee, axiom);
    detail::refuse_if(ctx.n > options.budget.bruteforce_max_voters, Strategy::BruteForceVoters,
        "n=" + std::to_string(ctx.n) + " exceeds cap " + std::to_string(options.budget.bruteforce_max_voters));

    detail::StopPoll poll(options.stop);
    std::vector<std::size_t> everyone(ctx.n);
    for (std::size_t i = 0; i < ctx.n; ++i)
        everyone[i] = i;

    CoalitionWalk walk(ctx, poll);
    walk.run(everyone);
    return detail::make_verdict(to_witness(ctx, walk.best()), Strategy::BruteForceVoters, clock);
}

Verdict check_bounded_degree(const Instance& instance, const Committee& committee, Axiom axiom, const CheckOptions& options)
{
    detail::Stopwatch clock;
    detail::AuditContext ctx(instance, committee, axiom);
    detail::refuse_if(ctx.params.max_degree > options.budget.bounded_degree_max_degree, Strategy::BoundedDegree,
        "d=" + std::to_string(ctx.params.max_degree) + " exceeds cap " + std::to_string(options.budget.bounded_degree_max_degree));

    detail::StopPoll poll(options.stop);
    CoalitionWalk walk(ctx, poll);
    // Every violating coalition lies inside approvers(c) for each c in its
    // common set; it is scored only under the smallest such c.
    for (std::size_t c = 0; c < ctx.m; ++c) {
        auto pool = ctx.profile.approvers(c).indices();
        walk.run(pool, c);
    }
    return detail::make_verdict(to_witness(ctx, walk.best()), Strategy::BoundedDegree, clock);
}

} // namespace proprep
