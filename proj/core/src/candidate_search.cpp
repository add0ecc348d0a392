// Strategies that enumerate candidate sets S (the part of a coalition's common
// set that certifies level ell) and derive the largest coalition S admits.
//
// For PJR the coalition's represented set is also guessed: with U ⊆ W,
// X(S, U) = {i : S ⊆ A_i and A_i ∩ W ⊆ U} has common ⊇ S and W ∩ union ⊆ U.
// Any violating X* at level ell sits inside X(S, U) for S ⊆ common(X*),
// |S| = ell and U = W ∩ union(X*); X(S, U) only grows with U, so it suffices
// to try the U of size ell-1 inside R = W ∩ union(supporters(S)) that contain
// S ∩ W (or U = R when R is already small enough).
//
// For EJR no guess is needed: X(S) = {i : S ⊆ A_i and |A_i ∩ W| < ell}.

#include "audit_context.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

namespace proprep {

namespace {

class SubsetProbe {
public:
    SubsetProbe(const detail::AuditContext& ctx, detail::StopPoll& poll) : ctx_(ctx), poll_(poll)
    {
        ctx_.winners.for_each([&](std::size_t w) { winner_list_.push_back(w); });
    }

    /// Supporters admissible at level ell before S is known (EJR drops
    /// voters already holding ell winners).
    VoterSet eligible(std::size_t ell) const
    {
        if (ctx_.axiom == Axiom::EJR)
            return ctx_.below_overlap(ell);
        return VoterSet::full(ctx_.n);
    }

    /// S sorted ascending; `support` = eligible(ell) ∩ voters approving all of S.
    std::optional<ViolationWitness> probe(std::span<const std::size_t> subset, const VoterSet& support, std::size_t ell)
    {
        poll_();
        if (!quota_holds(support.count(), ell, ctx_.n, ctx_.k))
            return std::nullopt;
        if (ctx_.axiom == Axiom::EJR)
            return ctx_.witness(ell, support);

        std::vector<std::size_t> reached;
        std::vector<std::size_t> forced;
        for (auto w : winner_list_) {
            if (!ctx_.profile.approvers(w).intersects(support))
                continue;
            reached.push_back(w);
            if (std::binary_search(subset.begin(), subset.end(), w))
                forced.push_back(w);
        }
        const auto allowed = ell - 1;
        if (reached.size() <= allowed)
            return ctx_.witness(ell, support);
        if (forced.size() > allowed)
            return std::nullopt;

        std::vector<std::size_t> optional_members;
        std::set_difference(reached.begin(), reached.end(), forced.begin(), forced.end(), std::back_inserter(optional_members));
        const auto pick = allowed - forced.size();

        // Lexicographic walk over pick-subsets of optional_members; every
        // optional member left out blocks its approvers.
        std::vector<std::size_t> idx(pick);
        for (std::size_t i = 0; i < pick; ++i)
            idx[i] = i;
        std::vector<bool> kept(optional_members.size());
        while (true) {
            poll_();
            std::fill(kept.begin(), kept.end(), false);
            for (auto i : idx)
                kept[i] = true;
            VoterSet x = support;
            for (std::size_t i = 0; i < optional_members.size(); ++i)
                if (!kept[i])
                    x -= ctx_.profile.approvers(optional_members[i]);
            if (x.any() && quota_holds(x.count(), ell, ctx_.n, ctx_.k))
                return ctx_.witness(ell, x);

            std::size_t i = pick;
            while (i > 0 && idx[i - 1] == optional_members.size() - pick + i - 1)
                --i;
            if (i == 0)
                return std::nullopt;
            ++idx[i - 1];
            for (std::size_t j = i; j < pick; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }

private:
    const detail::AuditContext& ctx_;
    detail::StopPoll& poll_;
    std::vector<std::size_t> winner_list_;
};

/// ell-subsets of all candidates in lexicographic order. A prefix whose
/// supporters already miss the level-ell quota is abandoned: supporters
/// only shrink as S grows.
class LexSubsetSearch {
public:
    LexSubsetSearch(const detail::AuditContext& ctx, SubsetProbe& probe, detail::StopPoll& poll)
        : ctx_(ctx), probe_(probe), poll_(poll)
    {
    }

    std::optional<ViolationWitness> run(std::size_t ell)
    {
        ell_ = ell;
        subset_.clear();
        support_.assign(ell + 1, VoterSet(ctx_.n));
        support_[0] = probe_.eligible(ell);
        return extend(0);
    }

private:
    std::optional<ViolationWitness> extend(std::size_t start)
    {
        const auto depth = subset_.size();
        for (std::size_t c = start; c + (ell_ - depth) <= ctx_.m; ++c) {
            poll_();
            auto& support = support_[depth + 1];
            support = support_[depth];
            support &= ctx_.profile.approvers(c);
            if (!quota_holds(support.count(), ell_, ctx_.n, ctx_.k))
                continue;
            subset_.push_back(c);
            auto found = depth + 1 == ell_ ? probe_.probe(subset_, support, ell_) : extend(c + 1);
            subset_.pop_back();
            if (found)
                return found;
        }
        return std::nullopt;
    }

    const detail::AuditContext& ctx_;
    SubsetProbe& probe_;
    detail::StopPoll& poll_;
    std::size_t ell_ = 0;
    std::vector<std::size_t> subset_;
    std::vector<VoterSet> support_;
};

void combinations(std::span<const std::size_t> pool, std::size_t r, std::vector<std::size_t>& prefix, std::size_t start,
    std::set<std::vector<std::size_t>>& out)
{
    if (prefix.size() == r) {
        out.insert(prefix);
        return;
    }
    for (std::size_t i = start; i + (r - prefix.size()) <= pool.size(); ++i) {
        prefix.push_back(pool[i]);
        combinations(pool, r, prefix, i + 1, out);
        prefix.pop_back();
    }
}

} // namespace

Verdict check_candidate_subsets(const Instance& instance, const Committee& committee, Axiom axiom, const CheckOptions& options)
{
    detail::Stopwatch clock;
    detail::AuditContext ctx(instance, committee, axiom);
    detail::refuse_if(ctx.m > options.budget.candidate_subsets_max_candidates, Strategy::CandidateSubsets,
        "m=" + std::to_string(ctx.m) + " exceeds cap " + std::to_string(options.budget.candidate_subsets_max_candidates));

    detail::StopPoll poll(options.stop);
    SubsetProbe probe(ctx, poll);
    LexSubsetSearch search(ctx, probe, poll);
    for (std::size_t ell = 1; ell <= ctx.max_level(); ++ell)
        if (auto w = search.run(ell))
            return detail::make_verdict(std::move(w), Strategy::CandidateSubsets, clock);
    return detail::make_verdict(std::nullopt, Strategy::CandidateSubsets, clock);
}

Verdict check_bounded_ballot(const Instance& instance, const Committee& committee, Axiom axiom, const CheckOptions& options)
{
    detail::Stopwatch clock;
    detail::AuditContext ctx(instance, committee, axiom);
    detail::refuse_if(ctx.params.max_ballot > options.budget.bounded_ballot_max_size, Strategy::BoundedBallot,
        "a=" + std::to_string(ctx.params.max_ballot) + " exceeds cap " + std::to_string(options.budget.bounded_ballot_max_size));

    detail::StopPoll poll(options.stop);
    SubsetProbe probe(ctx, poll);
    for (std::size_t ell = 1; ell <= ctx.max_level(); ++ell) {
        const auto eligible = probe.eligible(ell);

        // A violating S lies in every member's ballot; only candidates whose
        // own supporters meet the quota can be in it.
        CandidateSet useful(ctx.m);
        for (std::size_t c = 0; c < ctx.m; ++c)
            if (quota_holds(ctx.profile.approvers(c).intersection_count(eligible), ell, ctx.n, ctx.k))
                useful.set(c);

        std::unordered_set<CandidateSet, BitVectorHash<CandidateTag>> blocks;
        for (std::size_t i = 0; i < ctx.n; ++i) {
            if (!eligible.test(i))
                continue;
            auto block = ctx.profile.ballot(i) & useful;
            if (block.count() >= ell)
                blocks.insert(std::move(block));
        }

        std::set<std::vector<std::size_t>> subsets;
        std::vector<std::size_t> prefix;
        for (const auto& block : blocks) {
            poll();
            auto members = block.indices();
            combinations(members, ell, prefix, 0, subsets);
        }

        for (const auto& subset : subsets) {
            VoterSet support = eligible;
            for (auto c : subset)
                support &= ctx.profile.approvers(c);
            if (auto w = probe.probe(subset, support, ell))
                return detail::make_verdict(std::move(w), Strategy::BoundedBallot, clock);
        }
    }
    return detail::make_verdict(std::nullopt, Strategy::BoundedBallot, clock);
}

} // namespace proprep
