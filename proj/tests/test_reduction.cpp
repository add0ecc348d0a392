#include "support.hpp"

#include "proprep/reduction.hpp"

#include <gtest/gtest.h>

using namespace proprep;
using namespace proprep::testing;

namespace {

BipartiteGraph complete(std::size_t left, std::size_t right)
{
    std::vector<BipartiteGraph::Edge> edges;
    for (std::size_t l = 0; l < left; ++l)
        for (std::size_t r = 0; r < right; ++r)
            edges.emplace_back(l, r);
    return BipartiteGraph(left, right, edges);
}

BipartiteGraph matching(std::size_t size)
{
    std::vector<BipartiteGraph::Edge> edges;
    for (std::size_t i = 0; i < size; ++i)
        edges.emplace_back(i, i);
    return BipartiteGraph(size, size, edges);
}

// Exhaustive over left subsets too, sharing nothing with has_balanced_biclique.
bool naive_biclique(const BipartiteGraph& g, std::size_t ell)
{
    std::set<std::pair<std::size_t, std::size_t>> e(g.edges().begin(), g.edges().end());
    const auto L = g.left_size(), R = g.right_size();
    for (std::uint64_t lm = 0; lm < (std::uint64_t{1} << L); ++lm) {
        if (static_cast<std::size_t>(std::popcount(lm)) != ell)
            continue;
        for (std::uint64_t rm = 0; rm < (std::uint64_t{1} << R); ++rm) {
            if (static_cast<std::size_t>(std::popcount(rm)) != ell)
                continue;
            bool all = true;
            for (std::size_t l = 0; l < L && all; ++l)
                for (std::size_t r = 0; r < R && all; ++r)
                    if ((lm >> l & 1) && (rm >> r & 1) && !e.count({l, r}))
                        all = false;
            if (all)
                return true;
        }
    }
    return false;
}

ErrorCode error_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::Cancelled;
}

} // namespace

TEST(BipartiteGraph, ValidatesAndSorts)
{
    BipartiteGraph g(2, 3, {{1, 2}, {0, 1}, {1, 0}});
    EXPECT_EQ(g.edges(), (std::vector<BipartiteGraph::Edge>{{0, 1}, {1, 0}, {1, 2}}));
    EXPECT_EQ(g.neighbourhood(0).indices(), (std::vector<std::size_t>{1}));
    EXPECT_TRUE(g.neighbourhood(1).indices() == (std::vector<std::size_t>{0}));
    EXPECT_EQ(error_of([] { BipartiteGraph(2, 2, {{2, 0}}); }), ErrorCode::InvalidSpec);
    EXPECT_EQ(error_of([] { BipartiteGraph(2, 2, {{0, 0}, {0, 0}}); }), ErrorCode::InvalidSpec);
}

TEST(Reduction, SizeIdentitiesForThreeByThree)
{
    auto out = reduce_biclique_to_pjr(complete(3, 3), 3);
    EXPECT_EQ(out.count(CandidateBlock::C0), 3u);
    EXPECT_EQ(out.count(CandidateBlock::C1), 2u);
    EXPECT_EQ(out.count(CandidateBlock::C2), 4u);
    EXPECT_EQ(out.count(VoterBlock::N0), 3u);
    EXPECT_EQ(out.count(VoterBlock::N1), 9u);
    EXPECT_EQ(out.count(VoterBlock::N2), 4u);
    EXPECT_EQ(out.instance.n(), 16u);
    EXPECT_EQ(out.instance.k(), 4u);
    EXPECT_EQ(out.instance.m(), 9u);
    EXPECT_EQ(out.committee.members.indices(), (std::vector<std::size_t>{3, 4, 5, 6}));
}

TEST(Reduction, SizeIdentitiesForFourRightVertices)
{
    auto out = reduce_biclique_to_pjr(complete(3, 4), 3);
    EXPECT_EQ(out.count(CandidateBlock::C2), 4u);
    EXPECT_EQ(out.instance.n(), 20u);
    EXPECT_EQ(out.instance.k(), 4u);
    EXPECT_EQ(out.instance.n() % out.instance.k(), 0u);
    EXPECT_EQ(out.instance.n() / out.instance.k(), 5u);
}

TEST(Reduction, SizeIdentitiesHoldAcrossParameters)
{
    for (std::size_t s = 3; s <= 9; ++s)
        for (std::size_t ell = 3; ell <= 7; ++ell) {
            auto out = reduce_biclique_to_pjr(BipartiteGraph(2, s, {}), ell);
            const auto n = out.instance.n(), k = out.instance.k();
            ASSERT_EQ(n, 2 * (s + 1) * (ell - 1));
            ASSERT_EQ(k, 2 * ell - 2);
            ASSERT_EQ(n, (s + 1) * k);
            ASSERT_EQ(out.count(CandidateBlock::C2), s * ell + ell - 3 * s + ell - 2);
            ASSERT_EQ(out.count(VoterBlock::N1), ell * s);
            ASSERT_EQ(out.candidate_map.size(), out.instance.m());
            ASSERT_EQ(out.voter_map.size(), n);
            ASSERT_NO_THROW(validate_audit_input(out.instance, out.committee));
        }
}

TEST(Reduction, RejectsSmallParameters)
{
    EXPECT_EQ(error_of([] { reduce_biclique_to_pjr(complete(3, 3), 2); }), ErrorCode::ParameterTooSmall);
    EXPECT_EQ(error_of([] { reduce_biclique_to_pjr(complete(3, 2), 3); }), ErrorCode::ParameterTooSmall);
}

TEST(Reduction, DegreesOfTheGadgetCandidates)
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        const std::size_t s = 3 + rng.below(4), ell = 3 + rng.below(2);
        auto g = gen_bipartite(3 + rng.below(4), s, 0.5, seed);
        auto out = reduce_biclique_to_pjr(g, ell);
        const auto& p = out.instance.profile();
        std::vector<std::size_t> left_degree(g.left_size());
        for (auto [l, r] : g.edges())
            ++left_degree[l];
        for (std::size_t c = 0; c < out.instance.m(); ++c) {
            const auto deg = p.approvers(c).count();
            switch (out.candidate_map[c].block) {
            case CandidateBlock::C0: ASSERT_EQ(deg, left_degree[out.candidate_map[c].origin] + ell * s); break;
            case CandidateBlock::C1: ASSERT_EQ(deg, ell * s); break;
            case CandidateBlock::C2: ASSERT_EQ(deg, 1u); break;
            }
        }
    }
}

TEST(Biclique, Examples)
{
    auto found = has_balanced_biclique(complete(3, 3), 3);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(found->left, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(found->right, (std::vector<std::size_t>{0, 1, 2}));

    // C6 as a bipartite graph: every vertex has degree two, no K_{2,2}
    BipartiteGraph c6(3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}});
    EXPECT_FALSE(has_balanced_biclique(c6, 2).has_value());
    EXPECT_TRUE(has_balanced_biclique(c6, 1).has_value());

    EXPECT_FALSE(has_balanced_biclique(BipartiteGraph(2, 2, {}), 1).has_value());
    EXPECT_FALSE(has_balanced_biclique(complete(2, 5), 3).has_value());
}

TEST(Biclique, AgreesWithExhaustiveSearch)
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Rng rng(seed);
        auto g = gen_bipartite(1 + rng.below(6), 1 + rng.below(6), 0.3 + 0.5 * rng.unit(), seed);
        const std::size_t ell = 1 + rng.below(4);
        auto found = has_balanced_biclique(g, ell);
        ASSERT_EQ(found.has_value(), naive_biclique(g, ell)) << "seed " << seed;
        if (found) {
            ASSERT_EQ(found->left.size(), ell);
            ASSERT_EQ(found->right.size(), ell);
            for (auto r : found->right)
                for (auto l : found->left)
                    ASSERT_TRUE(g.neighbourhood(r).test(l));
        }
    }
}

TEST(Biclique, RefusesBeyondBudget)
{
    Budget tight;
    tight.biclique_max_subsets = 10;
    EXPECT_EQ(error_of([&] { has_balanced_biclique(complete(6, 6), 3, tight); }), ErrorCode::BudgetExceeded);
}

TEST(VerifyReduction, CompleteGraphViolatesPjr)
{
    auto check = audit_reduction(complete(3, 3), 3);
    EXPECT_TRUE(check.biclique.has_value());
    EXPECT_FALSE(check.verdict.satisfied);
    EXPECT_TRUE(check.agrees);
    EXPECT_TRUE(verify_reduction(complete(3, 3), 3));
}

TEST(VerifyReduction, MatchingSatisfiesPjr)
{
    for (std::size_t s = 3; s <= 5; ++s) {
        auto check = audit_reduction(matching(s), 3);
        EXPECT_FALSE(check.biclique.has_value());
        EXPECT_TRUE(check.verdict.satisfied);
        EXPECT_TRUE(check.agrees);
    }
}

TEST(VerifyReduction, LeftSideSmallerThanEll)
{
    EXPECT_TRUE(verify_reduction(complete(2, 4), 3));
    EXPECT_TRUE(audit_reduction(complete(2, 4), 3).verdict.satisfied);
}

TEST(VerifyReduction, RandomGraphs)
{
    static constexpr double ps[] = {0.3, 0.5, 0.8};
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        const std::size_t left = 3 + rng.below(4), right = 3 + rng.below(4);
        auto g = gen_bipartite(left, right, ps[rng.below(3)], mix_seed(seed, 1));
        ASSERT_TRUE(verify_reduction(g, 3)) << "seed " << seed;
    }
}

// A violated reduced instance has a witness whose common approvals are all C0 candidates.
TEST(VerifyReduction, ViolationsConcentrateOnTheGraphCandidates)
{
    std::size_t violated = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = gen_bipartite(4, 3 + seed % 2, 0.8, seed);
        auto out = reduce_biclique_to_pjr(g, 3);
        auto v = check_bruteforce(out.instance, out.committee, Axiom::PJR);
        if (v.satisfied)
            continue;
        ++violated;
        ASSERT_GE(v.witness->ell, 3u);
        bool inside = true;
        v.witness->common.for_each([&](std::size_t c) { inside = inside && out.candidate_map[c].block == CandidateBlock::C0; });
        ASSERT_TRUE(inside) << "seed " << seed;
    }
    EXPECT_GT(violated, 0u);
}
