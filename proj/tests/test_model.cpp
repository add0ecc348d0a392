#include "support.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace proprep;
using namespace proprep::testing;

TEST(Quota, Examples)
{
    EXPECT_TRUE(quota_holds(3, 1, 6, 2));
    EXPECT_FALSE(quota_holds(2, 1, 5, 2));
    EXPECT_TRUE(quota_holds(4, 2, 4, 2));
}

// Reduced-fraction comparison |X| >= (ell*n)/k, independent of the cross-multiplication.
TEST(Quota, AgreesWithRationalComparison)
{
    for (std::size_t x = 0; x <= 12; ++x)
        for (std::size_t ell = 0; ell <= 12; ++ell)
            for (std::size_t n = 1; n <= 12; ++n)
                for (std::size_t k = 1; k <= 12; ++k) {
                    auto num = ell * n;
                    auto g = std::gcd(num, k);
                    auto p = num / (g ? g : 1), q = k / (g ? g : 1);
                    bool rational = x * q >= p;
                    ASSERT_EQ(quota_holds(x, ell, n, k), rational) << x << ' ' << ell << ' ' << n << ' ' << k;
                    ASSERT_EQ(quota_level(x, n, k) >= ell, rational);
                }
}

TEST(Quota, MonotoneInSizeAntitoneInEllAndN)
{
    for (std::size_t x = 0; x < 15; ++x)
        for (std::size_t ell = 1; ell < 8; ++ell)
            for (std::size_t n = 1; n < 15; ++n)
                for (std::size_t k = 1; k < 8; ++k) {
                    if (quota_holds(x, ell, n, k)) {
                        ASSERT_TRUE(quota_holds(x + 1, ell, n, k));
                        ASSERT_TRUE(quota_holds(x, ell - 1, n, k));
                        ASSERT_TRUE(quota_holds(x, ell, n - 1 == 0 ? 1 : n - 1, k));
                    }
                }
}

TEST(Quota, HugeOperandsDoNotWrap)
{
    const std::size_t big = std::numeric_limits<std::size_t>::max();
    EXPECT_TRUE(quota_holds(big, big, big, big));
    EXPECT_FALSE(quota_holds(big - 1, big, big, big));
    EXPECT_EQ(quota_level(big, big, big), big);
}

TEST(ValidateAuditInput, Examples)
{
    auto inst = make_instance(3, 2, {{0}, {1}});
    EXPECT_NO_THROW(validate_audit_input(inst, Committee::of({0, 1})));

    try {
        validate_audit_input(inst, Committee::of({0}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::WrongCommitteeSize);
    }
    try {
        validate_audit_input(inst, Committee::of({0, 5}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CandidateOutOfRange);
    }
}

TEST(Profile, RejectsMalformedShapes)
{
    auto code = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Cancelled;
    };
    EXPECT_EQ(code([] { Profile(2, 3, {CandidateSet(3)}); }), ErrorCode::MalformedProfile);
    EXPECT_EQ(code([] { Profile(1, 3, {CandidateSet(4)}); }), ErrorCode::MalformedProfile);
    EXPECT_EQ(code([] { Profile(0, 3, {}); }), ErrorCode::MalformedProfile);
    EXPECT_EQ(code([] { Instance(Profile(1, 3, {CandidateSet(3)}), 4); }), ErrorCode::MalformedProfile);
    EXPECT_EQ(code([] { Instance(Profile(1, 3, {CandidateSet(3)}), 0); }), ErrorCode::MalformedProfile);
}

TEST(Profile, ApproverSetsMirrorBallots)
{
    auto inst = make_instance(4, 1, {{0, 1}, {1}, {}, {1, 3}});
    const auto& p = inst.profile();
    EXPECT_EQ(p.approvers(0).indices(), (std::vector<std::size_t>{0}));
    EXPECT_EQ(p.approvers(1).indices(), (std::vector<std::size_t>{0, 1, 3}));
    EXPECT_TRUE(p.approvers(2).none());
    EXPECT_EQ(p.approvers(3).indices(), (std::vector<std::size_t>{3}));
}

TEST(CoalitionStats, Examples)
{
    auto inst = make_instance(3, 1, {{0, 1}, {1, 2}});
    auto s = coalition_stats(inst.profile(), VoterSet(2, {0, 1}), CandidateSet(3, {1}));
    EXPECT_EQ(s.size, 2u);
    EXPECT_EQ(s.common, CandidateSet(3, {1}));
    EXPECT_EQ(s.union_, CandidateSet(3, {0, 1, 2}));
    EXPECT_EQ(s.represented, CandidateSet(3, {1}));

    auto single = coalition_stats(inst.profile(), VoterSet(2, {0}), CandidateSet(3, {2}));
    EXPECT_EQ(single.size, 1u);
    EXPECT_EQ(single.common, CandidateSet(3, {0, 1}));
    EXPECT_EQ(single.union_, CandidateSet(3, {0, 1}));
    EXPECT_TRUE(single.represented.none());

    auto empty_ballot = make_instance(3, 1, {{}, {1}});
    EXPECT_TRUE(coalition_stats(empty_ballot.profile(), VoterSet(2, {0, 1}), CandidateSet(3, {1})).common.none());

    try {
        coalition_stats(inst.profile(), VoterSet(2), CandidateSet(3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyCoalition);
    }
}

TEST(CoalitionStats, CommonShrinksAndUnionGrowsWithTheCoalition)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto audit = random_small_audit(seed);
        const auto& p = audit.instance.profile();
        auto w = audit.committee.members_in(audit.instance.m());
        Rng rng(seed);
        VoterSet x(p.voter_count()), y(p.voter_count());
        for (std::size_t i = 0; i < p.voter_count(); ++i) {
            bool in_x = rng.bernoulli(0.4);
            if (in_x)
                x.set(i);
            if (in_x || rng.bernoulli(0.4))
                y.set(i);
        }
        if (x.none())
            continue;
        auto sx = coalition_stats(p, x, w);
        auto sy = coalition_stats(p, y, w);
        ASSERT_TRUE(sy.common.is_subset_of(sx.common));
        ASSERT_TRUE(sx.union_.is_subset_of(sy.union_));
        ASSERT_LE(sx.max_overlap, sy.max_overlap);
    }
}

TEST(ProfileParams, Examples)
{
    EXPECT_EQ(profile_params(make_instance(2, 1, {{0, 1}, {1}}).profile()).max_ballot, 2u);
    EXPECT_EQ(profile_params(make_instance(2, 1, {{0, 1}, {1}}).profile()).max_degree, 2u);

    auto empty = profile_params(make_instance(3, 1, {{}, {}, {}}).profile());
    EXPECT_EQ(empty.max_ballot, 0u);
    EXPECT_EQ(empty.max_degree, 0u);

    auto all = make_instance(5, 1, {{0, 1, 2, 3, 4}});
    auto p = profile_params(all.profile());
    EXPECT_EQ(p.max_ballot, 5u);
    EXPECT_EQ(p.max_degree, 1u);
    for (std::size_t c = 0; c < 5; ++c)
        EXPECT_EQ(all.profile().approvers(c).count(), 1u);
}

TEST(Names, RoundTrip)
{
    for (auto a : {Axiom::JR, Axiom::PJR, Axiom::EJR})
        EXPECT_EQ(parse_axiom(to_string(a)), a);
    for (auto s : {Strategy::Auto, Strategy::BruteForceVoters, Strategy::CandidateSubsets, Strategy::BoundedBallot,
             Strategy::BoundedDegree, Strategy::JrScan})
        EXPECT_EQ(parse_strategy(to_string(s)), s);
    EXPECT_FALSE(parse_axiom("PJR").has_value());
}
