#include "proprep/reduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace proprep {

BipartiteGraph::BipartiteGraph(std::size_t left_size, std::size_t right_size, std::vector<Edge> edges)
    : left_(left_size), right_(right_size), edges_(std::move(edges))
{
    for (auto [l, r] : edges_)
        if (l >= left_ || r >= right_)
            throw Error(ErrorCode::InvalidSpec, "edge (" + std::to_string(l) + ", " + std::to_string(r) + ") out of range");
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw Error(ErrorCode::InvalidSpec, "duplicate edge (" + std::to_string(dup->first) + ", " + std::to_string(dup->second) + ")");
}

VertexSet BipartiteGraph::neighbourhood(std::size_t r) const
{
    VertexSet out(left_);
    for (auto [l, rr] : edges_)
        if (rr == r)
            out.set(l);
    return out;
}

std::size_t ReductionOutput::count(CandidateBlock block) const
{
    return static_cast<std::size_t>(
        std::count_if(candidate_map.begin(), candidate_map.end(), [&](const CandidateOrigin& o) { return o.block == block; }));
}

std::size_t ReductionOutput::count(VoterBlock block) const
{
    return static_cast<std::size_t>(
        std::count_if(voter_map.begin(), voter_map.end(), [&](const VoterOrigin& o) { return o.block == block; }));
}

ReductionOutput reduce_biclique_to_pjr(const BipartiteGraph& graph, std::size_t ell)
{
    const auto s = graph.right_size();
    if (ell < 3 || s < 3)
        throw Error(ErrorCode::ParameterTooSmall,
            "reduction needs ell >= 3 and |R| >= 3 (got ell=" + std::to_string(ell) + ", |R|=" + std::to_string(s) + ")");

    // s*ell + ell - 3s + (ell - 2) = s*(ell - 3) + 2*ell - 2
    const auto c2 = s * (ell - 3) + 2 * ell - 2;
    if (s * ell + ell + ell - 2 < 3 * s)
        throw std::logic_error("negative |C2|");

    const auto c0 = graph.left_size();
    const auto c1 = ell - 1;
    const auto m = c0 + c1 + c2;
    const auto n1 = ell * s;
    const auto n = s + n1 + c2;
    const auto k = 2 * ell - 2;

    std::vector<CandidateOrigin> candidate_map;
    candidate_map.reserve(m);
    for (std::size_t i = 0; i < c0; ++i)
        candidate_map.push_back({CandidateBlock::C0, i});
    for (std::size_t i = 0; i < c1; ++i)
        candidate_map.push_back({CandidateBlock::C1, i});
    for (std::size_t i = 0; i < c2; ++i)
        candidate_map.push_back({CandidateBlock::C2, i});

    std::vector<VoterOrigin> voter_map;
    std::vector<CandidateSet> ballots;
    voter_map.reserve(n);
    ballots.reserve(n);

    for (std::size_t r = 0; r < s; ++r) {
        CandidateSet b(m);
        graph.neighbourhood(r).for_each([&](std::size_t l) { b.set(l); });
        ballots.push_back(std::move(b));
        voter_map.push_back({VoterBlock::N0, r});
    }

    CandidateSet low_blocks(m);
    for (std::size_t c = 0; c < c0 + c1; ++c)
        low_blocks.set(c);
    for (std::size_t i = 0; i < n1; ++i) {
        ballots.push_back(low_blocks);
        voter_map.push_back({VoterBlock::N1, i});
    }

    for (std::size_t i = 0; i < c2; ++i) {
        ballots.push_back(CandidateSet(m, {c0 + c1 + i}));
        voter_map.push_back({VoterBlock::N2, i});
    }

    CandidateSet winners(m);
    for (std::size_t i = 0; i < c1; ++i)
        winners.set(c0 + i);
    for (std::size_t i = 0; i < ell - 1; ++i)
        winners.set(c0 + c1 + i);

    return ReductionOutput{
        Instance(Profile(n, m, std::move(ballots)), k),
        Committee{std::move(winners)},
        std::move(candidate_map),
        std::move(voter_map),
        ell,
    };
}

namespace {

std::size_t saturating_binom(std::size_t n, std::size_t r, std::size_t cap)
{
    if (r > n)
        return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (std::size_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > cap)
            return cap + 1;
    }
    return static_cast<std::size_t>(acc);
}

} // namespace

std::optional<Biclique> has_balanced_biclique(const BipartiteGraph& graph, std::size_t ell, const Budget& budget)
{
    if (ell < 1)
        throw Error(ErrorCode::ParameterTooSmall, "biclique size must be at least 1");
    const auto s = graph.right_size();
    if (ell > s || ell > graph.left_size())
        return std::nullopt;
    if (saturating_binom(s, ell, budget.biclique_max_subsets) > budget.biclique_max_subsets)
        throw Error(ErrorCode::BudgetExceeded, "C(" + std::to_string(s) + ", " + std::to_string(ell) + ") right subsets exceed cap");

    std::vector<VertexSet> neighbours;
    neighbours.reserve(s);
    for (std::size_t r = 0; r < s; ++r)
        neighbours.push_back(graph.neighbourhood(r));

    std::vector<std::size_t> pick(ell);
    for (std::size_t i = 0; i < ell; ++i)
        pick[i] = i;
    while (true) {
        VertexSet common = neighbours[pick[0]];
        for (std::size_t i = 1; i < ell && common.count() >= ell; ++i)
            common &= neighbours[pick[i]];
        if (common.count() >= ell) {
            auto left = common.indices();
            left.resize(ell);
            return Biclique{std::move(left), pick};
        }

        std::size_t i = ell;
        while (i > 0 && pick[i - 1] == s - ell + i - 1)
            --i;
        if (i == 0)
            return std::nullopt;
        ++pick[i - 1];
        for (std::size_t j = i; j < ell; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

ReductionCheck audit_reduction(const BipartiteGraph& graph, std::size_t ell, const CheckOptions& options)
{
    auto reduced = reduce_biclique_to_pjr(graph, ell);
    auto biclique = has_balanced_biclique(graph, ell, options.budget);
    auto verdict = check(reduced.instance, reduced.committee, Axiom::PJR, Strategy::Auto, options);
    const bool agrees = biclique.has_value() == !verdict.satisfied;
    return ReductionCheck{std::move(biclique), std::move(verdict), agrees};
}

bool verify_reduction(const BipartiteGraph& graph, std::size_t ell, const CheckOptions& options)
{
    return audit_reduction(graph, ell, options).agrees;
}

} // namespace proprep
