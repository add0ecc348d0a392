#include "proprep/generators.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace proprep {

namespace {

bool probability(double p) { return !std::isnan(p) && p >= 0.0 && p <= 1.0; }

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorCode::InvalidSpec, what);
}

} // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::size_t party_of(std::size_t index, std::size_t groups, std::size_t count)
{
    return static_cast<std::size_t>(static_cast<unsigned __int128>(index) * groups / count);
}

Instance gen_profile(const GenSpec& spec)
{
    require(spec.n >= 1 && spec.m >= 1, "n and m must be positive");
    require(spec.k >= 1 && spec.k <= spec.m, "k must lie in 1..m");

    Rng rng(spec.seed);
    std::vector<CandidateSet> ballots(spec.n, CandidateSet(spec.m));

    if (const auto* imp = std::get_if<ImpartialModel>(&spec.model)) {
        require(probability(imp->p), "approval probability must lie in [0, 1]");
        for (auto& b : ballots)
            for (std::size_t c = 0; c < spec.m; ++c)
                if (rng.bernoulli(imp->p))
                    b.set(c);
    } else {
        const auto& party = std::get<PartyListModel>(spec.model);
        require(party.groups >= 1 && party.groups <= spec.n && party.groups <= spec.m, "groups must lie in 1..min(n, m)");
        require(probability(party.group_overlap), "group overlap must lie in [0, 1]");
        for (std::size_t i = 0; i < spec.n; ++i) {
            const auto group = party_of(i, party.groups, spec.n);
            for (std::size_t c = 0; c < spec.m; ++c) {
                if (party_of(c, party.groups, spec.m) == group)
                    ballots[i].set(c);
                else if (rng.bernoulli(party.group_overlap))
                    ballots[i].set(c);
            }
        }
    }
    return Instance(Profile(spec.n, spec.m, std::move(ballots)), spec.k);
}

BipartiteGraph gen_bipartite(std::size_t left, std::size_t right, double p, std::uint64_t seed)
{
    require(left >= 1 && right >= 1, "both sides need at least one vertex");
    require(probability(p), "edge probability must lie in [0, 1]");
    Rng rng(seed);
    std::vector<BipartiteGraph::Edge> edges;
    for (std::size_t l = 0; l < left; ++l)
        for (std::size_t r = 0; r < right; ++r)
            if (rng.bernoulli(p))
                edges.emplace_back(l, r);
    return BipartiteGraph(left, right, std::move(edges));
}

Committee gen_committee(const Instance& instance, std::uint64_t seed, const CandidateSet& excluded)
{
    const auto m = instance.m();
    std::vector<std::size_t> pool;
    for (std::size_t c = 0; c < m; ++c)
        if (!excluded.test(c))
            pool.push_back(c);
    require(pool.size() >= instance.k(), "not enough candidates outside the excluded set");

    Rng rng(seed);
    for (std::size_t i = 0; i < instance.k(); ++i) {
        auto j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    CandidateSet members(m);
    for (std::size_t i = 0; i < instance.k(); ++i)
        members.set(pool[i]);
    return Committee{std::move(members)};
}

Committee gen_committee(const Instance& instance, std::uint64_t seed)
{
    return gen_committee(instance, seed, CandidateSet(instance.m()));
}

} // namespace proprep
