#pragma once

#include "proprep/model.hpp"
#include "proprep/reduction.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <variant>

namespace proprep {

/// Seeded pseudorandom source used by every generator.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The draws below are written out by hand instead of using
/// std::*_distribution, whose algorithms vary between standard libraries, so
/// a seed names the same instance on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// One draw per call; true with probability p. p = 0 never, p = 1 always.
    bool bernoulli(double p) { return unit() < p; }

    /// Uniform in [0, bound) by rejection. bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            auto x = next();
            if (x >= threshold)
                return x % bound;
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Every (voter, candidate) approval independent with probability p.
struct ImpartialModel {
    double p = 0.5;
};

/// Voters and candidates are split into `groups` contiguous, near-equal
/// blocks; voters of group j approve all of candidate block j, plus each
/// candidate outside it with probability `group_overlap`.
struct PartyListModel {
    std::size_t groups = 2;
    double group_overlap = 0.0;
};

struct GenSpec {
    std::variant<ImpartialModel, PartyListModel> model = ImpartialModel{};
    std::size_t n = 1;
    std::size_t m = 1;
    std::size_t k = 1;
    std::uint64_t seed = 0;
};

/// Derives an independent seed for sub-stream `stream` of `seed`
/// (SplitMix64 finaliser over seed + stream * golden ratio).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Group (or block) of item `index` when `count` items are split into
/// `groups` contiguous blocks: floor(index * groups / count).
std::size_t party_of(std::size_t index, std::size_t groups, std::size_t count);

/// Throws Error(InvalidSpec) for out-of-range parameters.
Instance gen_profile(const GenSpec& spec);

/// Throws Error(InvalidSpec) for empty sides or p outside [0, 1].
BipartiteGraph gen_bipartite(std::size_t left, std::size_t right, double p, std::uint64_t seed);

/// Uniform k-subset of the candidates by partial Fisher-Yates shuffle.
Committee gen_committee(const Instance& instance, std::uint64_t seed);

/// Uniform k-subset of the candidates outside `excluded`. Throws
/// Error(InvalidSpec) if fewer than k remain.
Committee gen_committee(const Instance& instance, std::uint64_t seed, const CandidateSet& excluded);

} // namespace proprep
