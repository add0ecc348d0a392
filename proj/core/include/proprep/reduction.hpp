#pragma once

#include "proprep/axioms.hpp"
#include "proprep/model.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace proprep {

using VertexSet = BitVector<struct VertexTag>;

/// Bipartite graph (L, R, E) with 0-based vertex indices on each side.
class BipartiteGraph {
public:
    using Edge = std::pair<std::size_t, std::size_t>; ///< (left, right)

    /// Throws Error(InvalidSpec) on an out-of-range or duplicate edge.
    BipartiteGraph(std::size_t left_size, std::size_t right_size, std::vector<Edge> edges);

    std::size_t left_size() const noexcept { return left_; }
    std::size_t right_size() const noexcept { return right_; }
    /// Sorted by (left, right).
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Left neighbours of right vertex `r`.
    VertexSet neighbourhood(std::size_t r) const;

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

private:
    std::size_t left_;
    std::size_t right_;
    std::vector<Edge> edges_;
};

enum class CandidateBlock { C0, C1, C2 };
enum class VoterBlock { N0, N1, N2 };

struct CandidateOrigin {
    CandidateBlock block;
    std::size_t origin; ///< left vertex for C0, position in block otherwise
};

struct VoterOrigin {
    VoterBlock block;
    std::size_t origin; ///< right vertex for N0, position in block otherwise
};

/// PJR audit instance whose committee fails PJR exactly when the source
/// graph has an ell-by-ell biclique.
///
/// Candidates are numbered C0 (one per left vertex), then C1 (ell-1), then
/// C2 (s*ell + ell - 3s + ell - 2). Voters are N0 (one per right vertex,
/// approving its left neighbours), then N1 (ell*s voters approving C0 ∪ C1),
/// then N2 (one voter per C2 candidate). k = 2ell - 2, so n/k = s + 1, and
/// the committee is C1 plus the first ell-1 members of C2.
struct ReductionOutput {
    Instance instance;
    Committee committee;
    std::vector<CandidateOrigin> candidate_map;
    std::vector<VoterOrigin> voter_map;
    std::size_t ell;

    std::size_t count(CandidateBlock block) const;
    std::size_t count(VoterBlock block) const;
};

/// Throws Error(ParameterTooSmall) unless ell >= 3 and right_size >= 3.
ReductionOutput reduce_biclique_to_pjr(const BipartiteGraph& graph, std::size_t ell);

struct Biclique {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
};

/// Tries every ell-subset of R in lexicographic order and returns the first
/// whose common neighbourhood has at least ell vertices (its lowest ell).
/// Throws BudgetExceeded if C(|R|, ell) exceeds budget.biclique_max_subsets.
std::optional<Biclique> has_balanced_biclique(const BipartiteGraph& graph, std::size_t ell, const Budget& budget = {});

struct ReductionCheck {
    std::optional<Biclique> biclique;
    Verdict verdict;
    /// biclique found <=> PJR violated on the reduced instance.
    bool agrees;
};

ReductionCheck audit_reduction(const BipartiteGraph& graph, std::size_t ell, const CheckOptions& options = {});

/// Runs both sides of the equivalence on one graph.
bool verify_reduction(const BipartiteGraph& graph, std::size_t ell, const CheckOptions& options = {});

} // namespace proprep
