#ifndef SPLITDEL_SBVD_HPP
#define SPLITDEL_SBVD_HPP

#include <optional>

#include "splitdel/graph.hpp"
#include "splitdel/hitting_set.hpp"

namespace splitdel {

/// One branch of the split-to-block search: the single independent vertex
/// allowed to keep degree >= 2, if any, and the clique vertices it forces out.
struct SbvdGuess {
    std::optional<Vertex> v_star;
    VertexSet pruned_clique;
    /// k - |pruned_clique|; may be negative, in which case the guess is dead.
    int residual_budget = 0;
};

SbvdGuess make_guess(const Graph& g, const SplitPartition& p, int k, std::optional<Vertex> v_star);

/// Triples {v, a, b} for every independent v other than v* and every pair of
/// its neighbors. `g` must already have the pruned clique vertices removed.
HittingSetInstance build_hs_instance(const Graph& g, const SplitPartition& p, const SbvdGuess& guess);

struct SbvdSolution {
    VertexSet deletion;
    SbvdGuess guess;
};

/// Tries the empty guess first, then every independent vertex in ascending
/// order, returning the first success. Throws std::invalid_argument for
/// negative k.
std::optional<SbvdSolution> solve_sbvd_detailed(const Graph& g, const SplitPartition& p, int k);

std::optional<VertexSet> solve_sbvd(const Graph& g, const SplitPartition& p, int k);

} // namespace splitdel

#endif // SPLITDEL_SBVD_HPP
