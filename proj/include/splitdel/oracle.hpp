#ifndef SPLITDEL_ORACLE_HPP
#define SPLITDEL_ORACLE_HPP

#include <optional>
#include <utility>

#include "splitdel/graph.hpp"
#include "splitdel/hitting_set.hpp"

namespace splitdel {

// Exhaustive reference solvers. Nothing here goes through the recognition
// predicates used by the real solvers.

enum class TargetProperty { BlockSplit, ThresholdSplit, DiamondFree };

inline constexpr int kOracleVertexLimit = 14;

/// BlockSplit: every biconnected component is a clique.
/// ThresholdSplit: no four vertices induce a path.
/// DiamondFree: no four vertices induce five edges.
bool satisfies(const Graph& g, TargetProperty prop);

struct DeletionResult {
    int size;
    VertexSet witness;
};

/// Smallest S (size, then lexicographic) with prop(G - S) and |S| <= kmax.
/// Throws TooLargeError above kOracleVertexLimit live vertices.
std::optional<DeletionResult> min_deletion(const Graph& g, TargetProperty prop, int kmax);

/// Minimum hitting set of size at most the budget, by subset enumeration.
/// Throws TooLargeError above kOracleVertexLimit universe elements.
std::optional<std::pair<int, ElementSet>> brute_force_3hs(const HittingSetInstance& instance);

} // namespace splitdel

#endif // SPLITDEL_ORACLE_HPP
