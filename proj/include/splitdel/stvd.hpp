#ifndef SPLITDEL_STVD_HPP
#define SPLITDEL_STVD_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitdel/graph.hpp"

namespace splitdel {

enum class Rule { R1, R2, R3, B1, B2, B3, B4, B5, B6, B7 };

std::string_view rule_name(Rule rule);

/// One node of the split-to-threshold search.
struct SearchState {
    Graph graph;
    SplitPartition partition;
    int budget = 0;
    /// Vertices removed by branching so far; never overlaps the live graph.
    VertexSet deleted;
};

SearchState initial_state(const Graph& g, const SplitPartition& p, int k);

struct RuleDecision {
    Rule rule = Rule::R1;
    /// R1 / R2 verdict.
    bool answer = false;
    /// R3: vertices on no induced P4, removed without charging the budget.
    VertexSet reduced;
    /// Branching rules: ordered branch sets S_1..S_t.
    std::vector<VertexSet> branches;

    std::vector<int> sizes() const;
};

/// Non-twin pair of minimum-degree independent vertices and the shape of
/// the remaining minimum-degree classes.
struct Case2Context {
    Vertex u1 = -1;
    Vertex u2 = -1;
    /// Unique element of N(u1) \ N(u2).
    Vertex a1 = -1;
    /// Unique element of N(u2) \ N(u1).
    Vertex a2 = -1;
    /// Minimum-degree independent vertices twin to neither u1 nor u2.
    VertexSet others;
    /// True when `others` is empty or each of its vertices sees
    /// N(u1) & N(u2) plus one vertex outside {a1, a2}. Otherwise every vertex
    /// of `others` sees a1, a2 and all but one vertex of N(u1) & N(u2).
    bool sunflower = false;
};

/// Throws InvariantViolation when u1, u2 are twins, not of minimum degree,
/// do not differ in exactly one neighbor each, or the remaining classes fit
/// neither shape.
Case2Context classify_sunflower(const Graph& g, const SplitPartition& p, Vertex u1, Vertex u2);

/// First applicable rule in the order R1, R2, R3, B1, B2, B3, then B4/B5 when
/// the minimum-degree independent vertices are pairwise twins and B6/B7
/// otherwise. Ties are broken by lowest vertex index.
///
/// With `check_invariants` the structural guarantees the rules rely on are
/// verified and reported as InvariantViolation.
RuleDecision select_rule(const SearchState& state, bool check_invariants = true);

struct TraceRecord {
    int depth = 0;
    Rule rule = Rule::R1;
    int budget = 0;
    std::vector<int> sizes;
};

/// "node <depth> <rule> k=<k> sizes=<c1,...,ct>"
std::string format_trace_line(const TraceRecord& record);

struct StvdOptions {
    bool check_invariants = true;
    /// Receives one record per recursion node in pre-order.
    std::vector<TraceRecord>* trace = nullptr;
};

/// Returns S with |S| <= k and G - S free of induced P4, or nullopt. The
/// witness is the union of branch sets along the first successful path.
/// Throws std::invalid_argument for negative k.
std::optional<VertexSet> solve_stvd(const Graph& g, const SplitPartition& p, int k, const StvdOptions& options = {});

} // namespace splitdel

#endif // SPLITDEL_STVD_HPP
