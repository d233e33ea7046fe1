#ifndef SPLITDEL_GRAPH_HPP
#define SPLITDEL_GRAPH_HPP

#include <utility>
#include <vector>

#include "splitdel/vertex_set.hpp"

namespace splitdel {

/// Undirected simple graph with bitset adjacency rows.
///
/// Deletion is logical: a removed vertex keeps its index but leaves the live
/// set and every neighbor row, so witnesses keep referring to input labels.
class Graph {
public:
    explicit Graph(int n = 0);

    /// Size of the index space, including deleted vertices.
    int order() const { return static_cast<int>(rows_.size()); }
    int live_count() const { return live_.size(); }
    bool empty() const { return live_.empty(); }

    const VertexSet& live() const { return live_; }
    bool is_live(Vertex v) const { return live_.contains(v); }

    /// Throws std::invalid_argument on self-loops, dead or out-of-range endpoints.
    void add_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const;
    const VertexSet& neighbors(Vertex v) const;
    int degree(Vertex v) const { return neighbors(v).size(); }

    void remove(Vertex v);
    void remove(const VertexSet& vertices);
    Graph without(const VertexSet& vertices) const;

    /// Live edges as (u, v) pairs with u < v, in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;
    int edge_count() const;

    VertexSet empty_set() const { return VertexSet(order()); }

private:
    void check_index(Vertex v) const;

    std::vector<VertexSet> rows_;
    VertexSet live_;
};

struct SplitPartition {
    VertexSet clique;
    VertexSet independent;

    SplitPartition without(const VertexSet& removed) const {
        return {clique - removed, independent - removed};
    }
    bool operator==(const SplitPartition&) const = default;
};

/// Checks disjointness, coverage of the live set, and the clique/independent
/// conditions.
bool is_valid_partition(const Graph& g, const SplitPartition& p);

/// Canonical partition from the degree-sequence characterization: vertices
/// sorted by (degree desc, index asc), C is the prefix of length
/// m = max{i : d_i >= i - 1}. Throws NotSplitError when the degree-sum
/// identity fails.
SplitPartition split_partition(const Graph& g);

} // namespace splitdel

#endif // SPLITDEL_GRAPH_HPP
