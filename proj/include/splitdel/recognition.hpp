#ifndef SPLITDEL_RECOGNITION_HPP
#define SPLITDEL_RECOGNITION_HPP

#include <array>
#include <optional>

#include "splitdel/graph.hpp"

namespace splitdel {

/// Induced path u - a - b - v with u, v on the independent side and a, b in
/// the clique.
struct P4Witness {
    Vertex u;
    Vertex a;
    Vertex b;
    Vertex v;
    bool operator==(const P4Witness&) const = default;
};

/// Four vertices inducing K4 minus an edge. `spine` is the edge shared by
/// both triangles, `tips` the non-adjacent pair.
struct DiamondWitness {
    std::array<Vertex, 2> spine;
    std::array<Vertex, 2> tips;

    std::array<Vertex, 4> vertices() const { return {spine[0], spine[1], tips[0], tips[1]}; }
    bool operator==(const DiamondWitness&) const = default;
};

/// First witness in the scan order u < v over I, then a over N(u)\N(v),
/// then b over N(v)\N(u).
std::optional<P4Witness> find_induced_p4(const Graph& g, const SplitPartition& p);

/// Live vertices lying on no induced P4.
VertexSet p4_free_vertices(const Graph& g, const SplitPartition& p);

/// Scans spine edges (x, y) in lexicographic order, then non-adjacent common
/// neighbor pairs.
std::optional<DiamondWitness> find_induced_diamond(const Graph& g);

/// Block-graph test for split graphs: every independent vertex of degree at
/// least two sees all of C, and there is at most one such vertex.
bool is_block_split(const Graph& g, const SplitPartition& p);

bool is_threshold_split(const Graph& g, const SplitPartition& p);

/// Minimum-degree vertices of the independent side. Throws
/// EmptyIndependentSideError when I is empty.
VertexSet min_degree_set(const Graph& g, const SplitPartition& p);

/// Independent vertices with exactly the neighborhood of v (v included).
VertexSet twin_class(const Graph& g, const SplitPartition& p, Vertex v);

} // namespace splitdel

#endif // SPLITDEL_RECOGNITION_HPP
