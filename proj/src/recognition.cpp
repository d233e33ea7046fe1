#include "splitdel/recognition.hpp"

#include <limits>
#include <stdexcept>

#include "splitdel/errors.hpp"

namespace splitdel {

std::optional<P4Witness> find_induced_p4(const Graph& g, const SplitPartition& p) {
    for (Vertex u : p.independent) {
        for (Vertex v : p.independent) {
            if (v <= u) {
                continue;
            }
            auto only_u = g.neighbors(u) - g.neighbors(v);
            auto only_v = g.neighbors(v) - g.neighbors(u);
            if (!only_u.empty() && !only_v.empty()) {
                return P4Witness{u, *only_u.first(), *only_v.first(), v};
            }
        }
    }
    return std::nullopt;
}

VertexSet p4_free_vertices(const Graph& g, const SplitPartition& p) {
    // Every pair of independent vertices whose neighborhoods are incomparable
    // spans a P4 through each element of both differences.
    VertexSet covered = g.empty_set();
    for (Vertex u : p.independent) {
        for (Vertex v : p.independent) {
            if (v <= u) {
                continue;
            }
            auto only_u = g.neighbors(u) - g.neighbors(v);
            auto only_v = g.neighbors(v) - g.neighbors(u);
            if (!only_u.empty() && !only_v.empty()) {
                covered.insert(u);
                covered.insert(v);
                covered |= only_u;
                covered |= only_v;
            }
        }
    }
    return g.live() - covered;
}

std::optional<DiamondWitness> find_induced_diamond(const Graph& g) {
    for (auto [x, y] : g.edges()) {
        auto common = g.neighbors(x) & g.neighbors(y);
        for (Vertex s : common) {
            for (Vertex t : common) {
                if (t > s && !g.adjacent(s, t)) {
                    return DiamondWitness{{x, y}, {s, t}};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_block_split(const Graph& g, const SplitPartition& p) {
    int high_degree = 0;
    for (Vertex v : p.independent) {
        if (g.degree(v) >= 2) {
            if (!p.clique.is_subset_of(g.neighbors(v))) {
                return false;
            }
            ++high_degree;
        }
    }
    return high_degree <= 1;
}

bool is_threshold_split(const Graph& g, const SplitPartition& p) {
    return !find_induced_p4(g, p).has_value();
}

VertexSet min_degree_set(const Graph& g, const SplitPartition& p) {
    if (p.independent.empty()) {
        throw EmptyIndependentSideError();
    }
    int lowest = std::numeric_limits<int>::max();
    for (Vertex v : p.independent) {
        lowest = std::min(lowest, g.degree(v));
    }
    VertexSet out = g.empty_set();
    for (Vertex v : p.independent) {
        if (g.degree(v) == lowest) {
            out.insert(v);
        }
    }
    return out;
}

VertexSet twin_class(const Graph& g, const SplitPartition& p, Vertex v) {
    if (!p.independent.contains(v)) {
        throw std::invalid_argument("twin_class: vertex " + std::to_string(v) + " is not independent");
    }
    VertexSet out = g.empty_set();
    for (Vertex u : p.independent) {
        if (g.neighbors(u) == g.neighbors(v)) {
            out.insert(u);
        }
    }
    return out;
}

} // namespace splitdel
