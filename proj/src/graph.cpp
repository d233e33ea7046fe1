#include "splitdel/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "splitdel/errors.hpp"

namespace splitdel {

Graph::Graph(int n) : live_(VertexSet::full(n)) {
    rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

void Graph::check_index(Vertex v) const {
    if (v < 0 || v >= order()) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_index(u);
    check_index(v);
    if (u == v) {
        throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    }
    if (!is_live(u) || !is_live(v)) {
        throw std::invalid_argument("edge touches a deleted vertex");
    }
    rows_[u].insert(v);
    rows_[v].insert(u);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_index(u);
    return rows_[u].contains(v);
}

const VertexSet& Graph::neighbors(Vertex v) const {
    check_index(v);
    return rows_[v];
}

void Graph::remove(Vertex v) {
    check_index(v);
    if (!is_live(v)) {
        return;
    }
    for (Vertex w : rows_[v]) {
        rows_[w].erase(v);
    }
    rows_[v].clear();
    live_.erase(v);
}

void Graph::remove(const VertexSet& vertices) {
    for (Vertex v : vertices) {
        remove(v);
    }
}

Graph Graph::without(const VertexSet& vertices) const {
    Graph copy = *this;
    copy.remove(vertices);
    return copy;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u : live_) {
        for (Vertex v : rows_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

int Graph::edge_count() const {
    int twice = 0;
    for (Vertex u : live_) {
        twice += rows_[u].size();
    }
    return twice / 2;
}

bool is_valid_partition(const Graph& g, const SplitPartition& p) {
    if (p.clique.universe() != g.order() || p.independent.universe() != g.order()) {
        return false;
    }
    if (p.clique.intersects(p.independent) || (p.clique | p.independent) != g.live()) {
        return false;
    }
    for (Vertex c : p.clique) {
        if (!(p.clique - VertexSet(g.order(), {c})).is_subset_of(g.neighbors(c))) {
            return false;
        }
    }
    for (Vertex i : p.independent) {
        if (g.neighbors(i).intersects(p.independent)) {
            return false;
        }
    }
    return true;
}

SplitPartition split_partition(const Graph& g) {
    std::vector<Vertex> order = g.live().to_vector();
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    // 1-based: d_i >= i - 1 holds for a prefix of the sorted sequence.
    std::size_t m = 0;
    while (m < order.size() && g.degree(order[m]) >= static_cast<int>(m)) {
        ++m;
    }

    long long head = 0;
    long long tail = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        (i < m ? head : tail) += g.degree(order[i]);
    }
    const auto mm = static_cast<long long>(m);
    if (head != mm * (mm - 1) + tail) {
        throw NotSplitError();
    }

    SplitPartition p{g.empty_set(), g.empty_set()};
    for (std::size_t i = 0; i < order.size(); ++i) {
        (i < m ? p.clique : p.independent).insert(order[i]);
    }
    return p;
}

} // namespace splitdel
