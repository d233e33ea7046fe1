#ifndef SPLITDEL_TESTS_SUPPORT_HPP
#define SPLITDEL_TESTS_SUPPORT_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "splitdel/generator.hpp"
#include "splitdel/graph.hpp"
#include "splitdel/stvd.hpp"

namespace splitdel::testing {

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.add_edge(u, v);
    }
    return g;
}

inline VertexSet vset(int n, std::initializer_list<Vertex> members) { return VertexSet(n, members); }

/// Clique on 0..nc-1, independent vertices nc..nc+ni-1; bit (i * nc + c)
/// of `pattern` joins independent vertex i to clique vertex c.
inline Graph split_from_pattern(int nc, int ni, std::uint64_t pattern) {
    Graph g(nc + ni);
    for (int a = 0; a < nc; ++a) {
        for (int b = a + 1; b < nc; ++b) {
            g.add_edge(a, b);
        }
    }
    for (int i = 0; i < ni; ++i) {
        for (int c = 0; c < nc; ++c) {
            if ((pattern >> (i * nc + c)) & 1U) {
                g.add_edge(nc + i, c);
            }
        }
    }
    return g;
}

inline SplitPartition layout_partition(int nc, int ni) {
    return generated_partition(GeneratorConfig{nc, ni, 0.0, 0});
}

struct SplitCase {
    int nc;
    int ni;
    Graph graph;
};

/// Every split graph with |C| <= max_c, |I| <= max_i, over all I-C patterns.
inline void for_each_small_split(int max_c, int max_i, const std::function<void(const SplitCase&)>& visit) {
    for (int nc = 0; nc <= max_c; ++nc) {
        for (int ni = 0; ni <= max_i; ++ni) {
            const std::uint64_t patterns = std::uint64_t{1} << (nc * ni);
            for (std::uint64_t mask = 0; mask < patterns; ++mask) {
                visit({nc, ni, split_from_pattern(nc, ni, mask)});
            }
        }
    }
}

/// Seeded random split graphs with nc + ni <= max_n.
inline std::vector<SplitCase> random_splits(int count, int max_n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<SplitCase> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) {
        int n = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_n));
        int nc = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n + 1));
        double p = 0.15 + 0.7 * static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
        GeneratorConfig cfg{nc, n - nc, p, rng.next()};
        out.push_back({nc, n - nc, gen_split(cfg)});
    }
    return out;
}

/// Seeded random split graphs, n <= max_n, on which `rule` fires somewhere
/// in the split-to-threshold search for some budget 0..max_budget. Graphs
/// are drawn with a dense independent side, where the late rules live.
inline std::vector<SplitCase> harvest_firing(Rule rule, int count, int max_n, std::uint64_t seed, int max_budget = 4) {
    SplitMix64 rng(seed);
    std::vector<SplitCase> out;
    for (long attempt = 0; static_cast<int>(out.size()) < count && attempt < 2'000'000; ++attempt) {
        const int n = 6 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_n - 5));
        const int nc = 2 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - 4));
        const double p = 0.35 + 0.55 * static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
        GeneratorConfig cfg{nc, n - nc, p, rng.next()};
        Graph g = gen_split(cfg);
        const auto part = generated_partition(cfg);
        bool fired = false;
        for (int k = 0; k <= max_budget && !fired; ++k) {
            std::vector<TraceRecord> trace;
            StvdOptions opts;
            opts.trace = &trace;
            solve_stvd(g, part, k, opts);
            for (const auto& r : trace) fired = fired || r.rule == rule;
        }
        if (fired) out.push_back({nc, n - nc, std::move(g)});
    }
    return out;
}

/// Brute-force listing of induced P4s as vertex 4-sets (any graph).
inline std::vector<std::vector<Vertex>> all_induced_p4_sets(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    const auto vs = g.live().to_vector();
    const std::size_t n = vs.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    std::vector<Vertex> q{vs[a], vs[b], vs[c], vs[d]};
                    int edges = 0;
                    int deg[4] = {0, 0, 0, 0};
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(q[i], q[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    int ones = 0;
                    for (int x : deg) ones += x == 1;
                    // star and triangle-plus-isolated are the other 3-edge shapes
                    if (edges == 3 && ones == 2) {
                        out.push_back(q);
                    }
                }
    return out;
}

} // namespace splitdel::testing

#endif // SPLITDEL_TESTS_SUPPORT_HPP
