#include "splitdel/generator.hpp"

#include <cmath>
#include <stdexcept>

namespace splitdel {

namespace {

// Smallest integer t with draw < t  <=>  draw / 2^64 < p, for p in (0, 1).
std::uint64_t draw_threshold(double p) {
    return static_cast<std::uint64_t>(std::ceil(std::ldexp(p, 64)));
}

void validate(const GeneratorConfig& cfg) {
    if (cfg.clique_size < 0 || cfg.independent_size < 0) {
        throw std::invalid_argument("generator sizes must be non-negative");
    }
    if (!(cfg.edge_probability >= 0.0 && cfg.edge_probability <= 1.0)) {
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    }
}

} // namespace

Graph gen_split(const GeneratorConfig& cfg) {
    validate(cfg);
    const int nc = cfg.clique_size;
    const int ni = cfg.independent_size;
    Graph g(nc + ni);
    for (int a = 0; a < nc; ++a) {
        for (int b = a + 1; b < nc; ++b) {
            g.add_edge(a, b);
        }
    }

    SplitMix64 rng(cfg.seed);
    const double p = cfg.edge_probability;
    const std::uint64_t threshold = (p > 0.0 && p < 1.0) ? draw_threshold(p) : 0;
    for (int i = 0; i < ni; ++i) {
        for (int c = 0; c < nc; ++c) {
            const std::uint64_t draw = rng.next();
            const bool present = p >= 1.0 || (p > 0.0 && draw < threshold);
            if (present) {
                g.add_edge(nc + i, c);
            }
        }
    }
    return g;
}

SplitPartition generated_partition(const GeneratorConfig& cfg) {
    validate(cfg);
    const int n = cfg.clique_size + cfg.independent_size;
    SplitPartition p{VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v) {
        (v < cfg.clique_size ? p.clique : p.independent).insert(v);
    }
    return p;
}

} // namespace splitdel
