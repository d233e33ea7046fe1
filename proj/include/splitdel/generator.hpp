#ifndef SPLITDEL_GENERATOR_HPP
#define SPLITDEL_GENERATOR_HPP

#include <cstdint>

#include "splitdel/graph.hpp"

namespace splitdel {

/// splitmix64; fully specified so generated instances match across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

struct GeneratorConfig {
    int clique_size = 0;
    int independent_size = 0;
    /// Probability of each independent-clique edge, in [0, 1].
    double edge_probability = 0.5;
    std::uint64_t seed = 0;
};

/// Clique on 0..|C|-1, independent vertices |C|..|C|+|I|-1. One draw per
/// (i, c) pair with i then c ascending; the edge exists iff draw / 2^64 < p.
/// Throws std::invalid_argument on negative sizes or p outside [0, 1].
Graph gen_split(const GeneratorConfig& cfg);

/// The partition gen_split builds the graph around.
SplitPartition generated_partition(const GeneratorConfig& cfg);

} // namespace splitdel

#endif // SPLITDEL_GENERATOR_HPP
