#include "splitdel/sbvd.hpp"

#include <stdexcept>
#include <string>

#include "splitdel/recognition.hpp"

namespace splitdel {

SbvdGuess make_guess(const Graph& g, const SplitPartition& p, int k, std::optional<Vertex> v_star) {
    SbvdGuess guess{v_star, g.empty_set(), k};
    if (v_star) {
        if (!p.independent.contains(*v_star)) {
            throw std::invalid_argument("guessed vertex " + std::to_string(*v_star) + " is not independent");
        }
        guess.pruned_clique = p.clique - g.neighbors(*v_star);
        guess.residual_budget = k - guess.pruned_clique.size();
    }
    return guess;
}

HittingSetInstance build_hs_instance(const Graph& g, const SplitPartition& p, const SbvdGuess& guess) {
    if (guess.residual_budget < 0) {
        throw std::invalid_argument("guess has negative residual budget");
    }
    if (guess.pruned_clique.intersects(g.live())) {
        throw std::invalid_argument("pruned clique vertices must be removed before building triples");
    }
    HittingSetInstance inst;
    inst.budget = guess.residual_budget;
    for (Vertex v : p.independent) {
        if ((guess.v_star && v == *guess.v_star) || g.degree(v) < 2) {
            continue;
        }
        const auto nbrs = g.neighbors(v).to_vector();
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                inst.family.push_back({v, nbrs[i], nbrs[j]});
            }
        }
    }
    return normalize(std::move(inst));
}

std::optional<SbvdSolution> solve_sbvd_detailed(const Graph& g, const SplitPartition& p, int k) {
    if (k < 0) {
        throw std::invalid_argument("budget must be non-negative");
    }

    std::vector<std::optional<Vertex>> candidates{std::nullopt};
    for (Vertex v : p.independent) {
        candidates.emplace_back(v);
    }

    for (const auto& v_star : candidates) {
        SbvdGuess guess = make_guess(g, p, k, v_star);
        if (guess.residual_budget < 0) {
            continue;
        }
        Graph pruned = g.without(guess.pruned_clique);
        SplitPartition rest = p.without(guess.pruned_clique);
        auto hitting = solve_3hs(build_hs_instance(pruned, rest, guess));
        if (!hitting) {
            continue;
        }
        VertexSet deletion = guess.pruned_clique;
        for (Element x : *hitting) {
            deletion.insert(x);
        }
        if (deletion.size() > k || !is_block_split(g.without(deletion), p.without(deletion))) {
            throw std::logic_error("split-to-block witness failed verification");
        }
        return SbvdSolution{std::move(deletion), std::move(guess)};
    }
    return std::nullopt;
}

std::optional<VertexSet> solve_sbvd(const Graph& g, const SplitPartition& p, int k) {
    auto solution = solve_sbvd_detailed(g, p, k);
    if (!solution) {
        return std::nullopt;
    }
    return std::move(solution->deletion);
}

} // namespace splitdel
