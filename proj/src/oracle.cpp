#include "splitdel/oracle.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "splitdel/errors.hpp"

namespace splitdel {

namespace {

/// Calls visit on every k-combination of items in lexicographic order until
/// it returns true.
template <class T, class Visit>
bool for_each_combination(const std::vector<T>& items, int k, Visit&& visit) {
    const int n = static_cast<int>(items.size());
    if (k > n) {
        return false;
    }
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        idx[i] = i;
    }
    std::vector<T> pick(static_cast<std::size_t>(k));
    while (true) {
        for (int i = 0; i < k; ++i) {
            pick[i] = items[idx[i]];
        }
        if (visit(pick)) {
            return true;
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) {
            --i;
        }
        if (i < 0) {
            return false;
        }
        ++idx[i];
        for (int j = i + 1; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

bool has_quadruple(const Graph& g, const std::function<bool(const std::vector<Vertex>&)>& bad) {
    return for_each_combination(g.live().to_vector(), 4, bad);
}

bool induces_p4(const Graph& g, const std::vector<Vertex>& q) {
    int edges = 0;
    std::vector<int> deg(4, 0);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (g.adjacent(q[i], q[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
            }
        }
    }
    // Among 3-edge graphs on four vertices only P4 has degrees {1,1,2,2}.
    std::sort(deg.begin(), deg.end());
    return edges == 3 && deg == std::vector<int>{1, 1, 2, 2};
}

bool induces_diamond(const Graph& g, const std::vector<Vertex>& q) {
    int edges = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            edges += g.adjacent(q[i], q[j]) ? 1 : 0;
        }
    }
    return edges == 5;
}

// Hopcroft-Tarjan over the live graph; each popped edge group is a block.
class BlockChecker {
public:
    explicit BlockChecker(const Graph& g)
        : g_(g), disc_(static_cast<std::size_t>(g.order()), -1), low_(static_cast<std::size_t>(g.order()), 0) {}

    bool all_blocks_cliques() {
        for (Vertex v : g_.live()) {
            if (disc_[v] < 0) {
                visit(v, -1);
                if (!ok_) {
                    return false;
                }
            }
        }
        return ok_;
    }

private:
    void visit(Vertex v, Vertex parent) {
        disc_[v] = low_[v] = timer_++;
        for (Vertex w : g_.neighbors(v)) {
            if (w == parent) {
                continue;
            }
            if (disc_[w] < 0) {
                stack_.emplace_back(v, w);
                visit(w, v);
                low_[v] = std::min(low_[v], low_[w]);
                if (low_[w] >= disc_[v]) {
                    pop_block(v, w);
                }
            } else if (disc_[w] < disc_[v]) {
                stack_.emplace_back(v, w);
                low_[v] = std::min(low_[v], disc_[w]);
            }
        }
    }

    void pop_block(Vertex v, Vertex w) {
        std::vector<Vertex> members;
        while (true) {
            auto e = stack_.back();
            stack_.pop_back();
            members.push_back(e.first);
            members.push_back(e.second);
            if (e == std::pair<Vertex, Vertex>{v, w}) {
                break;
            }
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (!g_.adjacent(members[i], members[j])) {
                    ok_ = false;
                }
            }
        }
    }

    const Graph& g_;
    std::vector<int> disc_;
    std::vector<int> low_;
    std::vector<std::pair<Vertex, Vertex>> stack_;
    int timer_ = 0;
    bool ok_ = true;
};

bool hits_every_set(const std::vector<ElementSet>& family, const std::vector<Element>& pick) {
    for (const auto& set : family) {
        bool hit = false;
        for (Element x : set) {
            hit = hit || std::binary_search(pick.begin(), pick.end(), x);
        }
        if (!hit) {
            return false;
        }
    }
    return true;
}

} // namespace

bool satisfies(const Graph& g, TargetProperty prop) {
    switch (prop) {
    case TargetProperty::BlockSplit:
        return BlockChecker(g).all_blocks_cliques();
    case TargetProperty::ThresholdSplit:
        return !has_quadruple(g, [&](const std::vector<Vertex>& q) { return induces_p4(g, q); });
    case TargetProperty::DiamondFree:
        return !has_quadruple(g, [&](const std::vector<Vertex>& q) { return induces_diamond(g, q); });
    }
    return false;
}

std::optional<DeletionResult> min_deletion(const Graph& g, TargetProperty prop, int kmax) {
    if (g.live_count() > kOracleVertexLimit) {
        throw TooLargeError("oracle limited to " + std::to_string(kOracleVertexLimit) + " vertices");
    }
    const auto vertices = g.live().to_vector();
    for (int size = 0; size <= std::min(kmax, g.live_count()); ++size) {
        std::optional<DeletionResult> found;
        for_each_combination(vertices, size, [&](const std::vector<Vertex>& pick) {
            VertexSet s = VertexSet::from_range(g.order(), pick);
            if (satisfies(g.without(s), prop)) {
                found = DeletionResult{size, std::move(s)};
                return true;
            }
            return false;
        });
        if (found) {
            return found;
        }
    }
    return std::nullopt;
}

std::optional<std::pair<int, ElementSet>> brute_force_3hs(const HittingSetInstance& instance) {
    const auto universe = instance.universe();
    if (static_cast<int>(universe.size()) > kOracleVertexLimit) {
        throw TooLargeError("hitting set oracle limited to " + std::to_string(kOracleVertexLimit) + " elements");
    }
    for (int size = 0; size <= std::min<int>(instance.budget, static_cast<int>(universe.size())); ++size) {
        std::optional<ElementSet> found;
        for_each_combination(universe, size, [&](const std::vector<Element>& pick) {
            if (hits_every_set(instance.family, pick)) {
                found = pick;
                return true;
            }
            return false;
        });
        if (found) {
            return std::pair{size, *found};
        }
    }
    return std::nullopt;
}

} // namespace splitdel
