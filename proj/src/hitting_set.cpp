#include "splitdel/hitting_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitdel {

namespace {

bool is_subset(const ElementSet& small, const ElementSet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<ElementSet> normalize_family(std::vector<ElementSet> family) {
    for (auto& set : family) {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());

    std::vector<ElementSet> kept;
    kept.reserve(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < family.size() && !dominated; ++j) {
            dominated = j != i && family[j].size() < family[i].size() && is_subset(family[j], family[i]);
        }
        if (!dominated) {
            kept.push_back(family[i]);
        }
    }
    return kept;
}

std::vector<ElementSet> drop_hit(const std::vector<ElementSet>& family, Element x) {
    std::vector<ElementSet> rest;
    rest.reserve(family.size());
    for (const auto& set : family) {
        if (!std::binary_search(set.begin(), set.end(), x)) {
            rest.push_back(set);
        }
    }
    return rest;
}

bool search(std::vector<ElementSet> family, int budget, ElementSet& chosen, HittingSetStats& stats) {
    ++stats.nodes;
    family = normalize_family(std::move(family));
    const std::size_t mark = chosen.size();

    // Unit sets stay units under removal of hit sets, so one pass suffices.
    while (true) {
        auto unit = std::find_if(family.begin(), family.end(), [](const ElementSet& s) { return s.size() == 1; });
        if (unit == family.end()) {
            break;
        }
        if (budget == 0) {
            ++stats.leaves;
            chosen.resize(mark);
            return false;
        }
        Element x = unit->front();
        chosen.push_back(x);
        --budget;
        family = drop_hit(family, x);
    }

    if (family.empty()) {
        ++stats.leaves;
        return true;
    }
    if (budget == 0) {
        ++stats.leaves;
        chosen.resize(mark);
        return false;
    }

    auto pivot = std::min_element(family.begin(), family.end(),
                                  [](const ElementSet& a, const ElementSet& b) { return a.size() < b.size(); });
    const ElementSet branch_on = *pivot;
    for (Element x : branch_on) {
        chosen.push_back(x);
        if (search(drop_hit(family, x), budget - 1, chosen, stats)) {
            return true;
        }
        chosen.pop_back();
    }
    chosen.resize(mark);
    return false;
}

} // namespace

std::vector<Element> HittingSetInstance::universe() const {
    std::vector<Element> out;
    for (const auto& set : family) {
        out.insert(out.end(), set.begin(), set.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

HittingSetInstance normalize(HittingSetInstance instance) {
    instance.family = normalize_family(std::move(instance.family));
    return instance;
}

bool hits_all(const std::vector<ElementSet>& family, const ElementSet& chosen) {
    return std::all_of(family.begin(), family.end(), [&](const ElementSet& set) {
        return std::any_of(set.begin(), set.end(), [&](Element x) {
            return std::find(chosen.begin(), chosen.end(), x) != chosen.end();
        });
    });
}

std::optional<ElementSet> solve_3hs(const HittingSetInstance& instance, HittingSetStats* stats) {
    if (instance.budget < 0) {
        throw std::invalid_argument("hitting set budget must be non-negative");
    }
    for (const auto& set : instance.family) {
        if (set.empty() || set.size() > 3) {
            throw std::invalid_argument("hitting set family members must have 1 to 3 elements");
        }
    }

    HittingSetStats local;
    ElementSet chosen;
    const bool found = search(instance.family, instance.budget, chosen, stats ? *stats : local);
    if (!found) {
        return std::nullopt;
    }
    std::sort(chosen.begin(), chosen.end());
    if (static_cast<int>(chosen.size()) > instance.budget || !hits_all(instance.family, chosen)) {
        throw std::logic_error("hitting set solver produced an invalid witness");
    }
    return chosen;
}

} // namespace splitdel
