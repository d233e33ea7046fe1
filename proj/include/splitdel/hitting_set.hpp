#ifndef SPLITDEL_HITTING_SET_HPP
#define SPLITDEL_HITTING_SET_HPP

#include <optional>
#include <vector>

namespace splitdel {

using Element = int;
using ElementSet = std::vector<Element>;

/// A family of 1-3 element sets and a budget k.
struct HittingSetInstance {
    std::vector<ElementSet> family;
    int budget = 0;

    /// Sorted distinct elements appearing in the family.
    std::vector<Element> universe() const;
};

/// Sorts each set, drops duplicates and any set that strictly contains
/// another. Output family is in lexicographic order.
HittingSetInstance normalize(HittingSetInstance instance);

bool hits_all(const std::vector<ElementSet>& family, const ElementSet& chosen);

struct HittingSetStats {
    long long nodes = 0;
    long long leaves = 0;
};

/// Branch-and-reduce search: unit sets are forced, otherwise it branches on
/// the elements of the first smallest set. Returns a sorted hitting set of
/// size at most the budget, or nullopt.
///
/// Throws std::invalid_argument if a set is empty or has more than three
/// elements, or the budget is negative.
std::optional<ElementSet> solve_3hs(const HittingSetInstance& instance, HittingSetStats* stats = nullptr);

} // namespace splitdel

#endif // SPLITDEL_HITTING_SET_HPP
