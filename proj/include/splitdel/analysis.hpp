#ifndef SPLITDEL_ANALYSIS_HPP
#define SPLITDEL_ANALYSIS_HPP

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace splitdel {

/// Per-branch budget decreases (c_1, ..., c_t), t >= 2, c_i >= 1.
using BranchingVector = std::vector<int>;

/// Largest real root of 1 - sum_i x^(-c_i), by bisection on (1, t + 1].
/// Throws std::invalid_argument for vectors with fewer than two entries or a
/// non-positive entry.
double branching_number(std::span<const int> vector);

/// True when `realized` has the same length as `minimum` and is entrywise >=.
bool dominates(std::span<const int> realized, std::span<const int> minimum);

struct VectorTableEntry {
    std::string rule;
    BranchingVector minimum;
    double number;
};

/// Claimed minimum branching vector of each split-to-threshold branching
/// rule B1..B7, with its branching number. Throws std::logic_error if the
/// maximum is not attained by B3 at 1 + sqrt(3).
const std::vector<VectorTableEntry>& rule_vector_table();

/// Minimum vector for a rule id ("B1".."B7"); empty for anything else.
BranchingVector minimum_vector(std::string_view rule);

std::string format_vector(std::span<const int> vector);

struct TraceLine {
    int depth = 0;
    std::string rule;
    int budget = 0;
    std::vector<int> sizes;
};

/// Parses "node <depth> <rule> k=<k> sizes=<c1,...,ct>". Throws
/// MalformedTraceError.
TraceLine parse_trace_line(std::string_view text, int line_number);

struct RecursionStats {
    long long nodes = 0;
    long long leaves = 0;
    int max_depth = 0;
    std::map<std::string, long long> rule_counts;
    std::vector<std::pair<std::string, BranchingVector>> branch_vectors;
};

/// Aggregates a pre-order trace; a node is a leaf when the following record
/// is not one level deeper. Blank lines are skipped.
RecursionStats stats_from_trace(std::istream& in);
RecursionStats stats_from_trace(const std::vector<TraceLine>& lines);

} // namespace splitdel

#endif // SPLITDEL_ANALYSIS_HPP
