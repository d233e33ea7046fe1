#include "splitdel/analysis.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "splitdel/errors.hpp"

namespace splitdel {

namespace {

double characteristic(std::span<const int> vector, double x) {
    double sum = 0.0;
    for (int c : vector) {
        sum += std::pow(x, -c);
    }
    return 1.0 - sum;
}

bool parse_int(std::string_view text, int& out) {
    if (text.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

} // namespace

double branching_number(std::span<const int> vector) {
    if (vector.size() < 2) {
        throw std::invalid_argument("branching vector needs at least two entries");
    }
    for (int c : vector) {
        if (c < 1) {
            throw std::invalid_argument("branching vector entries must be positive");
        }
    }
    // P(1) = 1 - t < 0 and P(t + 1) > 0; P is increasing on (0, inf).
    double lo = 1.0;
    double hi = static_cast<double>(vector.size()) + 1.0;
    for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
        double mid = 0.5 * (lo + hi);
        (characteristic(vector, mid) < 0.0 ? lo : hi) = mid;
    }
    double root = 0.5 * (lo + hi);
    if (std::abs(characteristic(vector, root)) > 1e-9) {
        throw std::logic_error("bisection failed to converge");
    }
    return root;
}

bool dominates(std::span<const int> realized, std::span<const int> minimum) {
    if (realized.size() != minimum.size()) {
        return false;
    }
    for (std::size_t i = 0; i < realized.size(); ++i) {
        if (realized[i] < minimum[i]) {
            return false;
        }
    }
    return true;
}

const std::vector<VectorTableEntry>& rule_vector_table() {
    static const std::vector<VectorTableEntry> table = [] {
        const std::vector<std::pair<std::string, BranchingVector>> minima = {
            {"B1", {1, 1}},
            {"B2", {1, 1, 2}},
            {"B3", {1, 1, 2, 2}},
            {"B4", {1, 2, 2}},
            {"B5", {1, 2, 2, 4, 3, 2, 4, 3}},
            {"B6", {1, 1}},
            {"B7", {1, 2, 2, 2, 3, 3, 3, 3}},
        };
        std::vector<VectorTableEntry> out;
        for (const auto& [rule, vec] : minima) {
            out.push_back({rule, vec, branching_number(vec)});
        }
        const VectorTableEntry* worst = &out.front();
        for (const auto& entry : out) {
            if (entry.number > worst->number) {
                worst = &entry;
            }
        }
        if (worst->rule != "B3" || std::abs(worst->number - (1.0 + std::sqrt(3.0))) > 1e-9) {
            throw std::logic_error("worst branching rule is not B3 at 1 + sqrt(3)");
        }
        return out;
    }();
    return table;
}

BranchingVector minimum_vector(std::string_view rule) {
    for (const auto& entry : rule_vector_table()) {
        if (entry.rule == rule) {
            return entry.minimum;
        }
    }
    return {};
}

std::string format_vector(std::span<const int> vector) {
    std::string out = "(";
    for (std::size_t i = 0; i < vector.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(vector[i]);
    }
    return out + ")";
}

TraceLine parse_trace_line(std::string_view text, int line_number) {
    std::istringstream in{std::string(text)};
    std::string tag, depth, rule, budget, sizes, extra;
    if (!(in >> tag >> depth >> rule >> budget >> sizes) || (in >> extra)) {
        throw MalformedTraceError(line_number, "expected 5 fields");
    }
    TraceLine line;
    if (tag != "node") {
        throw MalformedTraceError(line_number, "expected 'node'");
    }
    if (!parse_int(depth, line.depth) || line.depth < 0) {
        throw MalformedTraceError(line_number, "bad depth '" + depth + "'");
    }
    if (rule.empty()) {
        throw MalformedTraceError(line_number, "missing rule");
    }
    line.rule = rule;
    if (budget.rfind("k=", 0) != 0 || !parse_int(std::string_view(budget).substr(2), line.budget)) {
        throw MalformedTraceError(line_number, "bad budget '" + budget + "'");
    }
    if (sizes.rfind("sizes=", 0) != 0) {
        throw MalformedTraceError(line_number, "bad sizes '" + sizes + "'");
    }
    std::string_view list = std::string_view(sizes).substr(6);
    while (!list.empty()) {
        auto comma = list.find(',');
        int value = 0;
        if (!parse_int(list.substr(0, comma), value) || value < 1) {
            throw MalformedTraceError(line_number, "bad branch size in '" + sizes + "'");
        }
        line.sizes.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        list.remove_prefix(comma + 1);
        if (list.empty()) {
            throw MalformedTraceError(line_number, "trailing comma in sizes");
        }
    }
    return line;
}

RecursionStats stats_from_trace(const std::vector<TraceLine>& lines) {
    RecursionStats stats;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& line = lines[i];
        const int expected_max = i == 0 ? 0 : lines[i - 1].depth + 1;
        if (line.depth > expected_max) {
            throw MalformedTraceError(static_cast<int>(i) + 1, "depth jumps by more than one");
        }
        ++stats.nodes;
        stats.max_depth = std::max(stats.max_depth, line.depth);
        ++stats.rule_counts[line.rule];
        if (line.sizes.size() >= 2) {
            stats.branch_vectors.emplace_back(line.rule, line.sizes);
        }
        const bool has_child = i + 1 < lines.size() && lines[i + 1].depth == line.depth + 1;
        if (!has_child) {
            ++stats.leaves;
        }
    }
    return stats;
}

RecursionStats stats_from_trace(std::istream& in) {
    std::vector<TraceLine> lines;
    std::string text;
    int number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (text.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        lines.push_back(parse_trace_line(text, number));
    }
    return stats_from_trace(lines);
}

} // namespace splitdel
