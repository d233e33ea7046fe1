#ifndef SPLITDEL_EDGE_LIST_HPP
#define SPLITDEL_EDGE_LIST_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "splitdel/graph.hpp"

namespace splitdel {

class EdgeListError : public std::runtime_error {
public:
    enum class Kind { Parse, DuplicateEdge, IndexOutOfRange };

    EdgeListError(Kind kind, int line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason), kind_(kind), line_(line) {}

    Kind kind() const { return kind_; }
    int line() const { return line_; }

private:
    Kind kind_;
    int line_;
};

/// Header "n m" followed by m lines "u v"; '#' lines and blank lines are
/// skipped. Endpoints may be given in either order.
Graph parse_edge_list(std::string_view text);

/// Header plus live edges in lexicographic order, one "u v" per line.
std::string render_edge_list(const Graph& g);

} // namespace splitdel

#endif // SPLITDEL_EDGE_LIST_HPP
