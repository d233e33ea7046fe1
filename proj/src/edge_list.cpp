#include "splitdel/edge_list.hpp"

#include <charconv>
#include <optional>
#include <vector>

namespace splitdel {

namespace {

std::vector<std::string_view> fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

long long to_number(std::string_view token, int line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw EdgeListError(EdgeListError::Kind::Parse, line, "expected an integer, got '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    using Kind = EdgeListError::Kind;

    std::optional<Graph> graph;
    long long expected_edges = 0;
    long long seen_edges = 0;
    int line_number = 0;

    while (!text.empty() || line_number == 0) {
        auto newline = text.find('\n');
        std::string_view line = text.substr(0, newline);
        text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
        ++line_number;

        auto tokens = fields(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            if (text.empty()) {
                break;
            }
            continue;
        }
        if (tokens.size() != 2) {
            throw EdgeListError(Kind::Parse, line_number, "expected two integers");
        }
        long long first = to_number(tokens[0], line_number);
        long long second = to_number(tokens[1], line_number);

        if (!graph) {
            if (first < 0 || second < 0) {
                throw EdgeListError(Kind::Parse, line_number, "negative header value");
            }
            if (first > 1'000'000) {
                throw EdgeListError(Kind::Parse, line_number, "vertex count too large");
            }
            graph.emplace(static_cast<int>(first));
            expected_edges = second;
        } else {
            const long long n = graph->order();
            if (first < 0 || second < 0 || first >= n || second >= n) {
                throw EdgeListError(Kind::IndexOutOfRange, line_number, "endpoint outside 0.." + std::to_string(n - 1));
            }
            if (first == second) {
                throw EdgeListError(Kind::Parse, line_number, "self-loop");
            }
            auto u = static_cast<Vertex>(first);
            auto v = static_cast<Vertex>(second);
            if (graph->adjacent(u, v)) {
                throw EdgeListError(Kind::DuplicateEdge, line_number,
                                    "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            }
            if (++seen_edges > expected_edges) {
                throw EdgeListError(Kind::Parse, line_number, "more edges than the header declares");
            }
            graph->add_edge(u, v);
        }
        if (text.empty()) {
            break;
        }
    }

    if (!graph) {
        throw EdgeListError(Kind::Parse, line_number, "missing header");
    }
    if (seen_edges != expected_edges) {
        throw EdgeListError(Kind::Parse, line_number,
                            "header declares " + std::to_string(expected_edges) + " edges, found " +
                                std::to_string(seen_edges));
    }
    return std::move(*graph);
}

std::string render_edge_list(const Graph& g) {
    const auto edges = g.edges();
    std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

} // namespace splitdel
