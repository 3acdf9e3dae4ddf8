#include "cisenum/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <sstream>
#include <string>

#include "cisenum/errors.hpp"

namespace cisenum {

namespace {

constexpr std::int64_t kMaxVertexId = 0x7fffffff;

// Splits a line into whitespace-separated tokens.
std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

std::int64_t parse_id(std::string_view token, std::size_t line_no) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
        throw ParseError("expected a non-negative integer, got '" + std::string(token) + "'",
                         line_no);
    }
    if (value > kMaxVertexId) {
        throw ParseError("vertex id " + std::string(token) + " is too large", line_no);
    }
    return value;
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<std::pair<VertexId, VertexId>> edges) {
    if (n < 0) throw ValidationError("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    for (auto& [u, v] : edges) {
        if (u == v) {
            throw ValidationError("self-loop on vertex " + std::to_string(u));
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") references a vertex outside [0," + std::to_string(n) + ")");
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& [u, v] : edges) {
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : g.adjacency_) {
        std::sort(list.begin(), list.end());
        g.max_degree_ = std::max(g.max_degree_, static_cast<int>(list.size()));
    }
    g.m_ = static_cast<std::int64_t>(edges.size());
    g.labels_.resize(static_cast<std::size_t>(n));
    std::iota(g.labels_.begin(), g.labels_.end(), std::int64_t{0});
    return g;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    const auto& list = adjacency_[static_cast<std::size_t>(v)];
    return {list.data(), list.size()};
}

int Graph::degree(VertexId v) const {
    return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    const auto& list = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::int64_t Graph::label_of(VertexId v) const {
    return labels_[static_cast<std::size_t>(v)];
}

std::vector<VertexSet> Graph::connected_components() const {
    std::vector<VertexSet> components;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<VertexId> stack;
    for (VertexId v = 0; v < n_; ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        std::vector<VertexId> comp;
        seen[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (VertexId w : neighbors(u)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.emplace_back(std::move(comp));
    }
    return components;
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    out << "n " << n_ << '\n';
    for (VertexId u = 0; u < n_; ++u) {
        for (VertexId v : neighbors(u)) {
            if (u < v) out << u << ' ' << v << '\n';
        }
    }
    return out.str();
}

Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::int64_t declared_n = -1;
    std::int64_t max_id = -1;
    std::size_t declared_line = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "n") {
            if (tokens.size() != 2) {
                throw ParseError("header must be 'n <count>'", line_no);
            }
            if (declared_n >= 0) {
                throw ParseError("duplicate 'n' header (first on line " +
                                     std::to_string(declared_line) + ")",
                                 line_no);
            }
            declared_n = parse_id(tokens[1], line_no);
            declared_line = line_no;
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError("expected two vertex ids, got " + std::to_string(tokens.size()) +
                                 " token(s)",
                             line_no);
        }
        std::int64_t u = parse_id(tokens[0], line_no);
        std::int64_t v = parse_id(tokens[1], line_no);
        if (u == v) {
            throw ValidationError("line " + std::to_string(line_no) + ": self-loop on vertex " +
                                  std::to_string(u));
        }
        max_id = std::max({max_id, u, v});
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    std::int64_t n = declared_n >= 0 ? declared_n : max_id + 1;
    if (declared_n >= 0 && max_id >= declared_n) {
        throw ValidationError("vertex id " + std::to_string(max_id) +
                              " is not below the declared vertex count " +
                              std::to_string(declared_n));
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

}  // namespace cisenum
