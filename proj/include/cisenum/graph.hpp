#ifndef CISENUM_GRAPH_HPP
#define CISENUM_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cisenum/vertex_set.hpp"

namespace cisenum {

/// Immutable undirected simple graph in adjacency-list form.
///
/// Adjacency lists are sorted and symmetric, with no self-loops or duplicate
/// entries. Instances are safe for concurrent reads once constructed.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list over vertices [0, n). Duplicate edges (in
    /// either orientation) are collapsed. Self-loops and out-of-range ids
    /// throw ValidationError.
    static Graph from_edges(int n, std::vector<std::pair<VertexId, VertexId>> edges);

    int vertex_count() const noexcept { return n_; }
    std::int64_t edge_count() const noexcept { return m_; }
    int max_degree() const noexcept { return max_degree_; }

    std::span<const VertexId> neighbors(VertexId v) const;
    int degree(VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;  // O(log deg(u))

    /// External label of a vertex, as seen in the input. Identity unless the
    /// parser remapped labels.
    std::int64_t label_of(VertexId v) const;

    /// Maximal connected vertex sets, each sorted, ordered by smallest member.
    std::vector<VertexSet> connected_components() const;

    /// Canonical serialization: "n <count>" header plus one "u v" line per
    /// edge with u < v, lexicographically sorted. Reparsing yields an equal
    /// graph, isolated vertices included.
    std::string to_edge_list() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::int64_t m_ = 0;
    int max_degree_ = 0;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::int64_t> labels_;  // external label per vertex id

    friend Graph parse_edge_list(std::istream& in);
};

/// Parses whitespace-separated "u v" edge lines. Lines starting with '#' are
/// comments; blank lines are skipped; an optional "n <count>" header declares
/// the vertex count (needed for trailing isolated vertices). Accepts LF and
/// CRLF. Without a header the vertex count is one past the largest id seen.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

}  // namespace cisenum

#endif  // CISENUM_GRAPH_HPP
