#ifndef CISENUM_SUPERGRAPH_HPP
#define CISENUM_SUPERGRAPH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cisenum/graph.hpp"
#include "cisenum/oracle.hpp"

namespace cisenum {

/// Explicit materialization of the meta-graph whose nodes are all connected
/// k-sets of a host graph and whose edges join sets with a connected
/// (k-1)-intersection. Verification-scale only.
struct Supergraph {
    int k = 0;
    std::vector<VertexSet> nodes;             ///< lexicographically sorted
    std::vector<std::vector<int>> adjacency;  ///< node-index lists, sorted

    std::size_t node_count() const noexcept { return nodes.size(); }
    std::size_t edge_count() const;
    /// Audits that the edge relation is symmetric.
    bool symmetric() const;
};

/// Nodes from the brute-force oracle; edges from the pairwise definitional
/// test (|X ∩ X'| = k-1 and the intersection induces a connected subgraph).
/// For k = 1 intersections are empty and the node set carries no edges.
Supergraph build_supergraph(const Graph& g, int k, int max_vertices = kDefaultOracleVertexCap);

/// Outcome of checking that vertex exchange can reach every solution from
/// every other within the promised number of steps.
struct ReachabilityReport {
    int n = 0;
    int k = 0;
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    bool edge_relation_symmetric = false;
    /// The edge relation is symmetric, so reachability in either direction
    /// reduces to undirected connectivity; that is what gets checked.
    bool supergraph_connected = false;
    int diameter = 0;  ///< hops, over reachable pairs
    int hop_bound = 0;  ///< n - k: a walk of n-k+1 solution sets has n-k hops
    bool pass = false;  ///< connected and diameter <= hop_bound

    std::string to_text() const;
    /// Machine-readable "key=value" lines.
    std::string to_kv() const;
};

/// All-pairs BFS over the supergraph. Requires a non-empty node set.
ReachabilityReport check_reachability(const Supergraph& sg, int n, int k);

}  // namespace cisenum

#endif  // CISENUM_SUPERGRAPH_HPP
