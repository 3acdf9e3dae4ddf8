#ifndef CISENUM_SUBGRAPH_HPP
#define CISENUM_SUBGRAPH_HPP

#include <cstdint>
#include <vector>

#include "cisenum/graph.hpp"

namespace cisenum {

/// Reusable scratch state for induced-subgraph queries.
///
/// Mark arrays are version-stamped, so resetting between calls is O(1) rather
/// than O(n). One instance serves one enumeration activity; concurrent
/// enumerations must each own their scratch.
class SubgraphScratch {
public:
    explicit SubgraphScratch(int vertex_count);

    int vertex_capacity() const noexcept { return n_; }

private:
    int n_ = 0;
    std::uint64_t epoch_ = 0;

    std::uint64_t next_epoch() noexcept { return ++epoch_; }

    // membership / traversal stamps, indexed by vertex id
    std::vector<std::uint64_t> member_stamp_;
    std::vector<std::uint64_t> visit_stamp_;
    std::vector<std::uint64_t> seen_stamp_;

    // common-neighborhood counting
    std::vector<std::uint64_t> count_stamp_;
    std::vector<std::uint64_t> last_component_;
    std::vector<int> adjacent_components_;

    // local-index view of G[s] for the articulation traversal
    std::vector<std::uint64_t> local_stamp_;
    std::vector<int> local_index_;
    std::vector<int> offsets_;
    std::vector<int> local_edges_;
    std::vector<int> disc_;
    std::vector<int> low_;
    std::vector<int> parent_;
    std::vector<int> edge_cursor_;
    std::vector<int> dfs_stack_;

    std::vector<VertexId> queue_;
    std::vector<VertexId> collect_;

    friend bool is_connected_induced(const Graph&, const VertexSet&, SubgraphScratch&);
    friend VertexSet articulation_points(const Graph&, const VertexSet&, SubgraphScratch&);
    friend VertexSet set_neighborhood(const Graph&, const VertexSet&, SubgraphScratch&);
    friend VertexSet common_component_neighborhood(const Graph&, const VertexSet&, SubgraphScratch&);
};

/// True iff the subgraph induced on non-empty `s` is connected.
/// Throws std::invalid_argument on an empty set.
bool is_connected_induced(const Graph& g, const VertexSet& s, SubgraphScratch& scratch);
bool is_connected_induced(const Graph& g, const VertexSet& s);

/// The vertices of `s` whose removal disconnects G[s], via a single
/// depth-first traversal restricted to `s` (Tarjan discovery/low-link).
/// Requires G[s] connected and non-empty; |s| <= 2 yields the empty set.
/// Throws std::invalid_argument if G[s] is disconnected or `s` is empty.
VertexSet articulation_points(const Graph& g, const VertexSet& s, SubgraphScratch& scratch);
VertexSet articulation_points(const Graph& g, const VertexSet& s);

/// All vertices outside `s` adjacent to at least one member, sorted.
VertexSet set_neighborhood(const Graph& g, const VertexSet& s, SubgraphScratch& scratch);
VertexSet set_neighborhood(const Graph& g, const VertexSet& s);

/// All vertices outside `s` adjacent to every connected component of G[s];
/// exactly the vertices whose addition makes G[s ∪ {w}] connected.
/// Throws std::invalid_argument on an empty set.
VertexSet common_component_neighborhood(const Graph& g, const VertexSet& s,
                                        SubgraphScratch& scratch);
VertexSet common_component_neighborhood(const Graph& g, const VertexSet& s);

}  // namespace cisenum

#endif  // CISENUM_SUBGRAPH_HPP
