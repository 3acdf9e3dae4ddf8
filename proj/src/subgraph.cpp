#include "cisenum/subgraph.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace cisenum {

SubgraphScratch::SubgraphScratch(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be non-negative");
    auto size = static_cast<std::size_t>(vertex_count);
    member_stamp_.assign(size, 0);
    visit_stamp_.assign(size, 0);
    seen_stamp_.assign(size, 0);
    count_stamp_.assign(size, 0);
    last_component_.assign(size, 0);
    adjacent_components_.assign(size, 0);
    local_stamp_.assign(size, 0);
    local_index_.assign(size, 0);
}

namespace {

// Visits the neighbors of u inside the marked set: scans whichever side is
// cheaper, the adjacency list of u or the member list of s.
template <typename F>
void for_each_marked_neighbor(const Graph& g, const VertexSet& s,
                              const std::vector<std::uint64_t>& member_stamp,
                              std::uint64_t member_epoch, VertexId u, F&& visit) {
    if (g.degree(u) <= s.size()) {
        for (VertexId w : g.neighbors(u)) {
            if (member_stamp[static_cast<std::size_t>(w)] == member_epoch) visit(w);
        }
    } else {
        for (VertexId w : s) {
            if (w != u && g.adjacent(u, w)) visit(w);
        }
    }
}

}  // namespace

bool is_connected_induced(const Graph& g, const VertexSet& s, SubgraphScratch& scratch) {
    if (s.empty()) throw std::invalid_argument("is_connected_induced: empty vertex set");
    assert(scratch.vertex_capacity() == g.vertex_count());
    if (s.size() == 1) return true;

    const std::uint64_t members = scratch.next_epoch();
    for (VertexId v : s) scratch.member_stamp_[static_cast<std::size_t>(v)] = members;

    const std::uint64_t visited = scratch.next_epoch();
    auto& queue = scratch.queue_;
    queue.clear();
    queue.push_back(s.front());
    scratch.visit_stamp_[static_cast<std::size_t>(s.front())] = visited;
    int reached = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        for_each_marked_neighbor(g, s, scratch.member_stamp_, members, u, [&](VertexId w) {
            auto slot = static_cast<std::size_t>(w);
            if (scratch.visit_stamp_[slot] != visited) {
                scratch.visit_stamp_[slot] = visited;
                queue.push_back(w);
                ++reached;
            }
        });
    }
    return reached == s.size();
}

bool is_connected_induced(const Graph& g, const VertexSet& s) {
    SubgraphScratch scratch(g.vertex_count());
    return is_connected_induced(g, s, scratch);
}

VertexSet articulation_points(const Graph& g, const VertexSet& s, SubgraphScratch& scratch) {
    if (s.empty()) throw std::invalid_argument("articulation_points: empty vertex set");
    assert(scratch.vertex_capacity() == g.vertex_count());
    const int k = s.size();
    if (k == 1) return {};
    if (k == 2) {
        if (!g.adjacent(s[0], s[1])) {
            throw std::invalid_argument("articulation_points: induced subgraph is disconnected");
        }
        return {};
    }

    // Re-index s as local nodes 0..k-1 and materialize the induced adjacency.
    const std::uint64_t locals = scratch.next_epoch();
    for (int i = 0; i < k; ++i) {
        auto slot = static_cast<std::size_t>(s[i]);
        scratch.local_stamp_[slot] = locals;
        scratch.local_index_[slot] = i;
    }
    auto& offsets = scratch.offsets_;
    auto& edges = scratch.local_edges_;
    offsets.assign(static_cast<std::size_t>(k) + 1, 0);
    edges.clear();
    for (int i = 0; i < k; ++i) {
        VertexId u = s[i];
        if (g.degree(u) <= k) {
            for (VertexId w : g.neighbors(u)) {
                auto slot = static_cast<std::size_t>(w);
                if (scratch.local_stamp_[slot] == locals) {
                    edges.push_back(scratch.local_index_[slot]);
                }
            }
        } else {
            for (int j = 0; j < k; ++j) {
                if (j != i && g.adjacent(u, s[j])) edges.push_back(j);
            }
        }
        offsets[static_cast<std::size_t>(i) + 1] = static_cast<int>(edges.size());
    }

    // Iterative Tarjan from local node 0. Each node carries its own edge
    // cursor, so frames are just the node stack.
    auto& disc = scratch.disc_;
    auto& low = scratch.low_;
    auto& parent = scratch.parent_;
    auto& cursor = scratch.edge_cursor_;
    auto& stack = scratch.dfs_stack_;
    disc.assign(static_cast<std::size_t>(k), -1);
    low.assign(static_cast<std::size_t>(k), 0);
    parent.assign(static_cast<std::size_t>(k), -1);
    cursor.assign(offsets.begin(), offsets.end() - 1);
    stack.clear();

    std::vector<char> is_cut(static_cast<std::size_t>(k), 0);
    int timer = 0;
    int root_children = 0;
    disc[0] = low[0] = timer++;
    stack.push_back(0);
    while (!stack.empty()) {
        int i = stack.back();
        auto ui = static_cast<std::size_t>(i);
        if (cursor[ui] < offsets[ui + 1]) {
            int j = edges[static_cast<std::size_t>(cursor[ui]++)];
            auto uj = static_cast<std::size_t>(j);
            if (disc[uj] == -1) {
                parent[uj] = i;
                if (i == 0) ++root_children;
                disc[uj] = low[uj] = timer++;
                stack.push_back(j);
            } else if (j != parent[ui]) {
                low[ui] = std::min(low[ui], disc[uj]);
            }
        } else {
            stack.pop_back();
            int p = parent[ui];
            if (p >= 0) {
                auto up = static_cast<std::size_t>(p);
                low[up] = std::min(low[up], low[ui]);
                if (p != 0 && low[ui] >= disc[up]) is_cut[up] = 1;
            }
        }
    }
    if (timer < k) {
        throw std::invalid_argument("articulation_points: induced subgraph is disconnected");
    }
    is_cut[0] = root_children >= 2 ? 1 : 0;

    std::vector<VertexId> cuts;
    for (int i = 0; i < k; ++i) {
        if (is_cut[static_cast<std::size_t>(i)]) cuts.push_back(s[i]);
    }
    return VertexSet(std::move(cuts));
}

VertexSet articulation_points(const Graph& g, const VertexSet& s) {
    SubgraphScratch scratch(g.vertex_count());
    return articulation_points(g, s, scratch);
}

VertexSet set_neighborhood(const Graph& g, const VertexSet& s, SubgraphScratch& scratch) {
    assert(scratch.vertex_capacity() == g.vertex_count());
    const std::uint64_t members = scratch.next_epoch();
    for (VertexId v : s) scratch.member_stamp_[static_cast<std::size_t>(v)] = members;

    const std::uint64_t seen = scratch.next_epoch();
    auto& out = scratch.collect_;
    out.clear();
    for (VertexId v : s) {
        for (VertexId w : g.neighbors(v)) {
            auto slot = static_cast<std::size_t>(w);
            if (scratch.member_stamp_[slot] != members && scratch.seen_stamp_[slot] != seen) {
                scratch.seen_stamp_[slot] = seen;
                out.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return VertexSet(std::vector<VertexId>(out.begin(), out.end()));
}

VertexSet set_neighborhood(const Graph& g, const VertexSet& s) {
    SubgraphScratch scratch(g.vertex_count());
    return set_neighborhood(g, s, scratch);
}

VertexSet common_component_neighborhood(const Graph& g, const VertexSet& s,
                                        SubgraphScratch& scratch) {
    if (s.empty()) throw std::invalid_argument("common_component_neighborhood: empty vertex set");
    assert(scratch.vertex_capacity() == g.vertex_count());

    const std::uint64_t members = scratch.next_epoch();
    for (VertexId v : s) scratch.member_stamp_[static_cast<std::size_t>(v)] = members;
    const std::uint64_t visited = scratch.next_epoch();
    const std::uint64_t counting = scratch.next_epoch();
    constexpr std::uint64_t no_component = std::numeric_limits<std::uint64_t>::max();

    auto& queue = scratch.queue_;
    auto& candidates = scratch.collect_;
    candidates.clear();
    std::uint64_t component = 0;
    for (VertexId root : s) {
        auto root_slot = static_cast<std::size_t>(root);
        if (scratch.visit_stamp_[root_slot] == visited) continue;
        // Flood one component of G[s]; credit every outside neighbor once
        // per component. Components are traversed whole, one after another,
        // so a single last-component slot per candidate suffices.
        queue.clear();
        queue.push_back(root);
        scratch.visit_stamp_[root_slot] = visited;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            VertexId u = queue[head];
            for (VertexId w : g.neighbors(u)) {
                auto slot = static_cast<std::size_t>(w);
                if (scratch.member_stamp_[slot] == members) {
                    if (scratch.visit_stamp_[slot] != visited) {
                        scratch.visit_stamp_[slot] = visited;
                        queue.push_back(w);
                    }
                } else {
                    if (scratch.count_stamp_[slot] != counting) {
                        scratch.count_stamp_[slot] = counting;
                        scratch.adjacent_components_[slot] = 0;
                        scratch.last_component_[slot] = no_component;
                        candidates.push_back(w);
                    }
                    if (scratch.last_component_[slot] != component) {
                        scratch.last_component_[slot] = component;
                        ++scratch.adjacent_components_[slot];
                    }
                }
            }
        }
        ++component;
    }

    std::vector<VertexId> out;
    for (VertexId w : candidates) {
        auto slot = static_cast<std::size_t>(w);
        if (scratch.adjacent_components_[slot] == static_cast<int>(component)) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return VertexSet(std::move(out));
}

VertexSet common_component_neighborhood(const Graph& g, const VertexSet& s) {
    SubgraphScratch scratch(g.vertex_count());
    return common_component_neighborhood(g, s, scratch);
}

}  // namespace cisenum
