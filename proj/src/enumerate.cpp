#include "cisenum/enumerate.hpp"

#include <utility>

namespace cisenum {

std::optional<VertexSet> initial_solution(const Graph& g, const VertexSet& component, int k) {
    if (k < 1) throw std::invalid_argument("subgraph order k must be >= 1");
    if (component.empty()) throw std::invalid_argument("initial_solution: empty component");
    if (component.size() < k) return std::nullopt;  // component too small

    std::vector<VertexId> taken;
    taken.reserve(static_cast<std::size_t>(k));
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<VertexId> queue;
    queue.push_back(component.front());
    seen[static_cast<std::size_t>(component.front())] = 1;
    for (std::size_t head = 0; head < queue.size() && static_cast<int>(taken.size()) < k;
         ++head) {
        VertexId u = queue[head];
        taken.push_back(u);
        for (VertexId w : g.neighbors(u)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
    }
    // component is connected with at least k members, so BFS found k of them
    return VertexSet::from_unsorted(std::move(taken));
}

void for_each_supergraph_neighbor(const Graph& g, const VertexSet& s, SubgraphScratch& scratch,
                                  const std::function<void(const VertexSet&)>& yield) {
    detail::generate_supergraph_neighbors(g, s, scratch, nullptr,
                                          [&yield](VertexSet&& candidate) { yield(candidate); });
}

std::vector<VertexSet> neighbors_in_supergraph(const Graph& g, const VertexSet& s) {
    SubgraphScratch scratch(g.vertex_count());
    std::vector<VertexSet> out;
    detail::generate_supergraph_neighbors(
        g, s, scratch, nullptr,
        [&out](VertexSet&& candidate) { out.push_back(std::move(candidate)); });
    return out;
}

std::uint64_t enumerate_irwd(const Graph& g, int k, const SolutionSink& sink,
                             const EnumerationConfig& config, EnumerationCounters* counters) {
    return enumerate_irwd_with<SolutionDictionary>(g, k, sink, config, counters);
}

std::uint64_t enumerate_rwd(const Graph& g, int k, const SolutionSink& sink,
                            const EnumerationConfig& config, EnumerationCounters* counters) {
    return enumerate_rwd_with<SolutionDictionary>(g, k, sink, config, counters);
}

}  // namespace cisenum
