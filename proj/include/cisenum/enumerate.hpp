#ifndef CISENUM_ENUMERATE_HPP
#define CISENUM_ENUMERATE_HPP

#include <cassert>
#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cisenum/errors.hpp"
#include "cisenum/graph.hpp"
#include "cisenum/subgraph.hpp"

namespace cisenum {

/// Hash-backed dictionary of discovered solutions (the default).
using HashedDictionary = std::unordered_set<VertexSet, VertexSetHash>;
/// Ordered alternative whose lookup cost follows the comparison-tree model.
using OrderedDictionary = std::set<VertexSet>;

#ifdef CISENUM_ORDERED_DICTIONARY
using SolutionDictionary = OrderedDictionary;
#else
using SolutionDictionary = HashedDictionary;
#endif

/// Receives each solution exactly once, as a canonical sorted vertex list, in
/// traversal order. The referenced set is owned by the enumerator; consumers
/// must copy what they keep and must not mutate it.
using SolutionSink = std::function<void(const VertexSet&)>;

struct EnumerationConfig {
    /// Abort with DictionaryCapError when the dictionary would exceed this
    /// many entries. 0 = unlimited.
    std::size_t max_dictionary_entries = 0;
    /// Stop cleanly after this many emissions; the run is then a prefix of
    /// the full enumeration (benchmarking aid). 0 = enumerate everything.
    std::uint64_t max_solutions = 0;
};

/// Aggregates the measurable per-call costs of one enumeration run.
struct EnumerationCounters {
    std::uint64_t dictionary_lookups = 0;
    std::chrono::nanoseconds articulation_time{0};
    std::chrono::nanoseconds common_neighborhood_time{0};
};

/// FIFO work queue plus solution dictionary driving the breadth-first
/// traversal of the supergraph. Every queued set is in the dictionary, and
/// emitted + queued never exceeds the dictionary size.
template <typename Dictionary>
class EnumerationState {
public:
    EnumerationState(int k, std::size_t max_entries) : k_(k), max_entries_(max_entries) {}

    /// Dictionary probe plus insert; enqueues when the set is new.
    /// Returns whether the set was new.
    bool try_add(VertexSet s) {
        assert(s.size() == k_);
        ++lookups_;
        auto [it, inserted] = dictionary_.insert(std::move(s));
        if (!inserted) return false;
        if (max_entries_ != 0 && dictionary_.size() > max_entries_) {
            throw DictionaryCapError("solution dictionary exceeded the cap of " +
                                     std::to_string(max_entries_) + " entries");
        }
        queue_.push_back(*it);
        return true;
    }

    bool queue_empty() const noexcept { return queue_.empty(); }

    VertexSet take_next() {
        VertexSet s = std::move(queue_.front());
        queue_.pop_front();
        return s;
    }

    void count_emission() noexcept { ++emitted_; }

    std::size_t queue_size() const noexcept { return queue_.size(); }
    std::size_t dictionary_size() const noexcept { return dictionary_.size(); }
    std::uint64_t emitted() const noexcept { return emitted_; }
    std::uint64_t dictionary_lookups() const noexcept { return lookups_; }

private:
    int k_;
    std::size_t max_entries_;
    std::deque<VertexSet> queue_;
    Dictionary dictionary_;
    std::uint64_t emitted_ = 0;
    std::uint64_t lookups_ = 0;
};

/// The first k vertices in breadth-first order from the smallest-id vertex of
/// `component` (which must be a whole connected component of g). Empty when
/// the component has fewer than k vertices.
std::optional<VertexSet> initial_solution(const Graph& g, const VertexSet& component, int k);

namespace detail {

/// Generates the supergraph neighbors of a connected k-set s by vertex
/// exchange: delete any non-articulation vertex, then add any outside
/// neighbor of the connected remainder. Every generated set is connected,
/// has order k, and shares a connected (k-1)-intersection with s.
template <typename Yield>
void generate_supergraph_neighbors(const Graph& g, const VertexSet& s, SubgraphScratch& scratch,
                                   EnumerationCounters* counters, Yield&& yield) {
    using Clock = std::chrono::steady_clock;
    VertexSet articulation;
    if (counters != nullptr) {
        auto t0 = Clock::now();
        articulation = articulation_points(g, s, scratch);
        counters->articulation_time += Clock::now() - t0;
    } else {
        articulation = articulation_points(g, s, scratch);
    }
    for (VertexId v : s) {
        if (articulation.contains(v)) continue;
        VertexSet rest = s.without(v);
        VertexSet fringe = set_neighborhood(g, rest, scratch);
        for (VertexId w : fringe) {
            if (w == v) continue;  // would only regenerate s
            yield(rest.with(w));
        }
    }
}

template <typename Dictionary, typename Expand>
std::uint64_t enumerate_reverse_search(const Graph& g, int k, const SolutionSink& sink,
                                       const EnumerationConfig& config,
                                       EnumerationCounters* counters, Expand&& expand) {
    if (k < 1) throw std::invalid_argument("subgraph order k must be >= 1");
    // Order 1 needs no traversal: every vertex is a solution, and the
    // exchange machinery assumes k >= 2.
    if (k == 1) {
        std::uint64_t emitted = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (config.max_solutions != 0 && emitted >= config.max_solutions) break;
            sink(VertexSet({v}));
            ++emitted;
        }
        return emitted;
    }
    EnumerationState<Dictionary> state(k, config.max_dictionary_entries);
    SubgraphScratch scratch(g.vertex_count());
    bool stopped = false;
    for (const VertexSet& component : g.connected_components()) {
        if (stopped) break;
        auto start = initial_solution(g, component, k);
        if (!start) continue;  // component smaller than k
        state.try_add(*std::move(start));
        while (!state.queue_empty()) {
            if (config.max_solutions != 0 && state.emitted() >= config.max_solutions) {
                stopped = true;
                break;
            }
            VertexSet s = state.take_next();
            sink(s);
            state.count_emission();
            expand(s, state, scratch);
        }
    }
    if (counters != nullptr) counters->dictionary_lookups += state.dictionary_lookups();
    return state.emitted();
}

}  // namespace detail

/// Streams the supergraph neighbors of s (connected, |s| = k >= 2): every
/// connected k-set sharing a connected (k-1)-intersection with s. A set may
/// be yielded at most once per deleted vertex; callers deduplicate through
/// their dictionary.
void for_each_supergraph_neighbor(const Graph& g, const VertexSet& s, SubgraphScratch& scratch,
                                  const std::function<void(const VertexSet&)>& yield);

/// Collecting variant for verification and tests.
std::vector<VertexSet> neighbors_in_supergraph(const Graph& g, const VertexSet& s);

/// Improved reverse search: breadth-first traversal of the supergraph under
/// the connected-intersection neighbor operator. Only non-articulation
/// vertices are deleted, so the remainder stays connected and any outside
/// neighbor completes a solution; no common-neighborhood search is needed.
/// Returns the number of solutions handed to the sink.
template <typename Dictionary>
std::uint64_t enumerate_irwd_with(const Graph& g, int k, const SolutionSink& sink,
                                  const EnumerationConfig& config = {},
                                  EnumerationCounters* counters = nullptr) {
    return detail::enumerate_reverse_search<Dictionary>(
        g, k, sink, config, counters,
        [&g, counters](const VertexSet& s, EnumerationState<Dictionary>& state,
                       SubgraphScratch& scratch) {
            detail::generate_supergraph_neighbors(
                g, s, scratch, counters,
                [&state](VertexSet&& candidate) { state.try_add(std::move(candidate)); });
        });
}

/// Baseline reverse search: deletes every vertex of a solution (the
/// remainder may fall apart) and bridges the remainder's components through
/// their common neighborhood, recomputed from scratch per deletion.
template <typename Dictionary>
std::uint64_t enumerate_rwd_with(const Graph& g, int k, const SolutionSink& sink,
                                 const EnumerationConfig& config = {},
                                 EnumerationCounters* counters = nullptr) {
    using Clock = std::chrono::steady_clock;
    return detail::enumerate_reverse_search<Dictionary>(
        g, k, sink, config, counters,
        [&g, counters](const VertexSet& s, EnumerationState<Dictionary>& state,
                       SubgraphScratch& scratch) {
            for (VertexId v : s) {
                VertexSet rest = s.without(v);
                VertexSet bridges;
                if (counters != nullptr) {
                    auto t0 = Clock::now();
                    bridges = common_component_neighborhood(g, rest, scratch);
                    counters->common_neighborhood_time += Clock::now() - t0;
                } else {
                    bridges = common_component_neighborhood(g, rest, scratch);
                }
                // bridges always contains v itself; that regenerates s, which
                // the dictionary rejects.
                for (VertexId w : bridges) {
                    VertexSet candidate = rest.with(w);
                    assert(is_connected_induced(g, candidate));
                    state.try_add(std::move(candidate));
                }
            }
        });
}

/// Entry points on the build-selected dictionary type.
std::uint64_t enumerate_irwd(const Graph& g, int k, const SolutionSink& sink,
                             const EnumerationConfig& config = {},
                             EnumerationCounters* counters = nullptr);
std::uint64_t enumerate_rwd(const Graph& g, int k, const SolutionSink& sink,
                            const EnumerationConfig& config = {},
                            EnumerationCounters* counters = nullptr);

}  // namespace cisenum

#endif  // CISENUM_ENUMERATE_HPP
