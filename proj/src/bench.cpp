#include "cisenum/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cisenum/enumerate.hpp"
#include "cisenum/errors.hpp"
#include "cisenum/oracle.hpp"
#include "cisenum/subgraph.hpp"

namespace cisenum {

namespace {

std::vector<std::string_view> split(std::string_view text, char delim) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(delim, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

int parse_int(std::string_view token, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ValidationError("recipe: bad " + std::string(what) + " '" + std::string(token) +
                              "'");
    }
    return value;
}

std::uint64_t parse_u64(std::string_view token, std::string_view what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ValidationError("recipe: bad " + std::string(what) + " '" + std::string(token) +
                              "'");
    }
    return value;
}

double parse_probability(std::string_view token) {
    try {
        std::size_t consumed = 0;
        double value = std::stod(std::string(token), &consumed);
        if (consumed != token.size()) throw std::invalid_argument("trailing characters");
        if (!(value >= 0.0 && value <= 1.0)) {
            throw ValidationError("recipe: probability must be in [0,1], got '" +
                                  std::string(token) + "'");
        }
        return value;
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw ValidationError("recipe: bad probability '" + std::string(token) + "'");
    }
}

}  // namespace

std::string_view family_name(GraphFamily family) {
    switch (family) {
        case GraphFamily::path: return "path";
        case GraphFamily::cycle: return "cycle";
        case GraphFamily::complete: return "complete";
        case GraphFamily::star: return "star";
        case GraphFamily::gnp: return "gnp";
    }
    return "?";
}

GraphRecipe GraphRecipe::parse(std::string_view text) {
    auto parts = split(text, ':');
    GraphRecipe recipe;
    if (parts.empty() || parts[0].empty()) {
        throw ValidationError("recipe: expected 'family:n[:p:seed]', got '" + std::string(text) +
                              "'");
    }
    std::string_view family = parts[0];
    if (family == "path") {
        recipe.family = GraphFamily::path;
    } else if (family == "cycle") {
        recipe.family = GraphFamily::cycle;
    } else if (family == "complete") {
        recipe.family = GraphFamily::complete;
    } else if (family == "star") {
        recipe.family = GraphFamily::star;
    } else if (family == "gnp") {
        recipe.family = GraphFamily::gnp;
    } else {
        throw ValidationError("recipe: unknown family '" + std::string(family) + "'");
    }
    if (recipe.family == GraphFamily::gnp) {
        if (parts.size() != 4) {
            throw ValidationError("recipe: gnp needs 'gnp:n:p:seed', got '" + std::string(text) +
                                  "'");
        }
        recipe.n = parse_int(parts[1], "vertex count");
        recipe.p = parse_probability(parts[2]);
        recipe.seed = parse_u64(parts[3], "seed");
    } else {
        if (parts.size() != 2) {
            throw ValidationError("recipe: " + std::string(family) + " needs '" +
                                  std::string(family) + ":n', got '" + std::string(text) + "'");
        }
        recipe.n = parse_int(parts[1], "vertex count");
    }
    if (recipe.n < 0) throw ValidationError("recipe: vertex count must be non-negative");
    return recipe;
}

std::string GraphRecipe::to_string() const {
    std::ostringstream out;
    out << family_name(family) << ':' << n;
    if (family == GraphFamily::gnp) {
        out << ':' << p << ':' << seed;
    }
    return out.str();
}

Graph generate_graph(const GraphRecipe& recipe) {
    const int n = recipe.n;
    if (n < 0) throw ValidationError("recipe: vertex count must be non-negative");
    std::vector<std::pair<VertexId, VertexId>> edges;
    switch (recipe.family) {
        case GraphFamily::path:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case GraphFamily::cycle:
            if (n < 3) throw ValidationError("recipe: cycle needs n >= 3");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(n - 1, 0);
            break;
        case GraphFamily::complete:
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            }
            break;
        case GraphFamily::star:
            for (int leaf = 1; leaf < n; ++leaf) edges.emplace_back(0, leaf);
            break;
        case GraphFamily::gnp: {
            SplitMix64 rng(recipe.seed);
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (rng.next_unit() < recipe.p) edges.emplace_back(u, v);
                }
            }
            break;
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

namespace {

using Clock = std::chrono::steady_clock;

// Exhaustive streaming scan, timed like the reverse-search runs: walk
// k-subsets lexicographically and emit the connected ones as found.
std::uint64_t brute_stream(const Graph& g, int k, std::uint64_t max_solutions,
                           const std::function<void()>& emit) {
    const int n = g.vertex_count();
    if (n > kDefaultOracleVertexCap) {
        throw OracleCapError("brute benchmark refuses n=" + std::to_string(n) + " (cap is " +
                             std::to_string(kDefaultOracleVertexCap) + " vertices)");
    }
    if (k > n) return 0;
    SubgraphScratch scratch(n);
    std::vector<VertexId> comb(static_cast<std::size_t>(k));
    std::iota(comb.begin(), comb.end(), 0);
    std::uint64_t emitted = 0;
    while (true) {
        if (is_connected_induced(g, VertexSet(comb), scratch)) {
            emit();
            ++emitted;
            if (max_solutions != 0 && emitted >= max_solutions) break;
        }
        int i = k - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return emitted;
}

std::chrono::nanoseconds nearest_rank(const std::vector<std::int64_t>& sorted_gaps,
                                      double percentile) {
    const auto count = static_cast<double>(sorted_gaps.size());
    auto rank = static_cast<std::size_t>(std::ceil(percentile / 100.0 * count));
    rank = std::clamp<std::size_t>(rank, 1, sorted_gaps.size());
    return std::chrono::nanoseconds(sorted_gaps[rank - 1]);
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

DelayReport run_benchmark(const Graph& g, int k, std::string_view algorithm,
                          std::string_view graph_id, const BenchmarkOptions& options) {
    if (k < 1) throw std::invalid_argument("subgraph order k must be >= 1");
    DelayReport report;
    report.algorithm = std::string(algorithm);
    report.graph_id = std::string(graph_id);
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.delta = g.max_degree();
    report.k = k;

    std::vector<std::int64_t> gaps;
    const Clock::time_point start = Clock::now();
    Clock::time_point previous = start;
    auto record = [&gaps, &previous] {
        Clock::time_point now = Clock::now();
        gaps.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(now - previous)
                           .count());
        previous = now;
    };

    EnumerationCounters counters;
    EnumerationConfig config;
    config.max_dictionary_entries = options.max_dictionary_entries;
    config.max_solutions = options.max_solutions;

    std::uint64_t total = 0;
    if (algorithm == "irwd") {
        total = enumerate_irwd(g, k, [&record](const VertexSet&) { record(); }, config,
                               &counters);
    } else if (algorithm == "rwd") {
        total = enumerate_rwd(g, k, [&record](const VertexSet&) { record(); }, config,
                              &counters);
    } else if (algorithm == "brute") {
        total = brute_stream(g, k, options.max_solutions, record);
    } else {
        throw ValidationError("unknown algorithm '" + std::string(algorithm) +
                              "' (expected irwd, rwd or brute)");
    }
    const Clock::time_point finish = Clock::now();
    // trailing gap: last emission (or start) to enumeration end
    gaps.push_back(
        std::chrono::duration_cast<std::chrono::nanoseconds>(finish - previous).count());

    report.total_solutions = total;
    report.truncated = options.max_solutions != 0 && total >= options.max_solutions;
    report.total_time = std::chrono::duration_cast<std::chrono::nanoseconds>(finish - start);
    std::sort(gaps.begin(), gaps.end());
    report.max_delay = std::chrono::nanoseconds(gaps.back());
    report.p50_delay = nearest_rank(gaps, 50.0);
    report.p99_delay = nearest_rank(gaps, 99.0);
    report.dict_lookups = counters.dictionary_lookups;
    report.articulation_time = counters.articulation_time;
    report.common_neighborhood_time = counters.common_neighborhood_time;
    return report;
}

std::string delay_report_csv_header() {
    return "algorithm,graph_id,n,m,delta,k,total_solutions,truncated,total_time_ns,"
           "max_delay_ns,p50_delay_ns,p99_delay_ns,dict_lookups,articulation_time_ns,"
           "common_neighborhood_time_ns";
}

std::string to_csv_row(const DelayReport& r) {
    std::ostringstream out;
    out << csv_escape(r.algorithm) << ',' << csv_escape(r.graph_id) << ',' << r.n << ',' << r.m
        << ',' << r.delta << ',' << r.k << ',' << r.total_solutions << ','
        << (r.truncated ? "true" : "false") << ',' << r.total_time.count() << ','
        << r.max_delay.count() << ',' << r.p50_delay.count() << ',' << r.p99_delay.count() << ','
        << r.dict_lookups << ',' << r.articulation_time.count() << ','
        << r.common_neighborhood_time.count();
    return out.str();
}

std::string to_kv(const DelayReport& r) {
    std::ostringstream out;
    out << "algorithm=" << r.algorithm << '\n';
    out << "graph_id=" << r.graph_id << '\n';
    out << "n=" << r.n << '\n';
    out << "m=" << r.m << '\n';
    out << "delta=" << r.delta << '\n';
    out << "k=" << r.k << '\n';
    out << "total_solutions=" << r.total_solutions << '\n';
    out << "truncated=" << (r.truncated ? "true" : "false") << '\n';
    out << "total_time_ns=" << r.total_time.count() << '\n';
    out << "max_delay_ns=" << r.max_delay.count() << '\n';
    out << "p50_delay_ns=" << r.p50_delay.count() << '\n';
    out << "p99_delay_ns=" << r.p99_delay.count() << '\n';
    out << "dict_lookups=" << r.dict_lookups << '\n';
    out << "articulation_time_ns=" << r.articulation_time.count() << '\n';
    out << "common_neighborhood_time_ns=" << r.common_neighborhood_time.count() << '\n';
    return out.str();
}

}  // namespace cisenum
