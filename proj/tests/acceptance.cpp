// Acceptance suite: runs every release criterion at desk scale and prints one
// pass/fail line per criterion. Exits non-zero if any criterion fails.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cisenum/bench.hpp"
#include "cisenum/enumerate.hpp"
#include "cisenum/graph.hpp"
#include "cisenum/oracle.hpp"
#include "cisenum/subgraph.hpp"
#include "cisenum/supergraph.hpp"
#include "test_util.hpp"

using namespace cisenum;

namespace {

struct Instance {
    std::string id;
    Graph graph;
};

// 231 seeded sparse-to-dense random instances
std::vector<Instance> gnp_corpus(int n_min, int n_max) {
    std::vector<Instance> corpus;
    for (int n = n_min; n <= n_max; ++n) {
        for (double p : {0.2, 0.4, 0.7}) {
            for (std::uint64_t seed = 1; seed <= 7; ++seed) {
                GraphRecipe recipe{GraphFamily::gnp, n, p, seed};
                corpus.push_back({recipe.to_string(), generate_graph(recipe)});
            }
        }
    }
    return corpus;
}

std::vector<Instance> family_corpus(int n_max) {
    std::vector<Instance> corpus;
    auto add = [&corpus](GraphFamily family, int n) {
        GraphRecipe recipe{family, n, 0.0, 0};
        corpus.push_back({recipe.to_string(), generate_graph(recipe)});
    };
    for (int n = 1; n <= n_max; ++n) add(GraphFamily::path, n);
    for (int n = 3; n <= n_max; ++n) add(GraphFamily::cycle, n);
    for (int n = 1; n <= n_max; ++n) add(GraphFamily::complete, n);
    for (int n = 2; n <= n_max; ++n) add(GraphFamily::star, n);
    return corpus;
}

std::vector<VertexSet> run_sorted(const std::string& algorithm, const Graph& g, int k) {
    std::vector<VertexSet> out;
    auto sink = [&out](const VertexSet& s) { out.push_back(s); };
    if (algorithm == "irwd") {
        enumerate_irwd(g, k, sink);
    } else {
        enumerate_rwd(g, k, sink);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return result;
}

bool connected_graph(const Graph& g) { return g.connected_components().size() == 1; }

// 1. IRwD and RwD reproduce the oracle's solution set on every instance.
bool criterion_oracle_equivalence(std::string& detail) {
    auto corpus = gnp_corpus(2, 12);
    if (corpus.size() < 200) {
        detail = "corpus holds only " + std::to_string(corpus.size()) + " instances";
        return false;
    }
    for (const auto& [id, g] : corpus) {
        for (int k = 1; k <= g.vertex_count(); ++k) {
            auto expected = oracle_bruteforce(g, k);
            for (const std::string algorithm : {"irwd", "rwd"}) {
                if (run_sorted(algorithm, g, k) != expected) {
                    detail = algorithm + " disagrees with the oracle on " + id +
                             " k=" + std::to_string(k);
                    return false;
                }
            }
        }
    }
    return true;
}

// 2. Closed-form counts for paths, cycles, complete graphs and stars.
bool criterion_closed_forms(std::string& detail) {
    auto check = [&detail](const std::string& id, const Graph& g, int k,
                           std::uint64_t expected) {
        for (const std::string algorithm : {"irwd", "rwd"}) {
            auto got = static_cast<std::uint64_t>(run_sorted(algorithm, g, k).size());
            if (got != expected) {
                detail = algorithm + " on " + id + " k=" + std::to_string(k) + ": got " +
                         std::to_string(got) + ", expected " + std::to_string(expected);
                return false;
            }
        }
        return true;
    };
    for (int n = 1; n <= 15; ++n) {
        Graph path = testutil::path_graph(n);
        for (int k = 1; k <= n; ++k) {
            if (!check("path:" + std::to_string(n), path, k,
                       static_cast<std::uint64_t>(n - k + 1))) {
                return false;
            }
        }
    }
    for (int n = 3; n <= 15; ++n) {
        Graph cycle = testutil::cycle_graph(n);
        for (int k = 1; k <= n; ++k) {
            std::uint64_t expected = k < n ? static_cast<std::uint64_t>(n) : 1;
            if (!check("cycle:" + std::to_string(n), cycle, k, expected)) return false;
        }
    }
    for (int n = 1; n <= 15; ++n) {
        Graph complete = testutil::complete_graph(n);
        for (int k = 1; k <= n; ++k) {
            if (!check("complete:" + std::to_string(n), complete, k, binomial(n, k))) {
                return false;
            }
        }
    }
    for (int n = 2; n <= 15; ++n) {  // center plus L = n-1 leaves
        Graph star = testutil::star_graph(n);
        for (int k = 1; k <= n; ++k) {
            std::uint64_t expected =
                k == 1 ? static_cast<std::uint64_t>(n) : binomial(n - 1, k - 1);
            if (!check("star:" + std::to_string(n), star, k, expected)) return false;
        }
    }
    return true;
}

// 3 + 4. The explicit supergraph is connected within the diameter bound, and
// the generator's neighbor stream equals the definitional operator on every
// node. One pass builds each supergraph once and feeds both criteria.
void criteria_supergraph(bool& reachability_pass, std::string& reachability_detail, bool& operator_pass,
                         std::string& operator_detail) {
    operator_pass = true;
    std::size_t instances = 0;
    std::size_t connectivity_failures = 0;
    std::size_t symmetry_failures = 0;
    std::size_t bound_violations = 0;
    std::string first_violation;
    auto corpus = gnp_corpus(2, 10);
    auto families = family_corpus(10);
    corpus.insert(corpus.end(), families.begin(), families.end());
    for (const auto& [id, g] : corpus) {
        if (g.vertex_count() > 10 || !connected_graph(g)) continue;
        SubgraphScratch scratch(g.vertex_count());
        for (int k = 2; k <= g.vertex_count(); ++k) {
            auto sg = build_supergraph(g, k);
            auto report = check_reachability(sg, g.vertex_count(), k);
            ++instances;
            if (!report.supergraph_connected) ++connectivity_failures;
            if (!report.edge_relation_symmetric) ++symmetry_failures;
            if (report.supergraph_connected && report.diameter > report.hop_bound) {
                ++bound_violations;
                if (first_violation.empty()) {
                    first_violation = id + " k=" + std::to_string(k) + " diameter " +
                                      std::to_string(report.diameter) + " > " +
                                      std::to_string(report.hop_bound);
                }
            }
            for (std::size_t i = 0; operator_pass && i < sg.nodes.size(); ++i) {
                std::vector<VertexSet> generated;
                for_each_supergraph_neighbor(
                    g, sg.nodes[i], scratch,
                    [&generated](const VertexSet& s) { generated.push_back(s); });
                std::sort(generated.begin(), generated.end());
                generated.erase(std::unique(generated.begin(), generated.end()),
                                generated.end());
                std::vector<VertexSet> declared;
                declared.reserve(sg.adjacency[i].size());
                for (int j : sg.adjacency[i]) {
                    declared.push_back(sg.nodes[static_cast<std::size_t>(j)]);
                }
                if (generated != declared) {
                    operator_pass = false;
                    operator_detail = id + " k=" + std::to_string(k) + " node " +
                                      sg.nodes[i].to_string();
                }
            }
        }
    }
    reachability_pass = connectivity_failures == 0 && symmetry_failures == 0 && bound_violations == 0;
    if (!reachability_pass) {
        std::ostringstream detail;
        detail << "of " << instances << " instances: " << connectivity_failures
               << " connectivity failures, " << symmetry_failures << " symmetry failures, "
               << bound_violations << " diameter-bound violations";
        if (!first_violation.empty()) detail << " (first: " << first_violation << ")";
        reachability_detail = detail.str();
    }
}

// 5. Enumerated counts never exceed the published ceiling.
bool criterion_count_bound(std::string& detail) {
    auto corpus = gnp_corpus(2, 12);
    auto families = family_corpus(15);
    corpus.insert(corpus.end(), families.begin(), families.end());
    for (const auto& [id, g] : corpus) {
        if (g.max_degree() < 2) continue;
        for (int k = 1; k <= g.vertex_count(); ++k) {
            std::uint64_t count = enumerate_irwd(g, k, [](const VertexSet&) {});
            double bound = count_upper_bound(g.vertex_count(), g.max_degree(), k);
            if (static_cast<double>(count) > bound) {
                detail = id + " k=" + std::to_string(k) + ": count " + std::to_string(count) +
                         " exceeds bound " + std::to_string(bound);
                return false;
            }
        }
    }
    return true;
}

// 6. The restricted-traversal articulation set matches deletion probing on
// every connected induced subset of order <= 7.
bool criterion_articulation(std::string& detail) {
    auto corpus = gnp_corpus(2, 10);
    auto families = family_corpus(10);
    corpus.insert(corpus.end(), families.begin(), families.end());
    for (const auto& [id, g] : corpus) {
        if (g.vertex_count() > 10) continue;
        SubgraphScratch scratch(g.vertex_count());
        int max_order = std::min(7, g.vertex_count());
        for (int k = 1; k <= max_order; ++k) {
            for (const VertexSet& s : oracle_bruteforce(g, k)) {
                if (articulation_points(g, s, scratch) != testutil::ref_articulation(g, s)) {
                    detail = id + " subset " + s.to_string();
                    return false;
                }
            }
        }
    }
    return true;
}

// 7. Delay report on a large instance: both algorithms complete a capped run
// and the per-phase costs expose IRwD skipping the common-neighborhood
// search. Wall-clock ordering is recorded in the CSV, not asserted.
bool criterion_delay_report(std::string& detail, std::string& csv) {
    GraphRecipe recipe{GraphFamily::gnp, 60, 0.3, 1};
    Graph g = generate_graph(recipe);
    BenchmarkOptions options;
    options.max_solutions = 200;
    std::ostringstream rows;
    rows << delay_report_csv_header() << '\n';
    bool pass = true;
    for (int k : {10, 20, 30}) {
        for (const std::string algorithm : {"irwd", "rwd"}) {
            auto report = run_benchmark(g, k, algorithm, recipe.to_string(), options);
            rows << to_csv_row(report) << '\n';
            if (report.total_solutions == 0 || report.max_delay < report.p99_delay ||
                report.p99_delay < report.p50_delay) {
                pass = false;
                detail = algorithm + " k=" + std::to_string(k) + ": degenerate report";
            }
            if (algorithm == "irwd" && (report.articulation_time.count() <= 0 ||
                                        report.common_neighborhood_time.count() != 0)) {
                pass = false;
                detail = "irwd k=" + std::to_string(k) +
                         ": expected articulation time only, got articulation=" +
                         std::to_string(report.articulation_time.count()) +
                         "ns common_neighborhood=" +
                         std::to_string(report.common_neighborhood_time.count()) + "ns";
            }
            if (algorithm == "rwd" && report.common_neighborhood_time.count() <= 0) {
                pass = false;
                detail = "rwd k=" + std::to_string(k) + ": common-neighborhood time missing";
            }
        }
    }
    csv = rows.str();
    return pass;
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&failures](int id, const std::string& name, bool pass,
                              const std::string& detail) {
        std::cout << "criterion " << id << " (" << name << "): " << (pass ? "PASS" : "FAIL");
        if (!pass && !detail.empty()) std::cout << " — " << detail;
        std::cout << '\n';
        if (!pass) ++failures;
    };

    std::string detail;

    detail.clear();
    report(1, "oracle equivalence, 231 seeded instances", criterion_oracle_equivalence(detail),
           detail);

    detail.clear();
    report(2, "closed-form counts up to n=15", criterion_closed_forms(detail), detail);

    bool reachability_pass = false;
    bool operator_pass = false;
    std::string reachability_detail;
    std::string operator_detail;
    criteria_supergraph(reachability_pass, reachability_detail, operator_pass, operator_detail);
    report(3, "supergraph connectivity and diameter bound", reachability_pass, reachability_detail);
    report(4, "neighborhood-operator equivalence", operator_pass, operator_detail);

    detail.clear();
    report(5, "count upper bound", criterion_count_bound(detail), detail);

    detail.clear();
    report(6, "articulation against deletion probing", criterion_articulation(detail), detail);

    detail.clear();
    std::string csv;
    bool delay_pass = criterion_delay_report(detail, csv);
    report(7, "delay report on gnp:60:0.3:1", delay_pass, detail);
    std::cout << csv;

    if (failures != 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
