#include "cisenum/supergraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cisenum/subgraph.hpp"

namespace cisenum {

namespace {

int intersection_size(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    int count = 0;
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

}  // namespace

std::size_t Supergraph::edge_count() const {
    std::size_t degree_sum = 0;
    for (const auto& list : adjacency) degree_sum += list.size();
    return degree_sum / 2;
}

bool Supergraph::symmetric() const {
    for (std::size_t i = 0; i < adjacency.size(); ++i) {
        for (int j : adjacency[i]) {
            const auto& back = adjacency[static_cast<std::size_t>(j)];
            if (!std::binary_search(back.begin(), back.end(), static_cast<int>(i))) return false;
        }
    }
    return true;
}

Supergraph build_supergraph(const Graph& g, int k, int max_vertices) {
    Supergraph sg;
    sg.k = k;
    sg.nodes = oracle_bruteforce(g, k, max_vertices);
    sg.adjacency.assign(sg.nodes.size(), {});
    if (k >= 2) {
        SubgraphScratch scratch(g.vertex_count());
        for (std::size_t i = 0; i < sg.nodes.size(); ++i) {
            for (std::size_t j = i + 1; j < sg.nodes.size(); ++j) {
                if (intersection_size(sg.nodes[i], sg.nodes[j]) != k - 1) continue;
                VertexSet common = sg.nodes[i].intersect(sg.nodes[j]);
                if (!is_connected_induced(g, common, scratch)) continue;
                sg.adjacency[i].push_back(static_cast<int>(j));
                sg.adjacency[j].push_back(static_cast<int>(i));
            }
        }
    }
    return sg;
}

ReachabilityReport check_reachability(const Supergraph& sg, int n, int k) {
    if (sg.nodes.empty()) {
        throw std::invalid_argument("check_reachability: the solution family is empty");
    }
    ReachabilityReport report;
    report.n = n;
    report.k = k;
    report.node_count = sg.node_count();
    report.edge_count = sg.edge_count();
    report.edge_relation_symmetric = sg.symmetric();
    report.hop_bound = n - k;

    const std::size_t count = sg.nodes.size();
    std::vector<int> dist(count);
    std::vector<std::size_t> queue(count);
    bool connected = true;
    int diameter = 0;
    for (std::size_t src = 0; src < count; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        queue[0] = src;
        std::size_t head = 0;
        std::size_t tail = 1;
        std::size_t reached = 1;
        while (head < tail) {
            std::size_t u = queue[head++];
            for (int w : sg.adjacency[u]) {
                auto wu = static_cast<std::size_t>(w);
                if (dist[wu] < 0) {
                    dist[wu] = dist[u] + 1;
                    diameter = std::max(diameter, dist[wu]);
                    queue[tail++] = wu;
                    ++reached;
                }
            }
        }
        if (reached != count) connected = false;
    }
    report.supergraph_connected = connected;
    report.diameter = diameter;  // over reachable pairs when disconnected
    report.pass = connected && diameter <= report.hop_bound;
    return report;
}

std::string ReachabilityReport::to_text() const {
    std::ostringstream out;
    out << "supergraph of connected " << k << "-sets (host graph: n=" << n << ")\n";
    out << "  nodes: " << node_count << ", edges: " << edge_count << "\n";
    out << "  edge relation symmetric: " << (edge_relation_symmetric ? "yes" : "no")
        << " (strong connectivity checked as undirected connectivity)\n";
    out << "  connected: " << (supergraph_connected ? "yes" : "no") << "\n";
    out << "  diameter: " << diameter << " hops (bound n-k = " << hop_bound << ")\n";
    out << "  result: " << (pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string ReachabilityReport::to_kv() const {
    std::ostringstream out;
    out << "n=" << n << '\n';
    out << "k=" << k << '\n';
    out << "nodes=" << node_count << '\n';
    out << "edges=" << edge_count << '\n';
    out << "symmetric=" << (edge_relation_symmetric ? "true" : "false") << '\n';
    out << "connected=" << (supergraph_connected ? "true" : "false") << '\n';
    out << "diameter=" << diameter << '\n';
    out << "hop_bound=" << hop_bound << '\n';
    out << "pass=" << (pass ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace cisenum
