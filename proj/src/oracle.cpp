#include "cisenum/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cisenum/errors.hpp"

namespace cisenum {

namespace {

// Connectivity of G[subset] by plain traversal over the sorted subset,
// membership by binary search. Kept local so the oracle stays independent of
// the enumeration machinery.
bool subset_connected(const Graph& g, const std::vector<VertexId>& subset) {
    const std::size_t size = subset.size();
    std::vector<char> visited(size, 0);
    std::vector<VertexId> stack;
    stack.push_back(subset[0]);
    visited[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(u)) {
            auto it = std::lower_bound(subset.begin(), subset.end(), w);
            if (it == subset.end() || *it != w) continue;
            auto pos = static_cast<std::size_t>(it - subset.begin());
            if (!visited[pos]) {
                visited[pos] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == size;
}

}  // namespace

std::vector<VertexSet> oracle_bruteforce(const Graph& g, int k, int max_vertices) {
    if (k < 1) throw std::invalid_argument("subgraph order k must be >= 1");
    const int n = g.vertex_count();
    if (n > max_vertices) {
        throw OracleCapError("brute-force oracle refuses n=" + std::to_string(n) +
                             " (cap is " + std::to_string(max_vertices) + " vertices)");
    }
    std::vector<VertexSet> out;
    if (k > n) return out;

    // lexicographic combination walk
    std::vector<VertexId> comb(static_cast<std::size_t>(k));
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        if (subset_connected(g, comb)) out.push_back(VertexSet(comb));
        int i = k - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

double count_upper_bound(std::int64_t n, int delta, int k) {
    if (k < 1) throw std::invalid_argument("subgraph order k must be >= 1");
    if (delta < 2) {
        throw std::domain_error("count_upper_bound: max degree " + std::to_string(delta) +
                                " is below 2; the count is exact in that case");
    }
    const double d = static_cast<double>(delta);
    return static_cast<double>(n) * std::pow(std::numbers::e * d, k) / ((d - 1.0) * k);
}

double solution_count_limit(const Graph& g, int k) {
    if (g.max_degree() >= 2) return count_upper_bound(g.vertex_count(), g.max_degree(), k);
    if (k == 1) return static_cast<double>(g.vertex_count());
    if (k == 2) return static_cast<double>(g.edge_count());
    return 0.0;
}

}  // namespace cisenum
