#ifndef CISENUM_ORACLE_HPP
#define CISENUM_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "cisenum/graph.hpp"

namespace cisenum {

/// Largest vertex count the brute-force oracle accepts by default.
inline constexpr int kDefaultOracleVertexCap = 20;

/// Ground truth by exhaustive iteration: every k-subset of V, tested for
/// induced connectivity with its own traversal. Shares no logic with the
/// reverse-search code paths. Output is lexicographically sorted.
/// Throws OracleCapError when the graph has more than `max_vertices`
/// vertices.
std::vector<VertexSet> oracle_bruteforce(const Graph& g, int k,
                                         int max_vertices = kDefaultOracleVertexCap);

/// The published ceiling n*(e*delta)^k / ((delta-1)*k) on the number of
/// connected induced k-subgraphs, valid for delta >= 2. The formula is
/// singular below that; throws std::domain_error, since the count is exact
/// there (n for k=1, m for k=2, 0 otherwise).
double count_upper_bound(std::int64_t n, int delta, int k);

/// Ceiling usable on any graph: the bound formula when delta >= 2, the exact
/// small-degree count otherwise.
double solution_count_limit(const Graph& g, int k);

}  // namespace cisenum

#endif  // CISENUM_ORACLE_HPP
