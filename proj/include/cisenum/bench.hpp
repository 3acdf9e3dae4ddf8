#ifndef CISENUM_BENCH_HPP
#define CISENUM_BENCH_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

#include "cisenum/graph.hpp"

namespace cisenum {

/// SplitMix64 (Steele/Lea/Flood) with the standard constants. The state is
/// initialized to the seed verbatim, so seeded instances reproduce
/// bit-for-bit in any implementation of the same recurrence.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1) from the top 53 bits.
    double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

enum class GraphFamily { path, cycle, complete, star, gnp };

std::string_view family_name(GraphFamily family);

/// Deterministic description of a benchmark instance.
/// Text form: "family:n" or "gnp:n:p:seed".
struct GraphRecipe {
    GraphFamily family = GraphFamily::path;
    int n = 0;
    double p = 0.0;           ///< edge probability, gnp only
    std::uint64_t seed = 0;   ///< gnp only

    static GraphRecipe parse(std::string_view text);
    std::string to_string() const;
};

/// Builds the described graph. Star graphs put the center at vertex 0. The
/// gnp family draws one SplitMix64 unit variate per unordered pair, pairs
/// ordered (0,1), (0,2), ..., (0,n-1), (1,2), ...; the edge exists when the
/// variate is < p.
Graph generate_graph(const GraphRecipe& recipe);

/// One benchmark run: per-emission delay statistics plus the per-phase cost
/// counters of the enumeration.
struct DelayReport {
    std::string algorithm;
    std::string graph_id;
    int n = 0;
    std::int64_t m = 0;
    int delta = 0;
    int k = 0;
    std::uint64_t total_solutions = 0;
    /// The run stopped at the configured solution cap; more solutions may
    /// exist.
    bool truncated = false;
    std::chrono::nanoseconds total_time{0};
    std::chrono::nanoseconds max_delay{0};
    std::chrono::nanoseconds p50_delay{0};
    std::chrono::nanoseconds p99_delay{0};
    std::uint64_t dict_lookups = 0;
    std::chrono::nanoseconds articulation_time{0};
    std::chrono::nanoseconds common_neighborhood_time{0};
};

struct BenchmarkOptions {
    std::uint64_t max_solutions = 0;         ///< 0 = run to completion
    std::size_t max_dictionary_entries = 0;  ///< 0 = unlimited
};

/// Runs `algorithm` ("irwd", "rwd" or "brute") on g and measures the gaps
/// between consecutive solution emissions with a monotonic clock. The first
/// gap runs from enumeration start to the first emission, the last from the
/// final emission to enumeration end. Throws ValidationError for an unknown
/// algorithm name.
DelayReport run_benchmark(const Graph& g, int k, std::string_view algorithm,
                          std::string_view graph_id = {},
                          const BenchmarkOptions& options = {});

/// CSV serialization, RFC 4180 quoting, one report per row.
std::string delay_report_csv_header();
std::string to_csv_row(const DelayReport& report);
/// "key=value" lines, same fields as the CSV columns.
std::string to_kv(const DelayReport& report);

}  // namespace cisenum

#endif  // CISENUM_BENCH_HPP
