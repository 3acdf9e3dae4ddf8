// Command-line front end: enumerate / verify / bench subcommands over
// edge-list files or generated recipe instances.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cisenum/bench.hpp"
#include "cisenum/enumerate.hpp"
#include "cisenum/errors.hpp"
#include "cisenum/graph.hpp"
#include "cisenum/oracle.hpp"
#include "cisenum/supergraph.hpp"

namespace {

// 0 success; 1 parse/validation error; 2 dictionary cap exceeded;
// 3 verification failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDictionaryCap = 2;
constexpr int kExitVerifyFailed = 3;

struct InputOptions {
    std::string input_path;  // "-" reads standard input
    std::string recipe;
};

struct LoadedGraph {
    cisenum::Graph graph;
    std::string id;
};

LoadedGraph load_graph(const InputOptions& in) {
    if (in.input_path.empty() == in.recipe.empty()) {
        throw cisenum::ValidationError("exactly one of --input or --recipe is required");
    }
    if (!in.recipe.empty()) {
        auto recipe = cisenum::GraphRecipe::parse(in.recipe);
        return {cisenum::generate_graph(recipe), recipe.to_string()};
    }
    if (in.input_path == "-") {
        return {cisenum::parse_edge_list(std::cin), "stdin"};
    }
    std::ifstream file(in.input_path);
    if (!file) {
        throw cisenum::ValidationError("cannot open input file '" + in.input_path + "'");
    }
    return {cisenum::parse_edge_list(file), in.input_path};
}

void print_solution(std::ostream& out, const cisenum::Graph& g, const cisenum::VertexSet& s,
                    bool flush) {
    std::string line;
    for (int i = 0; i < s.size(); ++i) {
        if (i > 0) line += ' ';
        line += std::to_string(g.label_of(s[i]));
    }
    line += '\n';
    out << line;
    if (flush) out.flush();
}

struct EnumerateArgs {
    InputOptions in;
    int k = 0;
    std::string algorithm = "irwd";
    bool count_only = false;
    std::size_t max_dict = 0;
    bool no_flush = false;
};

int run_enumerate(const EnumerateArgs& args) {
    if (args.k < 1) throw cisenum::ValidationError("--k must be >= 1");
    auto [graph, id] = load_graph(args.in);

    std::uint64_t count = 0;
    if (args.algorithm == "brute") {
        auto solutions = cisenum::oracle_bruteforce(graph, args.k);
        count = solutions.size();
        if (!args.count_only) {
            for (const auto& s : solutions) {
                print_solution(std::cout, graph, s, !args.no_flush);
            }
        }
    } else if (args.algorithm == "irwd" || args.algorithm == "rwd") {
        cisenum::EnumerationConfig config;
        config.max_dictionary_entries = args.max_dict;
        cisenum::SolutionSink sink;
        if (args.count_only) {
            sink = [](const cisenum::VertexSet&) {};
        } else {
            sink = [&graph, &args](const cisenum::VertexSet& s) {
                print_solution(std::cout, graph, s, !args.no_flush);
            };
        }
        count = args.algorithm == "irwd"
                    ? cisenum::enumerate_irwd(graph, args.k, sink, config)
                    : cisenum::enumerate_rwd(graph, args.k, sink, config);
    } else {
        throw cisenum::ValidationError("unknown algorithm '" + args.algorithm +
                                       "' (expected irwd, rwd or brute)");
    }

    if (args.count_only) {
        std::cout << count << '\n';
    } else {
        std::cerr << "count=" << count << '\n';
    }
    return kExitOk;
}

struct VerifyArgs {
    InputOptions in;
    int k = 0;
    std::string format = "text";
};

int run_verify(const VerifyArgs& args) {
    if (args.k < 2) {
        throw cisenum::ValidationError("--k must be >= 2: single-vertex solutions share no "
                                       "vertices, so there is no exchange walk to verify");
    }
    auto [graph, id] = load_graph(args.in);
    if (args.k > graph.vertex_count()) {
        throw cisenum::ValidationError("--k exceeds the vertex count " +
                                       std::to_string(graph.vertex_count()));
    }
    if (graph.connected_components().size() != 1) {
        throw cisenum::ValidationError("verification requires a connected input graph");
    }
    auto sg = cisenum::build_supergraph(graph, args.k);
    auto report = cisenum::check_reachability(sg, graph.vertex_count(), args.k);
    std::cout << (args.format == "kv" ? report.to_kv() : report.to_text());
    return report.pass ? kExitOk : kExitVerifyFailed;
}

struct BenchArgs {
    InputOptions in;
    int k = 0;
    std::string algorithm = "irwd";
    int repeat = 1;
    std::uint64_t max_solutions = 0;
    std::size_t max_dict = 0;
};

int run_bench(const BenchArgs& args) {
    if (args.k < 1) throw cisenum::ValidationError("--k must be >= 1");
    if (args.repeat < 1) throw cisenum::ValidationError("--repeat must be >= 1");
    auto [graph, id] = load_graph(args.in);
    cisenum::BenchmarkOptions options;
    options.max_solutions = args.max_solutions;
    options.max_dictionary_entries = args.max_dict;
    std::cout << cisenum::delay_report_csv_header() << '\n';
    for (int run = 0; run < args.repeat; ++run) {
        auto report = cisenum::run_benchmark(graph, args.k, args.algorithm, id, options);
        std::cout << cisenum::to_csv_row(report) << '\n';
    }
    return kExitOk;
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
    auto* input = cmd->add_option("--input,-i", in.input_path,
                                  "edge-list file, or '-' for standard input");
    auto* recipe = cmd->add_option("--recipe,-r", in.recipe,
                                   "generated instance, 'family:n' or 'gnp:n:p:seed'");
    input->excludes(recipe);
    recipe->excludes(input);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumeration of connected induced subgraphs of a fixed order"};
    app.require_subcommand(1);

    EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand("enumerate",
                                         "stream every connected induced k-subgraph");
    add_input_options(enumerate, enum_args.in);
    enumerate->add_option("--k,-k", enum_args.k, "subgraph order")->required();
    enumerate->add_option("--algorithm,-a", enum_args.algorithm, "irwd, rwd or brute");
    enumerate->add_flag("--count-only", enum_args.count_only,
                        "print only the solution count to standard output");
    enumerate->add_option("--max-dict", enum_args.max_dict,
                          "abort when the solution dictionary exceeds this many entries");
    enumerate->add_flag("--no-flush", enum_args.no_flush,
                        "batch output instead of flushing per solution");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand(
        "verify", "materialize the solution supergraph and check its connectivity and diameter");
    add_input_options(verify, verify_args.in);
    verify->add_option("--k,-k", verify_args.k, "subgraph order")->required();
    verify->add_option("--format", verify_args.format, "report format: text or kv")
        ->check(CLI::IsMember({"text", "kv"}));

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "measure per-solution delay, CSV to stdout");
    add_input_options(bench, bench_args.in);
    bench->add_option("--k,-k", bench_args.k, "subgraph order")->required();
    bench->add_option("--algorithm,-a", bench_args.algorithm, "irwd, rwd or brute");
    bench->add_option("--repeat", bench_args.repeat, "number of runs (one CSV row each)");
    bench->add_option("--max-solutions", bench_args.max_solutions,
                      "stop each run after this many solutions (0 = all)");
    bench->add_option("--max-dict", bench_args.max_dict,
                      "abort when the solution dictionary exceeds this many entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(enum_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (bench->parsed()) return run_bench(bench_args);
    } catch (const cisenum::DictionaryCapError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDictionaryCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
