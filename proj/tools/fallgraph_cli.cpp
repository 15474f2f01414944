// Command-line surface for the fall-coloring library: graph generation,
// the constructive solvers, verification, brute-force oracles, product
// colorings, and exhaustive theorem sweeps.
//
// Exit codes: 0 success/verified, 1 verified-false, 2 input error,
// 3 resource cap, 4 proof violation. stdout carries exactly one
// machine-readable artifact; prose goes to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fallgraph/errors.hpp"
#include "fallgraph/generate.hpp"
#include "fallgraph/io.hpp"
#include "fallgraph/oracle.hpp"
#include "fallgraph/products.hpp"
#include "fallgraph/solvers.hpp"
#include "fallgraph/sweep.hpp"

namespace {

using namespace fallgraph;

long node_cap_from_env() {
    const char* raw = std::getenv("FALLGRAPH_NODE_CAP");
    if (raw == nullptr)
        return kDefaultNodeCap;
    try {
        size_t used = 0;
        long cap = std::stol(raw, &used);
        if (used == std::string(raw).size() && cap > 0)
            return cap;
    } catch (const std::logic_error&) {
    }
    throw InputError("FALLGRAPH_NODE_CAP must be a positive integer");
}

Graph read_graph(const std::string& path) {
    if (path == "-")
        return parse_graph(std::cin);
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open graph file: " + path);
    return parse_graph(in);
}

Coloring read_coloring(const std::string& path) {
    if (path == "-")
        return parse_coloring(std::cin);
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open coloring file: " + path);
    return parse_coloring(in);
}

struct GenOptions {
    std::string family;
    int n = 0;
    int clique = 0;
    int tail = 0;
    double p = 0.0;
    std::optional<std::uint64_t> seed;
};

int cmd_gen(const GenOptions& opt) {
    auto family = family_from_name(opt.family);
    if (!family)
        throw InputError("BAD_PARAMS: unknown family '" + opt.family + "'");
    GenParams params;
    params.n = opt.n;
    params.clique = opt.clique;
    params.tail = opt.tail;
    params.edge_probability = opt.p;
    params.seed = opt.seed;
    std::cout << serialize_graph(generate(*family, params));
    return 0;
}

struct SolveOptions {
    std::string algorithm;
    std::optional<int> k;
    std::string input = "-";
};

int cmd_solve(const SolveOptions& opt) {
    Graph g = read_graph(opt.input);
    std::ostringstream out;
    if (opt.algorithm == "thm1") {
        if (opt.k && *opt.k != 3)
            throw InputError("thm1 always uses k=3");
        auto [c, trace] = distance2_fall_3coloring(g, node_cap_from_env());
        out << "# solve algorithm=thm1 k=3 d=2 verified=1 steps=" << trace.steps.size() << "\n"
            << serialize_coloring(c);
    } else if (opt.algorithm == "thm2") {
        if (!opt.k)
            throw InputError("thm2 requires --k");
        Coloring c = tree_k_coloring(g, *opt.k);
        out << "# solve algorithm=thm2 k=" << *opt.k << " d=" << *opt.k - 1 << " verified=1\n"
            << serialize_coloring(c);
    } else if (opt.algorithm == "thm3") {
        if (opt.k && *opt.k != 3)
            throw InputError("thm3 always uses k=3");
        Coloring c = partial_3coloring_distance3(g);
        out << "# solve algorithm=thm3 k=3 d=3 verified=1\n" << serialize_coloring(c);
    } else {
        throw InputError("unknown algorithm '" + opt.algorithm + "' (expected thm1|thm2|thm3)");
    }
    std::cout << out.str();
    return 0;
}

struct VerifyOptions {
    int d = 0;
    bool partial = false;
    std::string graph_path;
    std::string coloring_path;
};

int cmd_verify(const VerifyOptions& opt) {
    Graph g = read_graph(opt.graph_path);
    Coloring c = read_coloring(opt.coloring_path);
    if (c.size() != g.order())
        throw InputError("SIZE_MISMATCH: coloring does not fit the graph");
    if (!opt.partial && !c.total())
        throw InputError("coloring is partial; pass --partial to verify it");

    std::ostringstream out;
    bool proper = true;
    for (const auto& [u, v] : g.edges())
        if (c.assigned(u) && c.assigned(v) && c.assignment[u] == c.assignment[v]) {
            out << "improper " << u << ' ' << v << '\n';
            proper = false;
        }
    auto rep = goodness_partial(g, c, opt.d);
    for (int v : rep.bad_vertices) {
        out << "bad " << v << " missing";
        for (int color : rep.missing[v])
            out << ' ' << color;
        out << '\n';
    }
    bool fall = proper && rep.bad_count == 0;
    out << "fall=" << (fall ? 1 : 0) << " proper=" << (proper ? 1 : 0)
        << " bad_count=" << rep.bad_count << " d=" << opt.d << '\n';
    std::cout << out.str();
    return fall ? 0 : 1;
}

struct OracleExistsOptions {
    int k = 0;
    int d = 0;
    std::string input = "-";
};

int cmd_oracle_exists(const OracleExistsOptions& opt) {
    Graph g = read_graph(opt.input);
    auto result = exists_distance_fall(g, opt.k, opt.d, node_cap_from_env());
    if (result.kind == OracleKind::not_exists) {
        std::cout << "NOT_EXISTS\n";
        std::cerr << "exhausted " << result.nodes_explored << " nodes\n";
        return 1;
    }
    std::cout << "# oracle exists k=" << opt.k << " d=" << opt.d
              << " result=EXISTS nodes=" << result.nodes_explored << '\n'
              << serialize_coloring(*result.witness_coloring);
    return 0;
}

struct OracleMinIddOptions {
    int d = 0;
    std::string input = "-";
};

int cmd_oracle_min_idd(const OracleMinIddOptions& opt) {
    Graph g = read_graph(opt.input);
    auto result = min_independent_distance_dominating(g, opt.d, node_cap_from_env());
    std::cout << "# oracle min-idd d=" << opt.d << " nodes=" << result.nodes_explored << '\n'
              << *result.value << '\n';
    bool first = true;
    for (int v : *result.witness_set) {
        if (!first)
            std::cout << ' ';
        std::cout << v;
        first = false;
    }
    std::cout << '\n';
    return 0;
}

struct ProductOptions {
    std::string g1, c1, g2, c2;
    std::optional<int> d;  // sum
    std::optional<int> dg; // pair
    std::optional<int> dh; // pair
    std::string graph_out;
    int size_cap = kDefaultSizeCap;
};

void write_graph_out(const std::string& path, const Graph& g) {
    if (path.empty())
        return;
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot open --graph-out file: " + path);
    out << serialize_graph(g);
}

int cmd_product_sum(const ProductOptions& opt) {
    Graph g = read_graph(opt.g1);
    Coloring fg = read_coloring(opt.c1);
    Graph h = read_graph(opt.g2);
    Coloring fh = read_coloring(opt.c2);
    auto [prod, col] = sum_product_coloring(g, fg, h, fh, opt.d, opt.size_cap);
    write_graph_out(opt.graph_out, prod);
    std::cout << "# product sum k=" << col.k << " h_order=" << h.order()
              << " vertex=g*h_order+h";
    if (opt.d)
        std::cout << " d=" << *opt.d << " verified=1";
    std::cout << '\n' << serialize_coloring(col);
    return 0;
}

int cmd_product_pair(const ProductOptions& opt) {
    if (opt.dg.has_value() != opt.dh.has_value())
        throw InputError("--dg and --dh must be given together");
    Graph g = read_graph(opt.g1);
    Coloring fg = read_coloring(opt.c1);
    Graph h = read_graph(opt.g2);
    Coloring fh = read_coloring(opt.c2);
    std::optional<std::pair<int, int>> distances;
    if (opt.dg)
        distances = std::pair{*opt.dg, *opt.dh};
    auto [prod, col] = pair_product_coloring(g, fg, h, fh, distances, opt.size_cap);
    write_graph_out(opt.graph_out, prod);
    std::cout << "# product pair kg=" << fg.k << " kh=" << fh.k << " k=" << col.k
              << " color=cg*kh+ch h_order=" << h.order() << " vertex=g*h_order+h";
    if (distances)
        std::cout << " d=" << distances->first + distances->second << " verified=1";
    std::cout << '\n' << serialize_coloring(col);
    return 0;
}

struct SweepOptions {
    std::string theorem;
    int max_n = 0;
};

int cmd_sweep(const SweepOptions& opt) {
    long cap = node_cap_from_env();
    SweepReport report;
    if (opt.theorem == "1")
        report = sweep_theorem1(opt.max_n, cap);
    else if (opt.theorem == "2")
        report = sweep_theorem2(opt.max_n);
    else if (opt.theorem == "3")
        report = sweep_theorem3(opt.max_n);
    else if (opt.theorem == "conjecture")
        report = sweep_conjecture(opt.max_n, cap);
    else
        throw InputError("unknown theorem '" + opt.theorem + "' (expected 1|2|3|conjecture)");
    for (const auto& line : report.failure_lines)
        std::cout << line << '\n';
    std::cout << report.summary_line() << '\n';
    return report.failed == 0 ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance-k fall colorings: solvers, oracles, and sweeps"};
    app.require_subcommand(1);

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "generate a named graph as an edge list");
    gen->add_option("--family", gen_opt.family,
                    "path|cycle|complete|star|petersen|path_complete|random_tree|"
                    "random_tripartite_connected")
        ->required();
    gen->add_option("--n", gen_opt.n, "vertex count");
    gen->add_option("--clique", gen_opt.clique, "clique size (path_complete)");
    gen->add_option("--tail", gen_opt.tail, "path length (path_complete)");
    gen->add_option("--p", gen_opt.p, "edge probability (random_tripartite_connected)");
    gen->add_option("--seed", gen_opt.seed, "seed (required for random families)");

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "run a constructive coloring algorithm");
    solve->add_option("--algorithm", solve_opt.algorithm, "thm1|thm2|thm3")->required();
    solve->add_option("--k", solve_opt.k, "palette size (thm2)");
    solve->add_option("input", solve_opt.input, "graph file or - for stdin");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "check a coloring for the distance-d fall property");
    verify->add_option("--d", verify_opt.d, "distance parameter")->required();
    verify->add_flag("--partial", verify_opt.partial, "allow uncolored vertices");
    verify->add_option("graph", verify_opt.graph_path, "graph file or -")->required();
    verify->add_option("coloring", verify_opt.coloring_path, "coloring file or -")->required();

    auto* oracle = app.add_subcommand("oracle", "exhaustive ground-truth searches");
    oracle->require_subcommand(1);
    OracleExistsOptions exists_opt;
    auto* oracle_exists = oracle->add_subcommand("exists", "search for a distance-d fall k-coloring");
    oracle_exists->add_option("--k", exists_opt.k, "palette size")->required();
    oracle_exists->add_option("--d", exists_opt.d, "distance parameter")->required();
    oracle_exists->add_option("input", exists_opt.input, "graph file or - for stdin");
    OracleMinIddOptions min_idd_opt;
    auto* oracle_min_idd =
        oracle->add_subcommand("min-idd", "minimum independent distance-d dominating set");
    oracle_min_idd->add_option("--d", min_idd_opt.d, "domination distance")->required();
    oracle_min_idd->add_option("input", min_idd_opt.input, "graph file or - for stdin");

    auto* product = app.add_subcommand("product", "cartesian product colorings");
    product->require_subcommand(1);
    ProductOptions sum_opt;
    auto* product_sum = product->add_subcommand("sum", "color (g,h) with fG(g)+fH(h) mod k");
    product_sum->add_option("g1", sum_opt.g1, "first graph")->required();
    product_sum->add_option("c1", sum_opt.c1, "first coloring")->required();
    product_sum->add_option("g2", sum_opt.g2, "second graph")->required();
    product_sum->add_option("c2", sum_opt.c2, "second coloring")->required();
    product_sum->add_option("--d", sum_opt.d, "verify the result is distance-d fall");
    product_sum->add_option("--graph-out", sum_opt.graph_out, "write the product graph here");
    product_sum->add_option("--size-cap", sum_opt.size_cap, "max product order");
    ProductOptions pair_opt;
    auto* product_pair =
        product->add_subcommand("pair", "color (g,h) with the flattened pair (fG(g),fH(h))");
    product_pair->add_option("g1", pair_opt.g1, "first graph")->required();
    product_pair->add_option("c1", pair_opt.c1, "first coloring")->required();
    product_pair->add_option("g2", pair_opt.g2, "second graph")->required();
    product_pair->add_option("c2", pair_opt.c2, "second coloring")->required();
    product_pair->add_option("--dg", pair_opt.dg, "fall distance of the first coloring");
    product_pair->add_option("--dh", pair_opt.dh, "fall distance of the second coloring");
    product_pair->add_option("--graph-out", pair_opt.graph_out, "write the product graph here");
    product_pair->add_option("--size-cap", pair_opt.size_cap, "max product order");

    SweepOptions sweep_opt;
    auto* sweep = app.add_subcommand("sweep", "exhaustive theorem checks over labeled instances");
    sweep->add_option("--theorem", sweep_opt.theorem, "1|2|3|conjecture")->required();
    sweep->add_option("--max-n", sweep_opt.max_n, "largest instance order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(gen_opt);
        if (solve->parsed())
            return cmd_solve(solve_opt);
        if (verify->parsed())
            return cmd_verify(verify_opt);
        if (oracle_exists->parsed())
            return cmd_oracle_exists(exists_opt);
        if (oracle_min_idd->parsed())
            return cmd_oracle_min_idd(min_idd_opt);
        if (product_sum->parsed())
            return cmd_product_sum(sum_opt);
        if (product_pair->parsed())
            return cmd_product_pair(pair_opt);
        if (sweep->parsed())
            return cmd_sweep(sweep_opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.kind()) {
        case ErrorKind::input: return 2;
        case ErrorKind::cap: return 3;
        case ErrorKind::proof_violation: return 4;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
