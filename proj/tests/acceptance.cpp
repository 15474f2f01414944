// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Exhaustive desk-scale checks of every theorem plus the CLI
// determinism contract.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "fallgraph/errors.hpp"
#include "fallgraph/generate.hpp"
#include "fallgraph/io.hpp"
#include "fallgraph/oracle.hpp"
#include "fallgraph/products.hpp"
#include "fallgraph/solvers.hpp"
#include "fallgraph/sweep.hpp"

using namespace fallgraph;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void criterion(const std::string& id, bool pass, const std::string& detail) {
    std::cout << id << ": " << (pass ? "PASS" : "FAIL") << " " << detail << std::endl;
    if (!pass)
        ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

long failures_matching(const SweepReport& report, bool class_reasons) {
    long total = 0;
    for (const auto& [reason, count] : report.failures_by_reason)
        if ((reason.rfind("class_", 0) == 0) == class_reasons)
            total += count;
    return total;
}

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_shell(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    CmdResult r;
    if (pipe == nullptr)
        return r;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// --- criteria -------------------------------------------------------------

SweepReport criterion1_and_6() {
    auto start = std::chrono::steady_clock::now();
    SweepReport report = sweep_theorem1(6);
    double elapsed = seconds_since(start);
    long theorem_failures = failures_matching(report, false);
    std::ostringstream detail;
    detail << "checked=" << report.checked << " failed=" << theorem_failures << " time=" << elapsed
           << "s";
    for (const auto& line : report.failure_lines)
        detail << "\n  " << line;
    criterion("C1 theorem-1 sweep (connected 3-colorable, n<=6)",
              theorem_failures == 0 && elapsed < 120.0, detail.str());
    return report;
}

void criterion2() {
    auto start = std::chrono::steady_clock::now();
    SweepReport report = sweep_theorem2(8);
    double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << report.summary_line() << " time=" << elapsed << "s";
    for (const auto& line : report.failure_lines)
        detail << "\n  " << line;
    criterion("C2 theorem-2 sweep (trees n<=8, all k)", report.failed == 0 && elapsed < 300.0,
              detail.str());
}

void criterion3() {
    SweepReport report = sweep_conjecture(7);
    std::ostringstream detail;
    detail << report.summary_line();
    for (const auto& line : report.failure_lines)
        detail << "\n  " << line;
    criterion("C3 tree domination bound (trees n<=7, oracle + witness)", report.failed == 0,
              detail.str());
}

void criterion4() {
    SweepReport report = sweep_theorem3(6);
    std::ostringstream detail;
    detail << report.summary_line();
    for (const auto& line : report.failure_lines)
        detail << "\n  " << line;
    criterion("C4 theorem-3 sweep (connected n<=6, partial 3-coloring)", report.failed == 0,
              detail.str());
}

void criterion5() {
    std::vector<std::string> problems;

    Graph c5 = make_cycle(5);
    if (exists_distance_fall(c5, 3, 1).kind != OracleKind::not_exists)
        problems.push_back("C5 k=3 d=1 should be NOT_EXISTS");
    if (exists_distance_fall(c5, 3, 2).kind != OracleKind::exists)
        problems.push_back("C5 k=3 d=2 should be EXISTS");

    if (exists_distance_fall(make_path_complete(4, 3), 4, 2).kind != OracleKind::not_exists)
        problems.push_back("path_complete(4,3) k=4 d=2 should be NOT_EXISTS");

    // Connected bipartite samples: the bipartition coloring is a fall
    // coloring at d=1.
    std::vector<Graph> bipartite;
    bipartite.push_back(Graph(2, {{0, 1}}));
    bipartite.push_back(make_path(5));
    bipartite.push_back(make_cycle(6));
    bipartite.push_back(make_star(6));
    bipartite.push_back(cartesian_product(Graph(2, {{0, 1}}), make_path(3)));
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        bipartite.push_back(random_tree(2 + static_cast<int>(seed), seed));
    {
        std::vector<std::pair<int, int>> edges; // K_{3,4}
        for (int u = 0; u < 3; ++u)
            for (int v = 3; v < 7; ++v)
                edges.emplace_back(u, v);
        bipartite.push_back(Graph(7, edges));
    }
    for (size_t i = 0; i < bipartite.size(); ++i) {
        auto c = find_proper_k_coloring(bipartite[i], 2);
        if (!c || !is_distance_fall(bipartite[i], *c, 1))
            problems.push_back("bipartite sample " + std::to_string(i) +
                               " bipartition coloring is not distance-1 fall");
    }

    std::ostringstream detail;
    detail << "fixtures=" << 3 + bipartite.size() << " failed=" << problems.size();
    for (const auto& p : problems)
        detail << "\n  " << p;
    criterion("C5 extremal fixtures (C5, path-complete, bipartite)", problems.empty(),
              detail.str());
}

void criterion6(const SweepReport& theorem1_report) {
    long class_failures = failures_matching(theorem1_report, true);
    std::ostringstream detail;
    detail << "checked=" << theorem1_report.checked << " failed=" << class_failures;
    criterion("C6 n/3 corollary (smallest class is an IDD set at d=2)", class_failures == 0,
              detail.str());
}

void criterion7() {
    long sum_failures = 0, pair_failures = 0;
    std::vector<std::string> archived;

    for (int t = 0; t < 200; ++t) {
        int ng = 4 + t % 7;
        int nh = 3 + (t / 7) % 6;
        Graph g = random_tripartite_connected(ng, 0.35, 10000 + t);
        Graph h = random_tripartite_connected(nh, 0.45, 20000 + t);
        try {
            auto [fg, trace] = distance2_fall_3coloring(g);
            auto fh = find_proper_k_coloring(h, 3);
            if (!fh)
                throw ProofViolation("tripartite graph reported not 3-colorable");
            auto [prod, col] = sum_product_coloring(g, fg, h, *fh, 2);
            if (!is_distance_fall(prod, col, 2))
                throw ProofViolation("sum product re-check failed");
        } catch (const Error& e) {
            ++sum_failures;
            if (archived.size() < 3)
                archived.push_back(std::string("sum trial ") + std::to_string(t) + ": " + e.what());
        }
    }

    for (int t = 0; t < 100; ++t) {
        int ng = 3 + t % 7;
        int nh = 2 + (t / 3) % 7;
        Graph g = random_tree(ng, 30000 + t);
        Graph h = random_tree(nh, 40000 + t);
        int kg = 2 + t % (ng - 1);
        int kh = 2 + (t / 2) % (nh - 1);
        try {
            Coloring fg = tree_k_coloring(g, kg);
            Coloring fh = tree_k_coloring(h, kh);
            auto [prod, col] = pair_product_coloring(g, fg, h, fh, std::pair{kg - 1, kh - 1});
            if (!is_distance_fall(prod, col, kg - 1 + kh - 1))
                throw ProofViolation("pair product re-check failed");
        } catch (const Error& e) {
            ++pair_failures;
            if (archived.size() < 3)
                archived.push_back(std::string("pair trial ") + std::to_string(t) + ": " +
                                   e.what());
        }
    }

    std::ostringstream detail;
    detail << "sum_trials=200 sum_failed=" << sum_failures << " pair_trials=100 pair_failed="
           << pair_failures;
    for (const auto& a : archived)
        detail << "\n  archived counterexample candidate: " << a;
    criterion("C7 product contracts (200 sum + 100 pair trials)",
              sum_failures == 0 && pair_failures == 0, detail.str());
}

void criterion8() {
    std::vector<std::string> problems;

    // parse(serialize(G)) identity on 1000 generated instances.
    long round_trips = 0;
    for (int i = 0; i < 1000; ++i) {
        Graph g;
        switch (i % 8) {
        case 0: g = make_path(1 + i % 17); break;
        case 1: g = make_cycle(3 + i % 17); break;
        case 2: g = make_complete(1 + i % 9); break;
        case 3: g = make_star(2 + i % 17); break;
        case 4: g = make_petersen(); break;
        case 5: g = make_path_complete(1 + i % 6, 1 + i % 9); break;
        case 6: g = random_tree(1 + i % 20, 1000 + i); break;
        default: g = random_tripartite_connected(1 + i % 15, 0.4, 2000 + i); break;
        }
        if (parse_graph_text(serialize_graph(g)) == g)
            ++round_trips;
        else if (problems.size() < 3)
            problems.push_back("round-trip mismatch at instance " + std::to_string(i));
    }
    if (round_trips != 1000)
        problems.push_back("round_trips=" + std::to_string(round_trips));

    // Every documented CLI example, run twice: identical bytes, exit codes as
    // documented.
    const std::string cli = FALLGRAPH_CLI_PATH;
    fs::path dir = fs::temp_directory_path() / "fallgraph_acceptance";
    fs::create_directories(dir);
    auto file = [&](const std::string& name, const std::string& content) {
        std::ofstream out(dir / name);
        out << content;
        return (dir / name).string();
    };
    std::string c5 = file("c5.graph", serialize_graph(make_cycle(5)));
    std::string p6 = file("p6.graph", serialize_graph(make_path(6)));
    std::string p7 = file("p7.graph", serialize_graph(make_path(7)));
    std::string k2 = file("k2.graph", serialize_graph(Graph(2, {{0, 1}})));
    std::string k4 = file("k4.graph", serialize_graph(make_complete(4)));
    std::string lolli = file("lolli.graph", serialize_graph(make_path_complete(4, 3)));
    std::string c5col = file("c5.col", serialize_coloring(Coloring(3, {0, 1, 0, 1, 2})));
    std::string k2col = file("k2.col", serialize_coloring(Coloring(2, {0, 0})));

    struct Example {
        std::string cmd;
        int expected_exit;
    };
    std::vector<Example> examples = {
        {cli + " gen --family cycle --n 5", 0},
        {cli + " gen --family path_complete --clique 4 --tail 3", 0},
        {cli + " gen --family random_tree --n 8 --seed 1", 0},
        {cli + " solve --algorithm thm1 " + c5, 0},
        {cli + " solve --algorithm thm2 --k 3 " + p6, 0},
        {cli + " solve --algorithm thm2 --k 9 " + p6, 2},
        {cli + " solve --algorithm thm3 " + k4, 0},
        {cli + " verify --d 2 " + c5 + " " + c5col, 0},
        {cli + " verify --d 1 " + c5 + " " + c5col, 1},
        {cli + " verify --d 1 " + k2 + " " + k2col, 1},
        {cli + " oracle exists --k 3 --d 1 " + c5, 1},
        {cli + " oracle exists --k 3 --d 2 " + c5, 0},
        {cli + " oracle exists --k 4 --d 2 " + lolli, 1},
        {cli + " oracle min-idd --d 2 " + p7, 0},
        {cli + " sweep --theorem 1 --max-n 5", 0},
        {cli + " sweep --theorem 2 --max-n 2", 0},
        {cli + " sweep --theorem conjecture --max-n 7", 0},
    };
    long checked_examples = 0;
    for (const auto& ex : examples) {
        CmdResult first = run_shell(ex.cmd);
        CmdResult second = run_shell(ex.cmd);
        ++checked_examples;
        if (first.exit_code != ex.expected_exit)
            problems.push_back("exit " + std::to_string(first.exit_code) + " (want " +
                               std::to_string(ex.expected_exit) + "): " + ex.cmd);
        if (first.out != second.out || first.exit_code != second.exit_code)
            problems.push_back("non-deterministic output: " + ex.cmd);
    }

    // Spot checks of documented payloads.
    if (run_shell(cli + " sweep --theorem 2 --max-n 2").out != "checked=1 failed=0\n")
        problems.push_back("sweep --theorem 2 --max-n 2 payload mismatch");
    if (run_shell(cli + " oracle exists --k 3 --d 1 " + c5).out != "NOT_EXISTS\n")
        problems.push_back("oracle exists payload mismatch");

    std::ostringstream detail;
    detail << "round_trips=" << round_trips << "/1000 cli_examples=" << checked_examples
           << " failed=" << problems.size();
    for (const auto& p : problems)
        detail << "\n  " << p;
    criterion("C8 determinism and round-trip", problems.empty(), detail.str());
}

} // namespace

int main() {
    std::cout << "fallgraph acceptance suite" << std::endl;
    SweepReport thm1 = criterion1_and_6();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6(thm1);
    criterion7();
    criterion8();
    std::cout << "SUMMARY: " << (8 - g_failures) << "/8 criteria passed" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
