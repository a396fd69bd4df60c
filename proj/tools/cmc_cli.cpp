/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
// Command-line front end. Talks to the library only through cmc.h; the
// process exit code is the library status (0 ok, 1 invalid input, 2 size
// guard, 3 internal invariant violation).

#include "cmc/cmc.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Failure {
    cmc_status status;
};

void check(cmc_status s)
{
    if (s != CMC_OK) {
        std::cerr << "error: " << cmc_last_error() << '\n';
        throw Failure{s};
    }
}

[[noreturn]] void usage_error(const std::string& message)
{
    std::cerr << "error: " << message << '\n';
    throw Failure{CMC_INVALID_INPUT};
}

std::string take(char* s)
{
    std::string out = s ? s : "";
    cmc_string_free(s);
    return out;
}

std::string read_text(const std::string& path)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        usage_error("cannot open '" + path + "'");
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        usage_error("cannot write '" + path + "'");
}

using GraphPtr = std::unique_ptr<cmc_graph, decltype(&cmc_graph_free)>;
using SolutionPtr = std::unique_ptr<cmc_solution, decltype(&cmc_solution_free)>;

GraphPtr load_graph(const std::string& path)
{
    cmc_graph* g = nullptr;
    if (path == "-")
        check(cmc_graph_parse(read_text(path).c_str(), &g));
    else
        check(cmc_graph_read_file(path.c_str(), &g));
    return GraphPtr(g, cmc_graph_free);
}

void print_solution(const std::string& algorithm, cmc_solution* raw, const std::string& format,
                    const std::string& report)
{
    SolutionPtr s(raw, cmc_solution_free);
    std::vector<std::uint64_t> labels(cmc_solution_size(s.get()));
    cmc_solution_labels(s.get(), labels.data(), labels.size());
    char* cut_raw = nullptr;
    check(cmc_solution_cut(s.get(), &cut_raw));
    std::string cut = take(cut_raw);
    bool connected = cmc_solution_connected(s.get()) != 0;

    if (format == "json") {
        nlohmann::json j{{"algorithm", algorithm}, {"cut", cut}, {"size", labels.size()},
                         {"connected", connected}, {"vertices", labels}};
        if (!report.empty())
            j["report"] = nlohmann::json::parse(report);
        std::cout << j.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "algorithm,cut,size,connected,vertices\n" << algorithm << ',' << cut << ',' << labels.size()
                  << ',' << (connected ? 1 : 0) << ',';
        for (std::size_t i = 0; i < labels.size(); ++i)
            std::cout << (i ? " " : "") << labels[i];
        std::cout << '\n';
    } else {
        std::cout << "algorithm " << algorithm << "\ncut " << cut << "\nsize " << labels.size() << "\nconnected "
                  << (connected ? "yes" : "no") << "\nvertices";
        for (auto v : labels)
            std::cout << ' ' << v;
        std::cout << '\n';
        if (!report.empty())
            std::cout << report << '\n';
    }
}

const char* opt_cstr(const std::string& s)
{
    return s.empty() ? nullptr : s.c_str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Connected maximum cut solvers and instance tools"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(cmc_version()));

    std::string format = "plain";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
    };

    // solve
    std::string graph_path, algo = "bcmc", epsilon;
    std::uint64_t seed = 0;
    std::size_t trials = 1000;
    auto* solve = app.add_subcommand("solve", "Approximate connected maximum cut");
    solve->add_option("graph", graph_path, "Graph file or - for stdin")->required();
    solve->add_option("--algo", algo, "bcmc, wcmc or randomhalf")
        ->check(CLI::IsMember({"bcmc", "wcmc", "randomhalf"}));
    solve->add_option("--epsilon", epsilon, "Weight class parameter for wcmc (default 1)");
    solve->add_option("--trials", trials, "Samples for randomhalf");
    solve->add_option("--seed", seed, "Random seed");
    add_format(solve);

    // exact
    std::string method = "tw", td_path, write_td_path;
    bool force = false;
    auto* exact = app.add_subcommand("exact", "Exact optimum");
    exact->add_option("graph", graph_path, "Graph file or - for stdin")->required();
    exact->add_option("--method", method, "bf (exhaustive) or tw (tree decomposition)")
        ->check(CLI::IsMember({"bf", "tw"}));
    exact->add_option("--td", td_path, "PACE .td decomposition to use with --method tw");
    exact->add_option("--write-td", write_td_path, "Write the decomposition built for the graph");
    exact->add_flag("--force", force, "Allow exhaustive search up to 64 vertices");
    add_format(exact);

    // ptas
    std::string ptas_eps = "1/2";
    auto* ptas = app.add_subcommand("ptas", "Planar approximation scheme (needs rot lines)");
    ptas->add_option("graph", graph_path, "Graph file or - for stdin")->required();
    ptas->add_option("--epsilon", ptas_eps, "Accuracy in (0,1]; larger values are clamped to 1");
    add_format(ptas);

    // reduce-sat
    std::string pmsat_path, out_path, sidecar_path;
    auto* reduce = app.add_subcommand("reduce-sat", "Build the planar gadget of a PM-3SAT formula");
    reduce->add_option("pmsat", pmsat_path, "PM-3SAT file or - for stdin")->required();
    reduce->add_option("-o,--out", out_path, "Gadget graph file (default stdout)");
    reduce->add_option("--sidecar", sidecar_path, "JSON sidecar with K, threshold and roles");

    // gen
    std::string family;
    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("family", family, "Family spec, e.g. grid(3,3) or gnp(6,1/2)");
    gen->add_option("--seed", seed, "Random seed");
    gen->add_option("-o,--out", out_path, "Output file (default stdout)");
    bool list_families = false;
    gen->add_flag("--list", list_families, "List the generator families");

    // bench
    std::string suite_path, bench_format = "csv";
    auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
    bench->add_option("suite", suite_path, "Suite JSON file or - for stdin")->required();
    bench->add_option("--format", bench_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    bench->add_option("-o,--out", out_path, "Output file (default stdout)");

    // validate
    auto* validate = app.add_subcommand("validate", "Check decompositions, colorings and formulas");
    validate->require_subcommand(1);
    auto* v_td = validate->add_subcommand("td", "Tree decomposition against a graph");
    v_td->add_option("graph", graph_path)->required();
    v_td->add_option("td", td_path)->required();
    std::size_t k = 3;
    auto* v_col = validate->add_subcommand("coloring", "Radial edge coloring of an embedded graph");
    v_col->add_option("graph", graph_path)->required();
    v_col->add_option("-k", k, "Number of classes (at least 2)");
    auto* v_sat = validate->add_subcommand("pmsat", "Monotone laminar PM-3SAT formula");
    v_sat->add_option("pmsat", pmsat_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : CMC_INVALID_INPUT;
    }

    try {
        if (*solve) {
            auto g = load_graph(graph_path);
            cmc_solution* s = nullptr;
            if (algo == "bcmc")
                check(cmc_solve_bcmc(g.get(), seed, &s));
            else if (algo == "wcmc")
                check(cmc_solve_wcmc(g.get(), opt_cstr(epsilon), seed, &s));
            else
                check(cmc_solve_random_half(g.get(), trials, seed, &s));
            print_solution(algo, s, format, "");
        } else if (*exact) {
            auto g = load_graph(graph_path);
            if (!write_td_path.empty()) {
                char* td = nullptr;
                check(cmc_decompose(g.get(), &td));
                write_text(write_td_path, take(td));
            }
            cmc_solution* s = nullptr;
            std::string report;
            if (method == "bf") {
                if (!td_path.empty())
                    usage_error("--td only applies to --method tw");
                check(cmc_solve_brute_force(g.get(), force ? 1 : 0, &s));
            } else {
                std::string td_text = td_path.empty() ? std::string() : read_text(td_path);
                char* rep = nullptr;
                check(cmc_solve_treewidth(g.get(), td_path.empty() ? nullptr : td_text.c_str(), &s, &rep));
                report = take(rep);
            }
            print_solution(method, s, format, report);
        } else if (*ptas) {
            auto g = load_graph(graph_path);
            cmc_solution* s = nullptr;
            char* rep = nullptr;
            check(cmc_solve_ptas(g.get(), ptas_eps.c_str(), &s, &rep));
            print_solution("ptas", s, format, take(rep));
        } else if (*reduce) {
            auto text = read_text(pmsat_path);
            char* graph_text = nullptr;
            char* sidecar = nullptr;
            check(cmc_reduce_sat(text.c_str(), &graph_text, sidecar_path.empty() ? nullptr : &sidecar));
            write_text(out_path, take(graph_text));
            if (!sidecar_path.empty())
                write_text(sidecar_path, take(sidecar));
        } else if (*gen) {
            if (list_families) {
                char* names = nullptr;
                check(cmc_generator_families(&names));
                std::cout << take(names);
            } else {
                if (family.empty())
                    usage_error("gen needs a family spec or --list");
                cmc_graph* raw = nullptr;
                check(cmc_graph_generate(family.c_str(), seed, &raw));
                GraphPtr g(raw, cmc_graph_free);
                char* text = nullptr;
                check(cmc_graph_write(g.get(), &text));
                write_text(out_path, take(text));
            }
        } else if (*bench) {
            auto suite = read_text(suite_path);
            char* out = nullptr;
            check(cmc_bench(suite.c_str(), bench_format.c_str(), &out));
            write_text(out_path, take(out));
        } else if (*v_td) {
            auto g = load_graph(graph_path);
            auto td = read_text(td_path);
            char* rep = nullptr;
            check(cmc_validate_td(g.get(), td.c_str(), &rep));
            auto report = take(rep);
            std::cout << report << '\n';
            return nlohmann::json::parse(report)["valid"].get<bool>() ? 0 : CMC_INVALID_INPUT;
        } else if (*v_col) {
            auto g = load_graph(graph_path);
            char* rep = nullptr;
            check(cmc_validate_coloring(g.get(), k, &rep));
            auto report = take(rep);
            std::cout << report << '\n';
            return nlohmann::json::parse(report)["valid"].get<bool>() ? 0 : CMC_INVALID_INPUT;
        } else if (*v_sat) {
            auto text = read_text(pmsat_path);
            char* rep = nullptr;
            check(cmc_validate_pmsat(text.c_str(), &rep));
            auto report = take(rep);
            std::cout << report << '\n';
            return nlohmann::json::parse(report)["valid"].get<bool>() ? 0 : CMC_INVALID_INPUT;
        }
    } catch (const Failure& f) {
        return static_cast<int>(f.status);
    }
    return 0;
}
