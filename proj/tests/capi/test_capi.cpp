/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
// Exercises the shared library through cmc.h only.

#include "cmc/cmc.h"

#include <doctest.h>
#include <json.hpp>

#include <string>
#include <vector>

namespace {

std::string take(char* s)
{
    std::string out = s ? s : "";
    cmc_string_free(s);
    return out;
}

struct Graph {
    cmc_graph* g = nullptr;
    ~Graph() { cmc_graph_free(g); }
};

struct Sol {
    cmc_solution* s = nullptr;
    ~Sol() { cmc_solution_free(s); }

    std::string cut() const
    {
        char* text = nullptr;
        REQUIRE(cmc_solution_cut(s, &text) == CMC_OK);
        return take(text);
    }
    std::vector<std::uint64_t> labels() const
    {
        std::vector<std::uint64_t> out(cmc_solution_size(s));
        CHECK(cmc_solution_labels(s, out.data(), out.size()) == out.size());
        return out;
    }
};

// Path 10 - 20 - 30 - 40 with a heavy middle edge.
const char* kPath = "p cmc 4 3\ne 10 20 1\ne 20 30 5/2\ne 30 40 1\n";

} // namespace

TEST_CASE("parse and solve exactly")
{
    Graph g;
    REQUIRE(cmc_graph_parse(kPath, &g.g) == CMC_OK);
    CHECK(cmc_graph_vertex_count(g.g) == 4);
    CHECK(cmc_graph_edge_count(g.g) == 3);
    CHECK(cmc_graph_has_embedding(g.g) == 0);
    Sol s;
    REQUIRE(cmc_solve_brute_force(g.g, 0, &s.s) == CMC_OK);
    CHECK(s.cut() == "3.5");
    CHECK(cmc_solution_cut_double(s.s) == doctest::Approx(3.5));
    CHECK(cmc_solution_connected(s.s) == 1);
    CHECK(s.labels() == std::vector<std::uint64_t>{20});
    CHECK(cmc_solution_verify(g.g, s.s) == CMC_OK);
}

TEST_CASE("every solver is reachable")
{
    Graph g;
    REQUIRE(cmc_graph_generate("grid(3,3)", 0, &g.g) == CMC_OK);
    CHECK(cmc_graph_has_embedding(g.g) == 1);
    Sol bf, tw, bcmc, wcmc, half, ptas;
    REQUIRE(cmc_solve_brute_force(g.g, 0, &bf.s) == CMC_OK);
    char* report = nullptr;
    REQUIRE(cmc_solve_treewidth(g.g, nullptr, &tw.s, &report) == CMC_OK);
    CHECK(nlohmann::json::parse(take(report))["width"] == 3);
    REQUIRE(cmc_solve_bcmc(g.g, 0, &bcmc.s) == CMC_OK);
    REQUIRE(cmc_solve_wcmc(g.g, "1/2", 0, &wcmc.s) == CMC_OK);
    REQUIRE(cmc_solve_random_half(g.g, 100, 7, &half.s) == CMC_OK);
    REQUIRE(cmc_solve_ptas(g.g, nullptr, &ptas.s, &report) == CMC_OK);
    auto rep = nlohmann::json::parse(take(report));
    CHECK(rep["k"] == 6);
    CHECK(bf.cut() == "8");
    CHECK(tw.cut() == "8");
    for (const Sol* s : {&bcmc, &wcmc, &half, &ptas}) {
        CHECK(cmc_solution_verify(g.g, s->s) == CMC_OK);
        CHECK(cmc_solution_cut_double(s->s) <= 8);
    }
}

TEST_CASE("status codes")
{
    Graph g;
    CHECK(cmc_graph_parse("p cmc 2 1\ne 1 1\n", &g.g) == CMC_INVALID_INPUT);
    CHECK(std::string(cmc_last_error()).size() > 0);
    CHECK(cmc_graph_parse(nullptr, &g.g) == CMC_INVALID_INPUT);
    CHECK(cmc_graph_generate("nope(1)", 0, &g.g) == CMC_INVALID_INPUT);
    CHECK(cmc_graph_read_file("/definitely/not/here", &g.g) == CMC_INVALID_INPUT);

    Graph big;
    REQUIRE(cmc_graph_generate("clique(30)", 0, &big.g) == CMC_OK);
    Sol s;
    CHECK(cmc_solve_brute_force(big.g, 0, &s.s) == CMC_SIZE_GUARD);
    CHECK(cmc_solve_treewidth(big.g, nullptr, &s.s, nullptr) == CMC_SIZE_GUARD);
    CHECK(cmc_solve_ptas(big.g, "1", &s.s, nullptr) == CMC_INVALID_INPUT);
    CHECK(s.s == nullptr);

    Graph small;
    REQUIRE(cmc_graph_parse(kPath, &small.g) == CMC_OK);
    Sol other;
    REQUIRE(cmc_solve_bcmc(big.g, 0, &other.s) == CMC_OK);
    CHECK(cmc_solution_verify(small.g, other.s) == CMC_INVALID_INPUT);
    CHECK(cmc_solve_wcmc(small.g, "0", 0, &s.s) == CMC_INVALID_INPUT);
}

TEST_CASE("graph round trip keeps labels and rotation")
{
    Graph g;
    REQUIRE(cmc_graph_generate("outerplanar(7,2)", 3, &g.g) == CMC_OK);
    char* text = nullptr;
    REQUIRE(cmc_graph_write(g.g, &text) == CMC_OK);
    Graph back;
    REQUIRE(cmc_graph_parse(take(text).c_str(), &back.g) == CMC_OK);
    CHECK(cmc_graph_has_embedding(back.g) == 1);
    CHECK(cmc_graph_edge_count(back.g) == cmc_graph_edge_count(g.g));
    char* families = nullptr;
    REQUIRE(cmc_generator_families(&families) == CMC_OK);
    CHECK(take(families).find("hypercube\n") != std::string::npos);
}

TEST_CASE("decompositions through the C interface")
{
    Graph g;
    REQUIRE(cmc_graph_parse(kPath, &g.g) == CMC_OK);
    char* td = nullptr;
    REQUIRE(cmc_decompose(g.g, &td) == CMC_OK);
    std::string td_text = take(td);
    char* report = nullptr;
    REQUIRE(cmc_validate_td(g.g, td_text.c_str(), &report) == CMC_OK);
    CHECK(nlohmann::json::parse(take(report))["valid"] == true);

    Sol s;
    REQUIRE(cmc_solve_treewidth(g.g, td_text.c_str(), &s.s, nullptr) == CMC_OK);
    CHECK(s.cut() == "3.5");

    const char* missing_edge = "s td 2 2 4\nb 1 10 20\nb 2 30 40\n1 2\n";
    REQUIRE(cmc_validate_td(g.g, missing_edge, &report) == CMC_OK);
    auto j = nlohmann::json::parse(take(report));
    CHECK(j["valid"] == false);
    CHECK(j["witness"].get<std::string>().find("edge") != std::string::npos);
    CHECK(cmc_validate_td(g.g, "garbage", &report) == CMC_INVALID_INPUT);
}

TEST_CASE("coloring validation")
{
    Graph g;
    REQUIRE(cmc_graph_generate("grid(4,4)", 0, &g.g) == CMC_OK);
    char* report = nullptr;
    REQUIRE(cmc_validate_coloring(g.g, 2, &report) == CMC_OK);
    auto j = nlohmann::json::parse(take(report));
    CHECK(j["valid"] == true);
    CHECK(j["class_of"].size() == 24);
    Graph plain;
    REQUIRE(cmc_graph_parse(kPath, &plain.g) == CMC_OK);
    CHECK(cmc_validate_coloring(plain.g, 2, &report) == CMC_INVALID_INPUT);
    CHECK(cmc_validate_coloring(g.g, 1, &report) == CMC_INVALID_INPUT);
}

TEST_CASE("formula validation and reduction")
{
    char* report = nullptr;
    REQUIRE(cmc_validate_pmsat("p pmsat 4 2\ncp 1 3\ncp 2 4\n", &report) == CMC_OK);
    auto j = nlohmann::json::parse(take(report));
    CHECK(j["valid"] == false);
    CHECK(j["violations"].size() == 1);

    char* graph_text = nullptr;
    char* sidecar = nullptr;
    REQUIRE(cmc_reduce_sat("p pmsat 3 1\ncp 1 2 3\n", &graph_text, &sidecar) == CMC_OK);
    auto side = nlohmann::json::parse(take(sidecar));
    CHECK(side["K"] == 4);
    CHECK(side["threshold"] == 62);
    Graph g;
    REQUIRE(cmc_graph_parse(take(graph_text).c_str(), &g.g) == CMC_OK);
    CHECK(cmc_graph_vertex_count(g.g) == 69);
    CHECK(cmc_reduce_sat("p pmsat 4 2\ncp 1 3\ncp 2 4\n", &graph_text, nullptr) == CMC_INVALID_INPUT);
}

TEST_CASE("bench")
{
    char* out = nullptr;
    REQUIRE(cmc_bench(R"js({"instances": ["path(3)"], "algorithms": ["bcmc"], "oracle": true})js", "csv", &out) ==
            CMC_OK);
    auto csv = take(out);
    CHECK(csv.find("\ni0000-s000-a00,path(3),0,bcmc,,3,2,2,2,1,") != std::string::npos);
    CHECK(cmc_bench("{}", "xml", &out) == CMC_INVALID_INPUT);
}
