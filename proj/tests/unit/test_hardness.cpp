/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#include "cmc/error.hpp"
#include "cmc/exact.hpp"
#include "cmc/hardness.hpp"
#include "sat.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <set>

using namespace cmc;

namespace {

PM3Sat figure_formula()
{
    PM3Sat f;
    f.n = 5;
    f.positive = {{1, 2, 5}, {2, 3, 4}};
    f.negative = {{1, 2, 3}, {3, 4, 5}, {1, 3, 5}};
    return f;
}

PM3Sat one_clause()
{
    PM3Sat f;
    f.n = 3;
    f.positive = {{1, 2, 3}};
    return f;
}

PM3Sat contradiction()
{
    PM3Sat f;
    f.n = 1;
    f.positive = {{1, 1, 1}};
    f.negative = {{1, 1, 1}};
    return f;
}

std::uint64_t expected_edges(const PM3Sat& inst, std::uint64_t K)
{
    std::uint64_t n = inst.n, m = inst.m();
    std::uint64_t legs = 0;
    for (const auto* side : {&inst.positive, &inst.negative})
        for (const auto& c : *side)
            legs += std::set<std::size_t>(c.begin(), c.end()).size();
    std::uint64_t root = 1;
    while (root * root < K)
        ++root;
    return n * (2 * K + K * K) + (n ? n - 1 : 0) + legs + m * root;
}

} // namespace

TEST_CASE("the example formula is valid")
{
    CHECK(validate_pm3sat(figure_formula()).valid);
}

TEST_CASE("crossing intervals are rejected")
{
    PM3Sat f;
    f.n = 4;
    f.positive = {{1, 3}, {2, 4}};
    auto rep = validate_pm3sat(f);
    CHECK_FALSE(rep.valid);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].positive_side);
    CHECK(rep.violations[0].first == 0);
    CHECK(rep.violations[0].second == 1);
    // The same intervals on opposite sides do not interact.
    f.negative = {f.positive[1]};
    f.positive.pop_back();
    CHECK(validate_pm3sat(f).valid);
}

TEST_CASE("a single clause is always valid")
{
    for (std::size_t a = 1; a <= 4; ++a)
        for (std::size_t b = 1; b <= 4; ++b) {
            PM3Sat f;
            f.n = 4;
            f.negative = {{a, b}};
            CHECK(validate_pm3sat(f).valid);
        }
}

TEST_CASE("malformed clauses are reported")
{
    PM3Sat f;
    f.n = 3;
    f.positive = {{}, {1, 2, 3, 1}, {4}};
    auto rep = validate_pm3sat(f);
    CHECK_FALSE(rep.valid);
    CHECK(rep.violations.size() == 3);
    CHECK_THROWS_AS(sat_to_cmc(f), InvalidInput);
}

TEST_CASE("gadget for one clause over three variables")
{
    auto g = sat_to_cmc(one_clause());
    CHECK(g.K == 4);
    CHECK(g.threshold == 62);
    CHECK(g.graph.n() == 69);
    CHECK(g.graph.m() == expected_edges(one_clause(), 4));
}

TEST_CASE("gadget for the contradiction")
{
    auto g = sat_to_cmc(contradiction());
    CHECK(g.K == 9);
    CHECK(g.threshold == 96);
    CHECK(g.graph.n() == 2 + 9 + 81 + 2 + 6);
    // Repeated literals collapse to one leg per clause.
    CHECK(g.graph.degree(g.clause(0)) == 1 + 3);
    CHECK(g.graph.degree(g.clause(1)) == 1 + 3);
}

TEST_CASE("helper degrees and roles")
{
    auto g = sat_to_cmc(figure_formula());
    const auto n = g.source.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < g.K; ++k) {
            std::size_t joints = (k == g.K - 1 && i + 1 < n) + (k == 0 && i > 0);
            CHECK(g.graph.degree(g.helper(i, k)) == g.K + 2 + joints);
            auto r = g.role(g.helper(i, k));
            CHECK(r.kind == GadgetRole::helper);
            CHECK(r.var == i);
            CHECK(r.helper == k);
        }
    CHECK(g.role_name(g.literal(2, false)) == "~x3");
    CHECK(g.role_name(g.clause(4)) == "C5");
    CHECK(g.role(g.graph.n() - 1).kind == GadgetRole::clause_leaf);
    CHECK(g.role(2 * n + n * g.K).kind == GadgetRole::helper_leaf);
    CHECK_THROWS_AS(g.role(g.graph.n()), InvalidInput);
    // Leaves hang off exactly one vertex.
    for (Vertex v = 0; v < g.graph.n(); ++v) {
        auto kind = g.role(v).kind;
        if (kind == GadgetRole::helper_leaf || kind == GadgetRole::clause_leaf)
            CHECK(g.graph.degree(v) == 1);
    }
}

TEST_CASE("size formulas on random instances")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        auto inst = testing::random_pm3sat(1 + rng() % 8, 1 + rng() % 5, rng);
        REQUIRE(validate_pm3sat(inst).valid);
        auto g = sat_to_cmc(inst);
        std::uint64_t n = inst.n, m = inst.m(), K = g.K;
        CHECK(K == (m + 1) * (m + 1));
        CHECK(K > m * m);
        CHECK(g.sqrt_K * g.sqrt_K == K);
        CHECK(g.graph.n() == 2 * n + n * K + n * K * K + m + m * g.sqrt_K);
        CHECK(g.graph.m() == expected_edges(inst, K));
        CHECK(g.threshold == m * g.sqrt_K + n * K + n * K * K);
        CHECK(is_connected(g.graph));
    }
}

TEST_CASE("forward map from a satisfying assignment")
{
    auto g = sat_to_cmc(one_clause());
    auto r = assignment_to_solution(g, {true, true, true});
    REQUIRE(r.solution);
    CHECK(r.unsatisfied.empty());
    CHECK(r.solution->connected);
    CHECK(r.solution->cut_value >= 62);
    CHECK(r.solution->vertices.size() == 3 + 1 + 3 * 4);
}

TEST_CASE("forward map reports unsatisfied clauses")
{
    auto g = sat_to_cmc(contradiction());
    auto r = assignment_to_solution(g, {true});
    CHECK_FALSE(r.solution);
    CHECK(r.unsatisfied == std::vector<std::size_t>{1});
    r = assignment_to_solution(g, {false});
    CHECK(r.unsatisfied == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(assignment_to_solution(g, {true, false}), InvalidInput);
}

TEST_CASE("oracle on the satisfiable example")
{
    auto g = sat_to_cmc(one_clause());
    auto r = structured_opt_oracle(g);
    CHECK(r.value >= 62);
    CHECK(r.solution.connected);
    CHECK(r.solution.cut_value == r.value);
    CHECK(verify(g.graph, r.solution));
}

TEST_CASE("oracle on the contradiction stays below the threshold")
{
    auto g = sat_to_cmc(contradiction());
    auto r = structured_opt_oracle(g);
    CHECK(r.value < 96);
    CHECK(verify(g.graph, r.solution));
}

TEST_CASE("oracle agrees with exhaustive search on tiny gadgets")
{
    PM3Sat a;
    a.n = 1;
    a.positive = {{1}};
    PM3Sat b;
    b.n = 1;
    b.negative = {{1}};
    PM3Sat c;
    c.n = 1;
    c.positive = {{1, 1}};
    for (const auto& inst : {a, b, c}) {
        auto g = sat_to_cmc(inst);
        REQUIRE(g.graph.n() <= 30);
        auto exact = brute_force_cmc(g.graph, true);
        CHECK(structured_opt_oracle(g).value == exact.cut_value);
    }
}

TEST_CASE("without clauses K is 1 and helpers no longer pay for themselves")
{
    // Adding a helper trades its two literal edges for one leaf edge, so the
    // assignment-shaped optimum falls below the true one. The threshold is
    // still met, so the satisfiability equivalence survives.
    PM3Sat empty;
    empty.n = 2;
    auto g = sat_to_cmc(empty);
    CHECK(g.K == 1);
    auto oracle = structured_opt_oracle(g);
    CHECK(oracle.value == g.threshold);
    CHECK(oracle.value < brute_force_cmc(g.graph).cut_value);
}

TEST_CASE("oracle size guard")
{
    PM3Sat big;
    big.n = 21;
    CHECK_THROWS_AS(structured_opt_oracle(sat_to_cmc(big)), SizeGuardError);
}

TEST_CASE("threshold equivalence on random instances")
{
    std::mt19937_64 rng(29);
    int sat = 0, unsat = 0;
    for (int t = 0; t < 60; ++t) {
        auto inst = testing::random_pm3sat(1 + rng() % 6, 1 + rng() % 6, rng);
        auto g = sat_to_cmc(inst);
        auto models = testing::satisfying_assignments(inst);
        auto oracle = structured_opt_oracle(g);
        CHECK(models.empty() == (oracle.value < g.threshold));
        (models.empty() ? unsat : sat)++;
        for (const auto& a : models) {
            auto r = assignment_to_solution(g, a);
            REQUIRE(r.solution);
            CHECK(r.solution->cut_value >= g.threshold);
        }
    }
    CHECK(sat > 0);
    CHECK(unsat > 0);
}

TEST_CASE("text format round trip")
{
    auto f = figure_formula();
    auto text = write_pm3sat(f);
    CHECK(text.rfind("p pmsat 5 5\n", 0) == 0);
    auto back = parse_pm3sat(text);
    CHECK(back.n == 5);
    CHECK(back.positive == f.positive);
    CHECK(back.negative == f.negative);
    CHECK(parse_pm3sat("c hello\np pmsat 2 1\ncn 2\n").negative.size() == 1);
}

TEST_CASE("text format errors")
{
    CHECK_THROWS_AS(parse_pm3sat("cp 1 2 3\n"), InvalidInput);
    CHECK_THROWS_AS(parse_pm3sat("p pmsat 3 2\ncp 1 2 3\n"), InvalidInput);
    CHECK_THROWS_AS(parse_pm3sat("p pmsat 3 1\ncp 1 2 4\n"), InvalidInput);
    CHECK_THROWS_AS(parse_pm3sat("p pmsat 3 1\ncp 1 2 3 1\n"), InvalidInput);
    CHECK_THROWS_AS(parse_pm3sat("p pmsat 3 1\ncx 1\n"), InvalidInput);
    CHECK_THROWS_AS(parse_pm3sat(""), InvalidInput);
}

TEST_CASE("sidecar json")
{
    auto g = sat_to_cmc(one_clause());
    auto j = nlohmann::json::parse(gadget_sidecar_json(g));
    CHECK(j["K"] == 4);
    CHECK(j["threshold"] == 62);
    CHECK(j["roles"].size() == 69);
    CHECK(j["roles"][0] == "x1");
    CHECK(j["roles"][1] == "~x1");
}
