/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#include "cmc/error.hpp"
#include "cmc/reductions.hpp"
#include "cmc/thick_tree.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace cmc;

namespace {

Graph cycle(std::size_t n, std::vector<int> w = {})
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.push_back({i, static_cast<Vertex>((i + 1) % n), Weight(w.empty() ? 1 : w[i])});
    return Graph(n, std::move(edges));
}

Graph clique(std::size_t n, Weight w = 1)
{
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            edges.push_back({a, b, w});
    return Graph(n, std::move(edges));
}

Graph star(std::size_t leaves, Weight w = 1)
{
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= leaves; ++i)
        edges.push_back({0, i, w});
    return Graph(leaves + 1, std::move(edges));
}

/// Reduced connected non-cycle graph, or nullopt when reduction leaves a
/// cycle or nothing.
std::optional<Graph> reduced_instance(std::size_t n, std::mt19937_64& rng)
{
    auto g = testing::random_connected(n, 1, n, testing::WeightKind::zero_one, rng);
    auto ones = ensure_one_edges(g);
    if (ones.graph.n() == 0 || is_simple_cycle(ones.graph))
        return std::nullopt;
    return contract_d2_paths(ones.graph).graph;
}

std::size_t ceil_div(std::size_t a, std::size_t b)
{
    return (a + b - 1) / b;
}

} // namespace

TEST_CASE("cycle_solve examples")
{
    auto g = cycle(4, {5, 1, 1, 3});
    auto s = cycle_solve(g);
    CHECK(s.cut_value == 8);
    CHECK(s.connected);
    CHECK(oracle::naive_cmc(g).value == 8);

    for (std::size_t n = 3; n <= 9; ++n)
        CHECK(cycle_solve(cycle(n)).cut_value == 2);
    CHECK_THROWS_AS(cycle_solve(clique(4)), InvalidInput);
}

TEST_CASE("cycle_solve matches the oracle on weighted cycles")
{
    std::mt19937_64 rng(1);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 3 + testing::draw(rng, 9);
        std::vector<int> w;
        for (std::size_t i = 0; i < n; ++i)
            w.push_back(static_cast<int>(testing::draw(rng, 9)));
        auto g = cycle(n, w);
        auto s = cycle_solve(g);
        CHECK(verify(g, s));
        CHECK(s.cut_value == oracle::naive_cmc(g).value);
    }
}

TEST_CASE("leafy_spanning_tree preconditions")
{
    auto t = leafy_spanning_tree(clique(4));
    CHECK(t.leaves.size() >= 1);
    CHECK(t.tree_edges.size() == 3);
    CHECK_THROWS_AS(leafy_spanning_tree(cycle(6)), CycleInput);
    Graph long_path(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}});
    CHECK_THROWS_AS(leafy_spanning_tree(long_path), InvalidInput);
    CHECK_THROWS_AS(leafy_spanning_tree(Graph(2, {})), InvalidInput);
}

TEST_CASE("leafy_spanning_tree has enough leaves and no long degree-two runs")
{
    std::mt19937_64 rng(2);
    int checked = 0;
    while (checked < 50) {
        auto g = reduced_instance(10 + testing::draw(rng, 31), rng);
        if (!g)
            continue;
        ++checked;
        auto t = leafy_spanning_tree(*g);
        CHECK(t.tree_edges.size() + 1 == g->n());
        CHECK(t.leaves.size() >= ceil_div(g->n(), 14));
        CHECK(longest_tree_d2_run(t) < 7);
    }
}

TEST_CASE("swap loop breaks long runs in a sparse graph")
{
    // A long ladder: BFS from a rung end leaves long degree-two runs.
    std::vector<Edge> edges;
    const Vertex len = 20;
    for (Vertex i = 0; i + 1 < len; ++i) {
        edges.push_back({i, i + 1, 1});
        edges.push_back({len + i, len + i + 1, 1});
    }
    for (Vertex i = 0; i < len; i += 2)
        edges.push_back({i, len + i, 1});
    edges.push_back({len - 1, 2 * len - 1, 1});
    edges.push_back({0, 2 * len, 1});
    edges.push_back({len, 2 * len + 1, 1});
    Graph g(2 * len + 2, std::move(edges));
    REQUIRE(has_no_long_d2_paths(g));
    auto t = leafy_spanning_tree(g);
    CHECK(longest_tree_d2_run(t) < 7);
    CHECK(t.leaves.size() >= ceil_div(g.n(), 14));
}

TEST_CASE("make_thick_tree computes leaves and thickness")
{
    auto g = star(6);
    std::vector<EdgeId> all{0, 1, 2, 3, 4, 5};
    auto t = make_thick_tree(g, all);
    CHECK(t.leaves.size() == 6);
    CHECK(t.leaf_weight == 6);
    CHECK(t.thickness == 1);
    CHECK_THROWS_AS(make_thick_tree(cycle(3), {0, 1, 2}), InvalidInput);
    auto lone = make_thick_tree(g, {}, 3);
    CHECK(lone.vertices.size() == 1);
    CHECK(lone.leaves.contains(3));
}

TEST_CASE("leaf_bipartition examples")
{
    auto tri = leaf_bipartition(clique(3), VertexSet::full(3));
    CHECK(tri.crossing_ones == 2);
    CHECK(tri.part1.size() + tri.part2.size() == 3);

    auto zeros = leaf_bipartition(clique(4, 0), VertexSet::full(4));
    CHECK(zeros.crossing_ones == 0);

    const auto c4g = cycle(4);
    auto c4 = leaf_bipartition(c4g, VertexSet::full(4));
    CHECK(c4.crossing_ones >= 2);
    // Exhaustive maximum over all splits of the 4-cycle.
    int best = 0;
    for (int mask = 0; mask < 16; ++mask) {
        int c = 0;
        for (const auto& e : c4g.edges())
            c += ((mask >> e.u) & 1) != ((mask >> e.v) & 1);
        best = std::max(best, c);
    }
    CHECK(best == 4);
    CHECK(c4.crossing_ones <= best);
}

TEST_CASE("leaf_bipartition crosses at least half of the leaf-induced weight")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        auto g = testing::random_gnp(14, 1, 2, testing::WeightKind::zero_one, rng);
        VertexSet l(g.n());
        for (Vertex v = 0; v < g.n(); ++v)
            if (testing::draw(rng, 3) != 0)
                l.insert(v);
        auto b = leaf_bipartition(g, l);
        Weight inside;
        for (const auto& e : g.edges())
            if (l.contains(e.u) && l.contains(e.v))
                inside += e.w;
        CHECK(b.crossing_ones * 2 >= inside);
        for (Vertex v = 0; v < g.n(); ++v)
            CHECK((b.part1.contains(v) || b.part2.contains(v)) == l.contains(v));
        CHECK(b.part1.size() + b.part2.size() == l.size());
    }
}

TEST_CASE("thick_tree_cut examples")
{
    auto g = star(6);
    auto t = make_thick_tree(g, {0, 1, 2, 3, 4, 5});
    auto s = thick_tree_cut(t);
    CHECK(s.cut_value == 3);
    CHECK(s.cut_value * 4 >= t.leaf_weight);

    // Single-edge tree 0-1 inside a graph where 1 has the larger degree.
    Graph h(4, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}});
    auto e = make_thick_tree(h, {0});
    auto se = thick_tree_cut(e);
    CHECK(se.vertices == VertexSet(4, {1}));
}

TEST_CASE("thick_tree_cut meets the quarter-leaf-weight bound on random trees")
{
    std::mt19937_64 rng(4);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 2 + testing::draw(rng, 30);
        auto g = testing::random_connected(n, 1, 4, testing::WeightKind::zero_one, rng);
        auto tree = make_thick_tree(g, testing::random_spanning_tree(g, rng));
        auto s = thick_tree_cut(tree);
        CHECK(verify(g, s));
        CHECK(s.connected);
        if (tree.vertices.size() > 2)
            CHECK(s.cut_value * 4 >= tree.leaf_weight);
    }
}

TEST_CASE("bcmc_approx examples")
{
    Graph p(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK(bcmc_approx(p).cut_value == 2);
    CHECK(bcmc_approx(clique(4)).cut_value >= 3);
    auto lone = bcmc_approx(Graph(1, {}));
    CHECK(lone.cut_value == 0);
    CHECK(lone.vertices == VertexSet(1, {0}));
    CHECK_THROWS_AS(bcmc_approx(Graph(2, {{0, 1, 2}})), InvalidInput);
}

TEST_CASE("bcmc_approx handles cycles, forests and all-zero graphs")
{
    CHECK(bcmc_approx(cycle(7)).cut_value == 2);
    Graph two(6, {{0, 1, 1}, {2, 3, 1}, {3, 4, 1}, {3, 5, 1}});
    CHECK(bcmc_approx(two).cut_value == 3);
    Graph zero(3, {{0, 1, 0}, {1, 2, 0}});
    auto z = bcmc_approx(zero);
    CHECK(z.cut_value == 0);
    CHECK(z.vertices.size() == 1);
    CHECK(bcmc_approx(star(5)).cut_value == 5);
}

TEST_CASE("bcmc_approx is feasible, bounded by the optimum and returns the best candidate")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + testing::draw(rng, 13);
        auto g = testing::random_gnp(n, 1 + testing::draw(rng, 3), 5, testing::WeightKind::zero_one, rng);
        auto r = bcmc_approx_report(g);
        CHECK(verify(g, r.best));
        CHECK(r.best.connected);
        CHECK(r.best.cut_value <= oracle::naive_cmc(g).value);
        REQUIRE_FALSE(r.candidate_cuts.empty());
        CHECK(r.best.cut_value == *std::max_element(r.candidate_cuts.begin(), r.candidate_cuts.end()));
    }
}

TEST_CASE("weight_class_split example")
{
    Graph g(5, {{0, 1, 10}, {1, 2, 5}, {2, 3, 3}, {3, 4, parse_weight("0.004")}});
    auto classes = weight_class_split(g, 1);
    REQUIRE(classes.size() == 3);
    CHECK(classes[0].lower == Weight(5, 2));
    CHECK(classes[0].upper == 5);
    CHECK(classes[0].edges == std::vector<EdgeId>{2});
    CHECK(classes[1].edges == std::vector<EdgeId>{1});
    CHECK(classes[2].lower == 10);
    CHECK(classes[2].edges == std::vector<EdgeId>{0});
    CHECK(classes[0].binarized.edge(2).w == 1);
    CHECK(classes[0].binarized.edge(0).w == 0);
}

TEST_CASE("weight_class_split edge cases")
{
    auto uniform = weight_class_split(clique(5, 4), 1);
    std::size_t nonempty = 0;
    for (const auto& c : uniform)
        if (!c.edges.empty()) {
            ++nonempty;
            CHECK(c.edges.size() == 10);
        }
    CHECK(nonempty == 1);
    CHECK(weight_class_split(clique(3, 0), 1).empty());
    CHECK_THROWS_AS(weight_class_split(clique(3), 0), InvalidInput);
}

TEST_CASE("weight classes partition the heavy edges")
{
    std::mt19937_64 rng(6);
    for (int t = 0; t < 30; ++t) {
        auto g = testing::random_gnp(10, 1, 2, testing::WeightKind::rational, rng);
        for (auto eps : {Weight(1), Weight(1, 2), Weight(1, 10)}) {
            auto classes = weight_class_split(g, eps);
            if (classes.empty())
                continue;
            const Weight w0 = classes.front().lower;
            std::vector<int> hits(g.m(), 0);
            for (std::size_t i = 0; i < classes.size(); ++i) {
                CHECK(classes[i].index == i);
                CHECK(classes[i].upper == classes[i].lower * (1 + eps));
                for (EdgeId e : classes[i].edges) {
                    ++hits[e];
                    CHECK(g.edge(e).w >= classes[i].lower);
                    CHECK(g.edge(e).w < classes[i].upper);
                }
            }
            for (EdgeId e = 0; e < g.m(); ++e)
                CHECK(hits[e] == (g.edge(e).w >= w0 ? 1 : 0));
            double bound = std::ceil(std::log(static_cast<double>(g.m()) / to_double(eps)) /
                                     std::log(1 + to_double(eps))) + 1;
            CHECK(static_cast<double>(classes.size()) <= bound + 1e-9);
        }
    }
}

TEST_CASE("wcmc_approx examples")
{
    CHECK(wcmc_approx(star(5, 7)).cut_value == 35);
    auto one = wcmc_approx(Graph(2, {{0, 1, 3}}));
    CHECK(one.cut_value == 3);
    CHECK(one.vertices.size() == 1);
}

TEST_CASE("wcmc_approx is feasible and bounded by the optimum")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + testing::draw(rng, 12);
        auto g = testing::random_gnp(n, 1, 2, testing::WeightKind::rational, rng);
        auto s = wcmc_approx(g);
        CHECK(verify(g, s));
        CHECK(s.connected);
        CHECK(s.cut_value <= oracle::naive_cmc(g).value);
    }
}

TEST_CASE("random_half_cmc feasibility and determinism")
{
    auto k4 = random_half_sample(clique(4), 200, 42);
    // Every nonempty subset of a clique is connected, so only the empty
    // samples are rejected.
    CHECK(k4.accepted > 150);
    CHECK(k4.best.cut_value == 4);

    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < 10; ++i)
        edges.push_back({i, i + 1, 1});
    Graph path(10, edges);
    auto s = random_half_cmc(path, 50, 9);
    CHECK(verify(path, s));
    CHECK(s.connected);

    auto a = random_half_sample(path, 100, 5);
    auto b = random_half_sample(path, 100, 5);
    CHECK(a.best.vertices == b.best.vertices);
    CHECK(a.accepted == b.accepted);
    CHECK_THROWS_AS(random_half_cmc(path, 0, 1), InvalidInput);
}
