/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#include "cmc/error.hpp"
#include "cmc/generators.hpp"
#include "cmc/planar.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <deque>
#include <random>

using namespace cmc;

namespace {

GraphFile gen(const std::string& spec, std::uint64_t seed = 0)
{
    return generate_instance(parse_family_spec(spec), seed);
}

Embedding embed(const GraphFile& f)
{
    REQUIRE(f.rotation.has_value());
    return trace_faces(f.graph, *f.rotation, f.outer);
}

Graph c4()
{
    return Graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
}

// Vertex 0 sits inside the triangle 1, 2, 3.
Graph k4()
{
    return Graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
}
Rotation k4_rotation()
{
    return {{1, 2, 3}, {2, 0, 3}, {3, 0, 1}, {1, 0, 2}};
}

// Outer triangle 0, 1, 2 around inner triangle 3, 4, 5 with spokes i to i+3.
Graph prism()
{
    return Graph(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1},
                     {0, 3, 1}, {1, 4, 1}, {2, 5, 1}});
}
Rotation prism_rotation()
{
    return {{1, 3, 2}, {2, 4, 0}, {0, 5, 1}, {0, 4, 5}, {1, 5, 3}, {2, 3, 4}};
}

/// Components of (V, edges of one class), counted by BFS.
std::size_t class_components(const Graph& g, const EdgeColoring& c, std::size_t cls)
{
    std::vector<std::vector<Vertex>> adj(g.n());
    for (EdgeId e = 0; e < g.m(); ++e)
        if (c.class_of[e] == cls) {
            adj[g.edge(e).u].push_back(g.edge(e).v);
            adj[g.edge(e).v].push_back(g.edge(e).u);
        }
    std::vector<char> seen(g.n(), 0);
    std::size_t count = 0;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (seen[s])
            continue;
        ++count;
        std::deque<Vertex> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop_front();
            for (Vertex u : adj[v])
                if (!seen[u])
                    seen[u] = 1, q.push_back(u);
        }
    }
    return count;
}

void check_ptas(const GraphFile& f, const Weight& eps)
{
    auto emb = embed(f);
    auto r = ptas_solve(f.graph, emb, eps);
    auto opt = oracle::naive_cmc(f.graph);
    CHECK(verify(f.graph, r.solution));
    CHECK(r.solution.cut_value <= opt.value);
    CHECK(r.solution.cut_value >= (1 - r.epsilon) * opt.value);
    CHECK(r.groups.size() == r.k / 3);
    for (const auto& grp : r.groups)
        if (grp.solved)
            CHECK(grp.lifted_value >= grp.dp_value);
}

} // namespace

TEST_CASE("faces of a 4-cycle")
{
    auto emb = trace_faces(c4(), {{1, 3}, {0, 2}, {1, 3}, {0, 2}});
    CHECK(emb.faces.size() == 2);
    CHECK(emb.faces[0].size() == 4);
    CHECK(emb.faces[1].size() == 4);
}

TEST_CASE("faces of planar K4")
{
    auto emb = trace_faces(k4(), k4_rotation());
    CHECK(emb.faces.size() == 4);
    for (const auto& f : emb.faces)
        CHECK(f.size() == 3);
}

TEST_CASE("a tree has a single face")
{
    auto f = gen("star(5)");
    auto emb = embed(f);
    CHECK(emb.faces.size() == 1);
    CHECK(emb.faces[0].size() == 2 * f.graph.m());
}

TEST_CASE("every dart lies on exactly one face")
{
    for (const char* spec : {"grid(3,4)", "outerplanar(10,5)", "cycle(7)", "path(4)"}) {
        auto f = gen(spec, 3);
        auto emb = embed(f);
        std::size_t darts = 0;
        for (const auto& face : emb.faces)
            darts += face.size();
        CHECK(darts == 2 * f.graph.m());
        for (EdgeId e = 0; e < f.graph.m(); ++e) {
            const auto& edge = f.graph.edge(e);
            const auto& fwd = emb.faces[emb.edge_faces[e][0]];
            const auto& bwd = emb.faces[emb.edge_faces[e][1]];
            CHECK(std::count(fwd.begin(), fwd.end(), Dart{edge.u, edge.v}) == 1);
            CHECK(std::count(bwd.begin(), bwd.end(), Dart{edge.v, edge.u}) == 1);
        }
    }
}

TEST_CASE("non-planar rotation is rejected")
{
    auto rot = k4_rotation();
    std::swap(rot[0][1], rot[0][2]);
    CHECK_THROWS_WITH_AS(trace_faces(k4(), rot), doctest::Contains("not a planar embedding"), InvalidInput);
}

TEST_CASE("malformed rotation is rejected")
{
    CHECK_THROWS_AS(trace_faces(c4(), {{1, 3}, {0, 2}, {1, 3}}), InvalidInput);
    CHECK_THROWS_AS(trace_faces(c4(), {{1, 1}, {0, 2}, {1, 3}, {0, 2}}), InvalidInput);
    CHECK_THROWS_AS(trace_faces(c4(), {{1, 2}, {0, 2}, {1, 3}, {0, 2}}), InvalidInput);
}

TEST_CASE("designated outer face")
{
    auto emb = trace_faces(prism(), prism_rotation());
    CHECK(emb.faces.size() == 5);
    auto inner = std::find(emb.face_vertices.begin(), emb.face_vertices.end(), std::vector<Vertex>{3, 4, 5});
    REQUIRE(inner != emb.face_vertices.end());
    auto idx = static_cast<std::size_t>(inner - emb.face_vertices.begin());
    auto again = trace_faces(prism(), prism_rotation(), emb.faces[idx][0]);
    CHECK(again.outer_face == idx);
}

TEST_CASE("radial coloring of a tree is a single class")
{
    auto f = gen("path(6)");
    auto c = radial_coloring(embed(f), 3);
    for (EdgeId e = 0; e < f.graph.m(); ++e) {
        CHECK(c.levels[e] == 0);
        CHECK(c.class_of[e] == 0);
    }
    CHECK(c.check.passed);
}

TEST_CASE("3x3 grid with two classes passes the validator")
{
    auto f = gen("grid(3,3)");
    auto c = radial_coloring(embed(f), 2);
    CHECK(c.class_of.size() == 12);
    for (auto cls : c.class_of)
        CHECK(cls < 2);
    CHECK(c.check.passed);
    CHECK(validate_coloring(f.graph, c).violations == 0);
}

TEST_CASE("prism: inner triangle sits deeper than the outer one")
{
    auto g = prism();
    auto first = trace_faces(g, prism_rotation());
    auto outer = std::find(first.face_vertices.begin(), first.face_vertices.end(), std::vector<Vertex>{0, 1, 2});
    REQUIRE(outer != first.face_vertices.end());
    auto emb = trace_faces(g, prism_rotation(), first.faces[outer - first.face_vertices.begin()][0]);
    auto c = radial_coloring(emb, 3);
    for (EdgeId e : {0u, 1u, 2u})
        CHECK(c.levels[e] == 0);
    for (EdgeId e : {3u, 4u, 5u})
        CHECK(c.levels[e] > 0);
    CHECK(c.check.passed);
}

TEST_CASE("validator reports a witness")
{
    auto g = Graph(3, {{0, 1, 1}, {1, 2, 1}});
    EdgeColoring c;
    c.k = 4;
    c.class_of = {0, 2};
    auto check = validate_coloring(g, c);
    CHECK_FALSE(check.passed);
    CHECK(check.violations == 1);
    REQUIRE(check.witness);
    CHECK(*check.witness == std::pair<EdgeId, EdgeId>{0, 1});
    c.class_of = {0, 3};
    CHECK(validate_coloring(g, c).passed);
}

TEST_CASE("coloring validator on grid and outerplanar families")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        std::string spec = i % 2 ? "grid(" + std::to_string(2 + rng() % 5) + "," + std::to_string(2 + rng() % 5) + ")"
                                 : "outerplanar(" + std::to_string(4 + rng() % 12) + "," + std::to_string(rng() % 8) + ")";
        auto f = gen(spec, rng());
        for (std::size_t k : {3u, 6u, 9u}) {
            auto c = radial_coloring(embed(f), k);
            INFO(spec << " k=" << k);
            CHECK(c.check.passed);
        }
    }
}

TEST_CASE("contracting one edge of a 4-cycle gives a triangle")
{
    EdgeColoring c;
    c.k = 2;
    c.class_of = {0, 1, 1, 1};
    auto h = contract_color_class(c4(), c, 0);
    CHECK(h.graph.n() == 3);
    CHECK(h.graph.m() == 3);
}

TEST_CASE("contracting an empty class is the identity")
{
    EdgeColoring c;
    c.k = 3;
    c.class_of = {0, 0, 1, 1};
    auto h = contract_color_class(c4(), c, 2);
    CHECK(h.graph.n() == 4);
    CHECK(h.graph.m() == 4);
    for (Vertex v = 0; v < 4; ++v)
        CHECK(h.map.origin[v] == std::vector<Vertex>{v});
    CHECK_THROWS_AS(contract_color_class(c4(), c, 3), InvalidInput);
}

TEST_CASE("grid contraction vertex count matches the class components")
{
    for (auto spec : {"grid(3,3)", "grid(4,5)"}) {
        auto f = gen(spec);
        auto c = radial_coloring(embed(f), 2);
        for (std::size_t cls = 0; cls < 2; ++cls) {
            auto h = contract_color_class(f.graph, c, cls);
            CHECK(h.graph.n() == class_components(f.graph, c, cls));
            std::size_t total = 0;
            for (const auto& part : h.map.origin) {
                total += part.size();
                auto sub = induced_subgraph(f.graph, part);
                CHECK(is_connected(sub.graph));
            }
            CHECK(total == f.graph.n());
        }
    }
}

TEST_CASE("contraction keeps cut weight under lifting")
{
    std::mt19937_64 rng(5);
    auto f = gen("grid(3,4)");
    auto c = radial_coloring(embed(f), 3);
    auto h = contract_color_class(f.graph, c, 1);
    for (int t = 0; t < 50; ++t) {
        VertexSet s(h.graph.n());
        for (Vertex v = 0; v < h.graph.n(); ++v)
            if (rng() % 2)
                s.insert(v);
        auto lifted = h.map.lift(s, f.graph.n());
        CHECK(cut_weight(f.graph, lifted) == cut_weight(h.graph, s));
    }
}

TEST_CASE("ptas on the 3x3 grid with epsilon 1/2")
{
    check_ptas(gen("grid(3,3)"), Weight(1, 2));
}

TEST_CASE("ptas on the 2x3 grid with epsilon 1 is optimal")
{
    auto f = gen("grid(2,3)");
    auto r = ptas_solve(f.graph, embed(f), 1);
    CHECK(r.k == 3);
    CHECK(r.solution.cut_value == oracle::naive_cmc(f.graph).value);
}

TEST_CASE("ptas on trees is optimal")
{
    for (int n = 2; n <= 10; ++n)
        for (const auto& eps : {Weight(1), Weight(1, 2), Weight(1, 5)}) {
            auto f = gen("star(" + std::to_string(n) + ")");
            auto r = ptas_solve(f.graph, embed(f), eps);
            CHECK(r.solution.cut_value == oracle::naive_cmc(f.graph).value);
            f = gen("path(" + std::to_string(n) + ")");
            r = ptas_solve(f.graph, embed(f), eps);
            CHECK(r.solution.cut_value == oracle::naive_cmc(f.graph).value);
        }
}

TEST_CASE("ptas quality on small planar instances")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 30; ++i) {
        auto f = gen("outerplanar(" + std::to_string(4 + rng() % 9) + "," + std::to_string(rng() % 6) + ")", rng());
        for (const auto& eps : {Weight(1), Weight(1, 2), Weight(1, 3)})
            check_ptas(f, eps);
    }
    for (auto spec : {"grid(2,2)", "grid(2,5)", "grid(3,4)", "cycle(9)"})
        for (const auto& eps : {Weight(1), Weight(1, 2)})
            check_ptas(gen(spec), eps);
}

TEST_CASE("ptas epsilon handling")
{
    auto f = gen("grid(2,3)");
    auto emb = embed(f);
    CHECK(ptas_solve(f.graph, emb, 5).epsilon == 1);
    CHECK(ptas_solve(f.graph, emb, Weight(2, 5)).k == 9);
    CHECK_THROWS_AS(ptas_solve(f.graph, emb, 0), InvalidInput);
    CHECK_THROWS_AS(ptas_solve(f.graph, emb, -1), InvalidInput);
}

TEST_CASE("ptas report lists every group")
{
    auto f = gen("grid(3,3)");
    auto r = ptas_solve(f.graph, embed(f), Weight(1, 2));
    auto j = nlohmann::json::parse(ptas_report_json(r));
    CHECK(j["k"] == 6);
    CHECK(j["groups"].size() == 2);
    CHECK(j["coloring_valid"] == true);
    CHECK(j["cut"] == format_weight(r.solution.cut_value));
    for (const auto& grp : j["groups"])
        CHECK(grp.contains("width"));
}
