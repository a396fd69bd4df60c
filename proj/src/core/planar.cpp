/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#include "cmc/planar.hpp"

#include "cmc/error.hpp"
#include "cmc/thick_tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include <json.hpp>

namespace cmc {

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Vertex{0}); }
    Vertex find(Vertex x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(Vertex a, Vertex b)
    {
        a = find(a), b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<Vertex> parent;
};

BigInt ceil_div(const BigInt& a, const BigInt& b)
{
    return (a + b - 1) / b;
}

} // namespace

Embedding trace_faces(const Graph& g, const Rotation& rotation, const std::optional<Dart>& outer)
{
    if (rotation.size() != g.n())
        throw InvalidInput("rotation system must list every vertex");
    // succ_index[v][i]: position of neighbor rotation[v][i]; pos_of maps
    // (v, neighbor) to its rotation slot.
    std::vector<std::map<Vertex, std::size_t>> slot(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        if (rotation[v].size() != g.degree(v))
            throw InvalidInput("rotation of vertex " + std::to_string(v) + " has the wrong length");
        for (std::size_t i = 0; i < rotation[v].size(); ++i) {
            Vertex u = rotation[v][i];
            if (!g.find_edge(v, u) || !slot[v].emplace(u, i).second)
                throw InvalidInput("rotation of vertex " + std::to_string(v) +
                                   " does not list each neighbor exactly once");
        }
    }

    Embedding emb;
    emb.graph = g;
    emb.rotation = rotation;
    emb.edge_faces.assign(g.m(), {0, 0});
    std::vector<std::array<char, 2>> seen(g.m(), {0, 0});
    auto side_of = [&](Vertex tail, Vertex head) {
        EdgeId e = *g.find_edge(tail, head);
        return std::pair<EdgeId, int>{e, g.edge(e).u == tail ? 0 : 1};
    };

    for (EdgeId e0 = 0; e0 < g.m(); ++e0)
        for (int s0 = 0; s0 < 2; ++s0) {
            if (seen[e0][s0])
                continue;
            const std::size_t face = emb.faces.size();
            std::vector<Dart> darts;
            Dart d = s0 == 0 ? Dart{g.edge(e0).u, g.edge(e0).v} : Dart{g.edge(e0).v, g.edge(e0).u};
            for (;;) {
                auto [e, s] = side_of(d.tail, d.head);
                if (seen[e][s])
                    break;
                seen[e][s] = 1;
                emb.edge_faces[e][s] = face;
                darts.push_back(d);
                const auto& rot = rotation[d.head];
                Vertex next = rot[(slot[d.head].at(d.tail) + 1) % rot.size()];
                d = Dart{d.head, next};
            }
            std::vector<Vertex> verts;
            for (const auto& x : darts)
                verts.push_back(x.tail);
            std::sort(verts.begin(), verts.end());
            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            emb.faces.push_back(std::move(darts));
            emb.face_vertices.push_back(std::move(verts));
        }
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) {
            emb.faces.emplace_back();
            emb.face_vertices.push_back({v});
        }

    // Euler's formula per component.
    auto comps = connected_components(g);
    std::vector<std::size_t> comp_of(g.n());
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (Vertex v : comps[c])
            comp_of[v] = c;
    std::vector<long> euler(comps.size(), 0);
    for (std::size_t c = 0; c < comps.size(); ++c)
        euler[c] = static_cast<long>(comps[c].size());
    for (const auto& e : g.edges())
        --euler[comp_of[e.u]];
    for (const auto& fv : emb.face_vertices)
        ++euler[comp_of[fv.front()]];
    for (std::size_t c = 0; c < comps.size(); ++c)
        if (euler[c] != 2)
            throw InvalidInput("not a planar embedding: Euler characteristic " + std::to_string(euler[c]) +
                               " on the component of vertex " + std::to_string(comps[c].front()));

    if (outer) {
        auto e = g.find_edge(outer->tail, outer->head);
        if (!e)
            throw InvalidInput("outer face witness is not an edge");
        emb.outer_face = emb.edge_faces[*e][g.edge(*e).u == outer->tail ? 0 : 1];
    } else {
        for (std::size_t f = 1; f < emb.faces.size(); ++f)
            if (emb.faces[f].size() > emb.faces[emb.outer_face].size())
                emb.outer_face = f;
    }
    return emb;
}

EdgeColoring radial_coloring(const Embedding& emb, std::size_t k)
{
    if (k < 2)
        throw InvalidInput("radial_coloring: k must be at least 2");
    const Graph& g = emb.graph;
    const std::size_t nf = emb.faces.size();
    // Radial graph nodes: faces 0..nf-1, then vertices.
    std::vector<std::vector<std::size_t>> faces_at(g.n());
    for (std::size_t f = 0; f < nf; ++f)
        for (Vertex v : emb.face_vertices[f])
            faces_at[v].push_back(f);

    std::vector<std::size_t> sources{emb.outer_face};
    {
        auto comps = connected_components(g);
        std::vector<std::size_t> comp_of(g.n());
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (Vertex v : comps[c])
                comp_of[v] = c;
        std::vector<std::optional<std::size_t>> largest(comps.size());
        for (std::size_t f = 0; f < nf; ++f) {
            auto c = comp_of[emb.face_vertices[f].front()];
            if (!largest[c] || emb.faces[f].size() > emb.faces[*largest[c]].size())
                largest[c] = f;
        }
        auto outer_comp = comp_of[emb.face_vertices[emb.outer_face].front()];
        for (std::size_t c = 0; c < comps.size(); ++c)
            if (c != outer_comp)
                sources.push_back(*largest[c]);
    }

    const std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> face_dist(nf, none);
    std::vector<std::size_t> vert_dist(g.n(), none);
    std::deque<std::pair<bool, std::size_t>> queue;
    for (auto f : sources)
        face_dist[f] = 0, queue.emplace_back(true, f);
    while (!queue.empty()) {
        auto [is_face, x] = queue.front();
        queue.pop_front();
        if (is_face) {
            for (Vertex v : emb.face_vertices[x])
                if (vert_dist[v] == none)
                    vert_dist[v] = face_dist[x] + 1, queue.emplace_back(false, v);
        } else {
            for (auto f : faces_at[x])
                if (face_dist[f] == none)
                    face_dist[f] = vert_dist[x] + 1, queue.emplace_back(true, f);
        }
    }

    EdgeColoring c;
    c.k = k;
    for (auto d : face_dist)
        c.face_levels.push_back(d / 2);
    for (EdgeId e = 0; e < g.m(); ++e) {
        auto level = std::min(c.face_levels[emb.edge_faces[e][0]], c.face_levels[emb.edge_faces[e][1]]);
        c.levels.push_back(level);
        c.class_of.push_back(level % k);
    }
    c.check = validate_coloring(g, c);
    return c;
}

ColoringCheck validate_coloring(const Graph& g, const EdgeColoring& c)
{
    ColoringCheck out;
    if (c.class_of.size() != g.m())
        throw InvalidInput("validate_coloring: coloring does not match the edge count");
    for (Vertex v = 0; v < g.n(); ++v) {
        auto inc = g.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                auto a = c.class_of[inc[i].edge];
                auto b = c.class_of[inc[j].edge];
                auto d = (a + c.k - b) % c.k;
                if (d == 0 || d == 1 || d == c.k - 1)
                    continue;
                out.passed = false;
                ++out.violations;
                if (!out.witness)
                    out.witness = std::pair{std::min(inc[i].edge, inc[j].edge), std::max(inc[i].edge, inc[j].edge)};
            }
    }
    return out;
}

Contraction contract_color_class(const Graph& g, const EdgeColoring& c, std::size_t class_id)
{
    if (class_id >= c.k)
        throw InvalidInput("contract_color_class: class id out of range");
    UnionFind uf(g.n());
    for (EdgeId e = 0; e < g.m(); ++e)
        if (c.class_of[e] == class_id)
            uf.unite(g.edge(e).u, g.edge(e).v);
    std::map<Vertex, std::vector<Vertex>> parts;
    for (Vertex v = 0; v < g.n(); ++v)
        parts[uf.find(v)].push_back(v);
    std::vector<std::vector<Vertex>> list;
    for (auto& [root, members] : parts)
        list.push_back(std::move(members));
    return contract_vertex_sets(g, list);
}

PtasResult ptas_solve(const Graph& g, const Embedding& emb, const Weight& epsilon)
{
    if (g.n() == 0)
        throw InvalidInput("ptas_solve: graph has no vertices");
    if (epsilon <= 0)
        throw InvalidInput("ptas_solve: epsilon must be positive");
    if (emb.graph.n() != g.n() || emb.graph.m() != g.m())
        throw InvalidInput("ptas_solve: embedding belongs to a different graph");

    PtasResult r;
    r.epsilon = epsilon > 1 ? Weight(1) : epsilon;
    BigInt inv = ceil_div(boost::multiprecision::denominator(r.epsilon), boost::multiprecision::numerator(r.epsilon));
    if (inv > 100000)
        throw SizeGuardError("ptas_solve: epsilon is too small");
    r.k = std::max<std::size_t>(3, 3 * static_cast<std::size_t>(inv));
    auto coloring = radial_coloring(emb, r.k);
    r.coloring = coloring.check;
    r.exact_guarantee = coloring.check.passed;

    std::vector<char> class_used(r.k, 0);
    for (auto c : coloring.class_of)
        class_used[c] = 1;

    std::optional<Solution> best;
    std::optional<PtasGroup> uncontracted;
    for (std::size_t j = 0; j < r.k / 3; ++j) {
        std::size_t middle = 3 * j + 1;
        // Groups whose middle class is empty all solve g itself.
        if (!class_used[middle] && uncontracted) {
            PtasGroup copy = *uncontracted;
            copy.index = j;
            copy.contracted_class = middle;
            r.groups.push_back(copy);
            continue;
        }
        PtasGroup grp;
        grp.index = j;
        grp.contracted_class = middle;
        auto h = contract_color_class(g, coloring, middle);
        grp.contracted_n = h.graph.n();
        grp.contracted_m = h.graph.m();
        auto td = build_decomposition(h.graph);
        grp.width = td.width();
        if (grp.width <= kDpWidthLimit) {
            auto dp = dp_solve(h.graph, make_nice(h.graph, td));
            grp.solved = true;
            grp.dp_value = dp.solution.cut_value;
            auto lifted = evaluate(g, h.map.lift(dp.solution.vertices, g.n()));
            if (!lifted.connected || lifted.cut_value < grp.dp_value)
                throw InvariantViolation("ptas_solve: lifting lost connectivity or weight");
            grp.lifted_value = lifted.cut_value;
            if (!best || lifted.cut_value > best->cut_value)
                best = std::move(lifted);
        }
        if (!class_used[middle])
            uncontracted = grp;
        r.groups.push_back(grp);
    }
    if (!best) {
        r.exact_guarantee = false;
        best = wcmc_approx(g);
    }
    r.solution = std::move(*best);
    return r;
}

std::string ptas_report_json(const PtasResult& r)
{
    using nlohmann::json;
    json groups = json::array();
    for (const auto& grp : r.groups) {
        json item{{"group", grp.index},
                  {"contracted_class", grp.contracted_class},
                  {"contracted_n", grp.contracted_n},
                  {"contracted_m", grp.contracted_m},
                  {"width", grp.width},
                  {"status", grp.solved ? "solved" : "skipped: width above limit"}};
        if (grp.solved) {
            item["dp_value"] = format_weight(grp.dp_value);
            item["lifted_value"] = format_weight(grp.lifted_value);
        }
        groups.push_back(std::move(item));
    }
    json out{{"k", r.k},
             {"epsilon", format_weight(r.epsilon)},
             {"coloring_valid", r.coloring.passed},
             {"coloring_violations", r.coloring.violations},
             {"exact_guarantee", r.exact_guarantee},
             {"cut", format_weight(r.solution.cut_value)},
             {"groups", std::move(groups)}};
    return out.dump(2);
}

} // namespace cmc
