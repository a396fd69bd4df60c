/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#include "cmc/thick_tree.hpp"

#include "cmc/error.hpp"
#include "cmc/reductions.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <variant>

namespace cmc {

namespace {

Solution best_single_vertex(const Graph& g, const std::vector<Vertex>& among)
{
    Vertex best = among.front();
    for (Vertex v : among)
        if (g.weighted_degree(v) > g.weighted_degree(best))
            best = v;
    return evaluate(g, VertexSet(g.n(), {best}));
}

std::vector<Vertex> all_vertices(const Graph& g)
{
    std::vector<Vertex> vs(g.n());
    std::iota(vs.begin(), vs.end(), Vertex{0});
    return vs;
}

class TreeAdjacency {
public:
    explicit TreeAdjacency(std::size_t n) : adj_(n) {}

    void add(Vertex a, Vertex b) { adj_[a].insert(b), adj_[b].insert(a); }
    void remove(Vertex a, Vertex b) { adj_[a].erase(b), adj_[b].erase(a); }
    bool has(Vertex a, Vertex b) const { return adj_[a].count(b) != 0; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    const std::set<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    std::size_t n() const { return adj_.size(); }

    std::size_t count_degree_two() const
    {
        std::size_t c = 0;
        for (const auto& a : adj_)
            c += a.size() == 2;
        return c;
    }

    /// Vertex sequence from `from` to `to` along the tree.
    std::vector<Vertex> path(Vertex from, Vertex to) const
    {
        std::vector<Vertex> parent(n(), static_cast<Vertex>(-1));
        std::deque<Vertex> queue{to};
        parent[to] = to;
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            if (x == from)
                break;
            for (Vertex y : adj_[x])
                if (parent[y] == static_cast<Vertex>(-1))
                    parent[y] = x, queue.push_back(y);
        }
        if (parent[from] == static_cast<Vertex>(-1))
            throw InvariantViolation("spanning tree is disconnected");
        std::vector<Vertex> out{from};
        while (out.back() != to)
            out.push_back(parent[out.back()]);
        return out;
    }

    /// Maximal runs of tree-degree-two vertices, each in walk order.
    std::vector<std::vector<Vertex>> degree_two_runs() const
    {
        std::vector<char> seen(n(), 0);
        std::vector<std::vector<Vertex>> runs;
        for (Vertex s = 0; s < n(); ++s) {
            if (seen[s] || degree(s) != 2)
                continue;
            std::deque<Vertex> run{s};
            seen[s] = 1;
            for (int side = 0; side < 2; ++side) {
                Vertex prev = s;
                Vertex cur = side == 0 ? *adj_[s].begin() : *adj_[s].rbegin();
                while (degree(cur) == 2 && !seen[cur]) {
                    seen[cur] = 1;
                    side == 0 ? run.push_front(cur) : run.push_back(cur);
                    Vertex next = *adj_[cur].begin() == prev ? *adj_[cur].rbegin()
                                                             : *adj_[cur].begin();
                    prev = cur;
                    cur = next;
                }
            }
            runs.emplace_back(run.begin(), run.end());
        }
        return runs;
    }

private:
    std::vector<std::set<Vertex>> adj_;
};

TreeAdjacency adjacency_of(const Graph& g, const std::vector<EdgeId>& edges)
{
    TreeAdjacency t(g.n());
    for (EdgeId e : edges)
        t.add(g.edge(e).u, g.edge(e).v);
    return t;
}

std::size_t degree_two_after(const TreeAdjacency& t, std::size_t before, Vertex a, Vertex b,
                             Vertex c, Vertex d)
{
    // Degree changes of adding a-b then removing c-d.
    std::vector<std::pair<Vertex, int>> delta{{a, 1}, {b, 1}, {c, -1}, {d, -1}};
    std::vector<Vertex> touched{a, b, c, d};
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    long count = static_cast<long>(before);
    for (Vertex x : touched) {
        long deg = static_cast<long>(t.degree(x));
        long next = deg;
        for (auto [y, k] : delta)
            if (y == x)
                next += k;
        count += (next == 2) - (deg == 2);
    }
    return static_cast<std::size_t>(count);
}

// Candidate sets are produced on successively reduced or restricted graphs
// and mapped back layer by layer.
struct Restriction {
    std::size_t parent_n;
    std::vector<Vertex> to_parent;
};

using Layer = std::variant<ReductionTrace, Restriction>;

VertexSet lift_through(const std::vector<Layer>& chain, VertexSet s)
{
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        if (const auto* trace = std::get_if<ReductionTrace>(&*it)) {
            s = lift_solution(*trace, s).vertices;
        } else {
            const auto& r = std::get<Restriction>(*it);
            VertexSet up(r.parent_n);
            for (Vertex v : s.members())
                up.insert(r.to_parent[v]);
            s = std::move(up);
        }
    }
    return s;
}

struct Candidate {
    ThickTree tree;
    Solution local;
};

Candidate solve_piece(const Graph& piece)
{
    if (is_simple_cycle(piece)) {
        std::vector<EdgeId> path(piece.m() - 1);
        std::iota(path.begin(), path.end(), EdgeId{1});
        return {make_thick_tree(piece, std::move(path)), cycle_solve(piece)};
    }
    auto tree = leafy_spanning_tree(piece);
    auto local = thick_tree_cut(tree);
    return {std::move(tree), std::move(local)};
}

} // namespace

ThickTree make_thick_tree(const Graph& host, std::vector<EdgeId> tree_edges, Vertex lone_vertex)
{
    ThickTree t;
    t.host = host;
    t.vertices = VertexSet(host.n());
    t.leaves = VertexSet(host.n());
    std::sort(tree_edges.begin(), tree_edges.end());
    if (std::adjacent_find(tree_edges.begin(), tree_edges.end()) != tree_edges.end())
        throw InvalidInput("tree edge listed twice");
    if (tree_edges.empty()) {
        if (lone_vertex >= host.n())
            throw InvalidInput("tree vertex out of range");
        t.vertices.insert(lone_vertex);
    }
    std::vector<std::size_t> deg(host.n(), 0);
    for (EdgeId e : tree_edges) {
        const auto& ed = host.edge(e);
        t.vertices.insert(ed.u);
        t.vertices.insert(ed.v);
        ++deg[ed.u];
        ++deg[ed.v];
    }
    if (tree_edges.size() + 1 != t.vertices.size())
        throw InvalidInput("tree edges do not form a tree");
    auto members = t.vertices.members();
    std::vector<Edge> kept;
    for (EdgeId e : tree_edges) {
        const auto& ed = host.edge(e);
        auto lu = std::lower_bound(members.begin(), members.end(), ed.u) - members.begin();
        auto lv = std::lower_bound(members.begin(), members.end(), ed.v) - members.begin();
        kept.push_back({static_cast<Vertex>(lu), static_cast<Vertex>(lv), Weight(1)});
    }
    if (!is_connected(Graph(members.size(), std::move(kept))))
        throw InvalidInput("tree edges do not form a tree");
    for (Vertex v : members)
        if (deg[v] <= 1)
            t.leaves.insert(v);
    for (Vertex v : t.leaves.members())
        t.leaf_weight += host.weighted_degree(v);
    auto eta = host.count_unit_edges();
    t.thickness = eta == 0 ? Weight(0) : Weight(t.leaf_weight / eta);
    t.tree_edges = std::move(tree_edges);
    return t;
}

std::size_t longest_tree_d2_run(const ThickTree& t)
{
    auto adj = adjacency_of(t.host, t.tree_edges);
    std::size_t best = 0;
    for (const auto& run : adj.degree_two_runs())
        best = std::max(best, run.size());
    return best;
}

Solution cycle_solve(const Graph& g)
{
    if (!is_simple_cycle(g))
        throw InvalidInput("cycle_solve: graph is not a simple cycle");
    EdgeId first = 0;
    for (EdgeId e = 1; e < g.m(); ++e)
        if (g.edge(e).w > g.edge(first).w)
            first = e;
    EdgeId second = first == 0 ? 1 : 0;
    for (EdgeId e = 0; e < g.m(); ++e)
        if (e != first && g.edge(e).w > g.edge(second).w)
            second = e;
    // The arc is the piece left after cutting both edges that holds the
    // lowest vertex id.
    std::vector<Edge> rest;
    for (EdgeId e = 0; e < g.m(); ++e)
        if (e != first && e != second)
            rest.push_back({g.edge(e).u, g.edge(e).v, Weight(1)});
    auto pieces = connected_components(Graph(g.n(), std::move(rest)));
    return evaluate(g, VertexSet(g.n(), pieces.front()));
}

ThickTree leafy_spanning_tree(const Graph& g)
{
    if (g.n() == 0 || !is_connected(g))
        throw InvalidInput("leafy_spanning_tree: graph must be connected and nonempty");
    if (is_simple_cycle(g))
        throw CycleInput("leafy_spanning_tree: graph is a simple cycle");
    if (!has_no_long_d2_paths(g))
        throw InvalidInput("leafy_spanning_tree: graph has a d-2 path of length three");

    Vertex root = 0;
    for (Vertex v = 1; v < g.n(); ++v)
        if (g.degree(v) > g.degree(root))
            root = v;
    TreeAdjacency t(g.n());
    {
        std::vector<char> seen(g.n(), 0);
        std::deque<Vertex> queue{root};
        seen[root] = 1;
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (const auto& inc : g.incident(x))
                if (!seen[inc.neighbor])
                    seen[inc.neighbor] = 1, t.add(x, inc.neighbor), queue.push_back(inc.neighbor);
        }
    }

    for (;;) {
        std::vector<Vertex> window;
        for (const auto& run : t.degree_two_runs())
            if (run.size() >= 7) {
                window.assign(run.begin(), run.begin() + 7);
                break;
            }
        if (window.empty())
            break;

        auto in_window = [&](Vertex x) {
            return std::find(window.begin(), window.end(), x) != window.end();
        };
        auto same_edge = [](Vertex a, Vertex b, Vertex c, Vertex d) {
            return (a == c && b == d) || (a == d && b == c);
        };
        const std::size_t before = t.count_degree_two();
        bool swapped = false;
        for (int idx = 2; idx <= 4 && !swapped; ++idx) {
            Vertex vi = window[idx];
            if (g.degree(vi) < 3)
                continue;
            std::vector<Vertex> options;
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& inc : g.incident(vi))
                    if (!t.has(vi, inc.neighbor) && in_window(inc.neighbor) == (pass == 1))
                        options.push_back(inc.neighbor);
            for (Vertex w : options) {
                auto cyc = t.path(vi, w);
                std::vector<std::pair<Vertex, Vertex>> removable;
                for (std::size_t k = 0; k + 1 < cyc.size(); ++k)
                    removable.emplace_back(cyc[k], cyc[k + 1]);
                for (auto [a, b] : {std::pair{window[0], window[1]}, std::pair{window[5], window[6]}}) {
                    auto hit = std::find_if(removable.begin(), removable.end(), [&](auto p) {
                        return same_edge(p.first, p.second, a, b);
                    });
                    if (hit != removable.end()) {
                        removable = {*hit};
                        break;
                    }
                }
                std::optional<std::pair<Vertex, Vertex>> pick;
                std::size_t pick_count = before;
                for (auto [a, b] : removable) {
                    auto after = degree_two_after(t, before, vi, w, a, b);
                    if (after < pick_count)
                        pick = std::pair{a, b}, pick_count = after;
                }
                if (pick) {
                    t.add(vi, w);
                    t.remove(pick->first, pick->second);
                    swapped = true;
                    break;
                }
            }
        }
        if (!swapped)
            throw InvariantViolation("leafy_spanning_tree: no improving edge swap found");
    }

    std::vector<EdgeId> edges;
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex u : t.neighbors(v))
            if (v < u)
                edges.push_back(*g.find_edge(v, u));
    return make_thick_tree(g, std::move(edges), root);
}

LeafBipartition leaf_bipartition(const Graph& g, const VertexSet& l)
{
    if (l.universe() != g.n())
        throw InvalidInput("leaf_bipartition: set universe does not match graph");
    std::vector<char> side(g.n(), 0);
    auto members = l.members();
    for (Vertex v : members)
        side[v] = v % 2 == 0 ? 1 : 2;

    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v : members) {
            Weight same;
            Weight cross;
            for (const auto& inc : g.incident(v)) {
                if (!side[inc.neighbor])
                    continue;
                (side[inc.neighbor] == side[v] ? same : cross) += g.edge(inc.edge).w;
            }
            if (same > cross) {
                side[v] = side[v] == 1 ? 2 : 1;
                changed = true;
            }
        }
    }

    LeafBipartition b{VertexSet(g.n()), VertexSet(g.n()), Weight(0)};
    for (Vertex v : members)
        (side[v] == 1 ? b.part1 : b.part2).insert(v);
    for (const auto& e : g.edges())
        if (side[e.u] && side[e.v] && side[e.u] != side[e.v])
            b.crossing_ones += e.w;
    return b;
}

Solution thick_tree_cut(const ThickTree& t)
{
    const auto& g = t.host;
    auto members = t.vertices.members();
    if (members.empty())
        throw InvalidInput("thick_tree_cut: empty tree");
    if (members.size() <= 2)
        return best_single_vertex(g, members);

    auto bip = leaf_bipartition(g, t.leaves);
    std::optional<Solution> best;
    for (const auto* part : {&bip.part1, &bip.part2}) {
        VertexSet keep(g.n());
        for (Vertex v : members)
            if (!part->contains(v))
                keep.insert(v);
        if (keep.empty())
            continue;
        auto sol = evaluate(g, std::move(keep));
        if (!sol.connected)
            continue;
        if (!best || sol.cut_value > best->cut_value)
            best = std::move(sol);
    }
    return best ? *best : best_single_vertex(g, members);
}

BcmcReport bcmc_approx_report(const Graph& g, std::uint64_t)
{
    if (g.n() == 0)
        throw InvalidInput("bcmc_approx: graph has no vertices");
    if (!g.is_zero_one())
        throw InvalidInput("bcmc_approx: weights must be 0 or 1");

    BcmcReport report;
    std::optional<Solution> best;
    auto offer = [&](const VertexSet& original) {
        auto sol = evaluate(g, original);
        if (!sol.connected)
            throw InvariantViolation("bcmc_approx: lifted candidate is disconnected");
        report.candidate_cuts.push_back(sol.cut_value);
        if (!best || sol.cut_value > best->cut_value)
            best = std::move(sol);
    };

    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        std::vector<Layer> chain{Restriction{g.n(), sub.to_parent}};

        auto ones = ensure_one_edges(sub.graph);
        chain.emplace_back(ones.trace);
        Graph h = ones.graph;
        if (h.n() == 0) {
            offer(lift_through(chain, VertexSet(0)));
            continue;
        }
        for (;;) {
            auto contracted = contract_d2_paths_per_component(h);
            chain.emplace_back(contracted.trace);
            h = contracted.graph;
            ++report.iterations;

            VertexSet leaves(h.n());
            for (const auto& piece : connected_components(h)) {
                auto ind = induced_subgraph(h, piece);
                auto cand = solve_piece(ind.graph);
                auto lifted = lift_through(chain, [&] {
                    VertexSet up(h.n());
                    for (Vertex v : cand.local.vertices.members())
                        up.insert(ind.to_parent[v]);
                    return up;
                }());
                offer(lifted);
                for (Vertex v : cand.tree.leaves.members())
                    leaves.insert(ind.to_parent[v]);
            }

            std::vector<Vertex> keep;
            for (Vertex v = 0; v < h.n(); ++v)
                if (!leaves.contains(v))
                    keep.push_back(v);
            if (keep.empty())
                break;
            auto rest = induced_subgraph(h, keep);
            chain.emplace_back(Restriction{h.n(), rest.to_parent});
            h = rest.graph;
        }
    }
    report.best = std::move(*best);
    return report;
}

Solution bcmc_approx(const Graph& g, std::uint64_t seed)
{
    return bcmc_approx_report(g, seed).best;
}

std::vector<WeightClass> weight_class_split(const Graph& g, const Weight& eps)
{
    if (eps <= 0)
        throw InvalidInput("weight_class_split: epsilon must be positive");
    Weight w_max;
    for (const auto& e : g.edges())
        w_max = std::max(w_max, e.w);
    if (w_max == 0)
        return {};

    const Weight w0 = eps * w_max / g.m();
    const Weight ratio = 1 + eps;
    std::vector<WeightClass> classes;
    for (Weight lower = w0; lower <= w_max; lower *= ratio) {
        if (classes.size() >= 100000)
            throw SizeGuardError("weight_class_split: too many classes; increase epsilon");
        WeightClass c;
        c.index = classes.size();
        c.lower = lower;
        c.upper = lower * ratio;
        classes.push_back(std::move(c));
    }
    for (EdgeId id = 0; id < g.m(); ++id) {
        const auto& w = g.edge(id).w;
        if (w < w0)
            continue;
        auto it = std::upper_bound(classes.begin(), classes.end(), w,
                                   [](const Weight& x, const WeightClass& c) { return x < c.lower; });
        (it - 1)->edges.push_back(id);
    }
    for (auto& c : classes) {
        std::vector<Edge> bin;
        bin.reserve(g.m());
        for (const auto& e : g.edges())
            bin.push_back({e.u, e.v, Weight(0)});
        for (EdgeId id : c.edges)
            bin[id].w = 1;
        c.binarized = Graph(g.n(), std::move(bin));
    }
    return classes;
}

Solution wcmc_approx(const Graph& g, const Weight& eps, std::uint64_t seed)
{
    if (g.n() == 0)
        throw InvalidInput("wcmc_approx: graph has no vertices");
    std::optional<Solution> best;
    for (const auto& c : weight_class_split(g, eps)) {
        if (c.edges.empty())
            continue;
        auto sol = evaluate(g, bcmc_approx(c.binarized, seed).vertices);
        if (!best || sol.cut_value > best->cut_value)
            best = std::move(sol);
    }
    return best ? *best : best_single_vertex(g, all_vertices(g));
}

RandomHalfStats random_half_sample(const Graph& g, std::size_t trials, std::uint64_t seed)
{
    if (g.n() == 0)
        throw InvalidInput("random_half_cmc: graph has no vertices");
    if (trials == 0)
        throw InvalidInput("random_half_cmc: trials must be positive");
    RandomHalfStats stats;
    stats.trials = trials;
    std::optional<Solution> best;
    for (std::size_t t = 0; t < trials; ++t) {
        // One independent stream per trial keeps results reproducible
        // however trials are scheduled.
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
        std::mt19937_64 rng(seq);
        VertexSet s(g.n());
        std::uint64_t word = 0;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (v % 64 == 0)
                word = rng();
            if ((word >> (v % 64)) & 1U)
                s.insert(v);
        }
        if (s.empty())
            continue;
        auto sol = evaluate(g, std::move(s));
        if (!sol.connected)
            continue;
        ++stats.accepted;
        stats.accepted_cut_sum += sol.cut_value;
        if (!best || sol.cut_value > best->cut_value)
            best = std::move(sol);
    }
    stats.best = best ? *best : best_single_vertex(g, all_vertices(g));
    return stats;
}

Solution random_half_cmc(const Graph& g, std::size_t trials, std::uint64_t seed)
{
    return random_half_sample(g, trials, seed).best;
}

} // namespace cmc
