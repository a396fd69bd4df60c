/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#include "cmc/reductions.hpp"

#include "cmc/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace cmc {

namespace {

int unit_weight(const Weight& w)
{
    if (w == 0)
        return 0;
    if (w == 1)
        return 1;
    throw InvalidInput("reductions require {0,1} edge weights, found " + format_weight(w));
}

/// Mutable adjacency over stable ids. Vertices are tombstoned, never
/// renumbered.
class WorkGraph {
public:
    WorkGraph(const Graph& g, const std::vector<Vertex>& to_stable, std::size_t stable_n)
        : adj_(stable_n), alive_(stable_n, 0)
    {
        for (Vertex v = 0; v < g.n(); ++v)
            alive_[to_stable[v]] = 1;
        for (const auto& e : g.edges()) {
            int w = unit_weight(e.w);
            adj_[to_stable[e.u]][to_stable[e.v]] = w;
            adj_[to_stable[e.v]][to_stable[e.u]] = w;
        }
    }

    explicit WorkGraph(const Graph& g) : WorkGraph(g, identity(g.n()), g.n()) {}

    std::size_t stable_n() const { return adj_.size(); }
    bool alive(Vertex v) const { return v < alive_.size() && alive_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    const std::map<Vertex, int>& adj(Vertex v) const { return adj_[v]; }

    int weight(Vertex a, Vertex b) const
    {
        auto it = adj_[a].find(b);
        return it == adj_[a].end() ? -1 : it->second;
    }

    Vertex add_vertex()
    {
        adj_.emplace_back();
        alive_.push_back(1);
        return static_cast<Vertex>(adj_.size() - 1);
    }

    void revive(Vertex v)
    {
        if (v >= adj_.size()) {
            adj_.resize(v + 1);
            alive_.resize(v + 1, 0);
        }
        alive_[v] = 1;
    }

    void add_edge(Vertex a, Vertex b, int w)
    {
        adj_[a][b] = w;
        adj_[b][a] = w;
    }

    void remove_edge(Vertex a, Vertex b)
    {
        adj_[a].erase(b);
        adj_[b].erase(a);
    }

    void remove_vertex(Vertex v)
    {
        for (const auto& [u, w] : adj_[v])
            adj_[u].erase(v);
        adj_[v].clear();
        alive_[v] = 0;
    }

    struct Compacted {
        Graph graph;
        std::vector<Vertex> to_stable;
    };

    Compacted compact() const
    {
        std::vector<Vertex> to_stable;
        std::vector<Vertex> dense(adj_.size(), 0);
        for (Vertex v = 0; v < adj_.size(); ++v) {
            if (alive_[v]) {
                dense[v] = static_cast<Vertex>(to_stable.size());
                to_stable.push_back(v);
            }
        }
        std::vector<Edge> edges;
        for (Vertex v : to_stable)
            for (const auto& [u, w] : adj_[v])
                if (v < u)
                    edges.push_back({dense[v], dense[u], Weight(w)});
        return {Graph(to_stable.size(), std::move(edges)), std::move(to_stable)};
    }

    long cut(const std::vector<char>& in) const
    {
        long total = 0;
        for (Vertex v = 0; v < adj_.size(); ++v)
            if (alive_[v] && in[v])
                for (const auto& [u, w] : adj_[v])
                    if (!in[u])
                        total += w;
        return total;
    }

    bool connected(const std::vector<char>& in) const
    {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < adj_.size(); ++v)
            if (in[v]) {
                if (!alive_[v])
                    return false;
                members.push_back(v);
            }
        if (members.empty())
            return false;
        std::vector<char> seen(adj_.size(), 0);
        std::vector<Vertex> stack{members.front()};
        seen[members.front()] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (const auto& [u, w] : adj_[v])
                if (in[u] && !seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        return reached == members.size();
    }

private:
    static std::vector<Vertex> identity(std::size_t n)
    {
        std::vector<Vertex> id(n);
        for (Vertex i = 0; i < n; ++i)
            id[i] = i;
        return id;
    }

    std::vector<std::map<Vertex, int>> adj_;
    std::vector<char> alive_;
};

void check_zero_one(const Graph& g)
{
    for (const auto& e : g.edges())
        unit_weight(e.w);
}

// Forward application of one step; shared by the reductions and replay().
void apply(WorkGraph& wg, const ZeroVertexRemoval& s)
{
    wg.remove_vertex(s.vertex);
    for (auto [a, b] : s.added_edges)
        wg.add_edge(a, b, 0);
}

void apply(WorkGraph& wg, const D2Contraction& s)
{
    auto [v0, v1, v2, v3] = s.path;
    wg.remove_vertex(v1);
    wg.remove_vertex(v2);
    wg.revive(s.merged);
    wg.add_edge(v0, s.merged, s.new_weights[0]);
    wg.add_edge(s.merged, v3, s.new_weights[1]);
}

std::optional<D2Contraction> find_d2_run(const WorkGraph& wg)
{
    for (Vertex v0 = 0; v0 < wg.stable_n(); ++v0) {
        if (!wg.alive(v0) || wg.degree(v0) == 2)
            continue;
        for (const auto& [v1, w0] : wg.adj(v0)) {
            if (wg.degree(v1) != 2)
                continue;
            auto other = [&](Vertex mid, Vertex from) {
                for (const auto& [x, w] : wg.adj(mid))
                    if (x != from)
                        return x;
                return from;
            };
            Vertex v2 = other(v1, v0);
            if (wg.degree(v2) != 2)
                continue;
            Vertex v3 = other(v2, v1);
            if (wg.degree(v3) != 2)
                continue;
            D2Contraction c{};
            c.path = {v0, v1, v2, v3};
            c.path_weights = {w0, wg.weight(v1, v2), wg.weight(v2, v3)};
            int ones = c.path_weights[0] + c.path_weights[1] + c.path_weights[2];
            c.ones = std::min(ones, 2);
            if (ones >= 2)
                c.new_weights = {1, 1};
            else if (ones == 1)
                c.new_weights = {0, 1};
            else
                c.new_weights = {0, 0};
            return c;
        }
    }
    return std::nullopt;
}

ReductionStage finish_stage(const Graph& input, WorkGraph& wg, std::vector<ReductionStep> steps)
{
    auto compacted = wg.compact();
    ReductionStage stage;
    stage.input = input;
    stage.steps = std::move(steps);
    stage.stable_n = wg.stable_n();
    stage.output = std::move(compacted.graph);
    stage.output_to_stable = std::move(compacted.to_stable);
    return stage;
}

Reduced contract_core(const Graph& g)
{
    check_zero_one(g);
    WorkGraph wg(g);
    std::vector<ReductionStep> steps;
    while (auto run = find_d2_run(wg)) {
        run->merged = wg.add_vertex();
        apply(wg, *run);
        steps.emplace_back(*run);
    }
    auto stage = finish_stage(g, wg, std::move(steps));
    Graph out = stage.output;
    return {out, ReductionTrace(std::move(stage))};
}

// --- lifting ---------------------------------------------------------------

void undo(WorkGraph& wg, const ZeroVertexRemoval& s, std::vector<char>& in)
{
    for (auto [a, b] : s.added_edges)
        wg.remove_edge(a, b);
    wg.revive(s.vertex);
    for (Vertex u : s.neighbors)
        wg.add_edge(s.vertex, u, 0);
    if (in.size() < wg.stable_n())
        in.resize(wg.stable_n(), 0);
    if (!wg.connected(in))
        in[s.vertex] = 1;
}

void undo(WorkGraph& wg, const D2Contraction& s, std::vector<char>& in)
{
    auto [v0, v1, v2, v3] = s.path;
    Vertex vn = s.merged;
    bool has0 = in[v0] != 0;
    bool has3 = in[v3] != 0;
    bool hasn = in[vn] != 0;
    bool cut0 = has0 != hasn;
    bool cut1 = hasn != has3;

    wg.remove_vertex(vn);
    in[vn] = 0;
    wg.revive(v1);
    wg.revive(v2);
    wg.add_edge(v0, v1, s.path_weights[0]);
    wg.add_edge(v1, v2, s.path_weights[1]);
    wg.add_edge(v2, v3, s.path_weights[2]);
    if (in.size() < wg.stable_n())
        in.resize(wg.stable_n(), 0);

    auto best_of = [&](const std::vector<std::vector<Vertex>>& extras, bool clear_first) {
        std::vector<char> base = in;
        if (clear_first)
            std::fill(base.begin(), base.end(), 0);
        std::vector<char> best;
        long best_cut = -1;
        for (const auto& extra : extras) {
            auto cand = base;
            for (Vertex x : extra)
                cand[x] = 1;
            long c = wg.cut(cand);
            if (c > best_cut) {
                best_cut = c;
                best = std::move(cand);
            }
        }
        in = std::move(best);
    };

    if (cut0 && cut1) {
        if (hasn)
            best_of({{v1}, {v2}, {v1, v2}}, true);
        else
            best_of({{}, {v1}, {v2}}, false);
    } else if (cut0 || cut1) {
        // The heaviest path edge separates the part kept with v0 from the
        // part kept with v3.
        int k = 0;
        for (int i = 1; i < 3; ++i)
            if (s.path_weights[i] > s.path_weights[k])
                k = i;
        if (has0) {
            if (k >= 1)
                in[v1] = 1;
            if (k >= 2)
                in[v2] = 1;
        }
        if (has3) {
            if (k <= 1)
                in[v2] = 1;
            if (k == 0)
                in[v1] = 1;
        }
    } else if (hasn) {
        in[v1] = 1;
        in[v2] = 1;
    }
}

VertexSet lift_stage(const ReductionStage& stage, const VertexSet& s)
{
    if (s.universe() != stage.output.n())
        throw InvariantViolation("lift_solution: set has universe " + std::to_string(s.universe()) +
                                 " but the reduced graph has " +
                                 std::to_string(stage.output.n()) + " vertices");
    if (stage.output.n() == 0) {
        if (stage.input.n() == 0)
            throw InvariantViolation("lift_solution: original graph is empty");
        // Lifting continues with the lowest original vertex.
        return VertexSet(stage.input.n(), {0});
    }
    WorkGraph wg(stage.output, stage.output_to_stable, stage.stable_n);
    std::vector<char> in(stage.stable_n, 0);
    for (Vertex v : s.members())
        in[stage.output_to_stable[v]] = 1;
    for (auto it = stage.steps.rbegin(); it != stage.steps.rend(); ++it)
        std::visit([&](const auto& step) { undo(wg, step, in); }, *it);

    VertexSet out(stage.input.n());
    for (Vertex v = 0; v < in.size(); ++v) {
        if (!in[v])
            continue;
        if (v >= stage.input.n())
            throw InvariantViolation("lift_solution: created vertex survived lifting");
        out.insert(v);
    }
    return out;
}

} // namespace

ReductionTrace::ReductionTrace(ReductionStage stage) { stages_.push_back(std::move(stage)); }

std::size_t ReductionTrace::step_count() const noexcept
{
    std::size_t total = 0;
    for (const auto& s : stages_)
        total += s.steps.size();
    return total;
}

void ReductionTrace::append(ReductionTrace next)
{
    if (!stages_.empty() && !next.stages_.empty() &&
        stages_.back().output.n() != next.stages_.front().input.n())
        throw InvariantViolation("ReductionTrace::append: stage graphs do not chain");
    for (auto& s : next.stages_)
        stages_.push_back(std::move(s));
}

Reduced ensure_one_edges(const Graph& g)
{
    check_zero_one(g);
    WorkGraph wg(g);
    std::vector<ReductionStep> steps;
    // Removing a vertex only adds 0-edges, so no other vertex changes status
    // and one increasing sweep suffices.
    for (Vertex v = 0; v < g.n(); ++v) {
        bool has_one = false;
        for (const auto& [u, w] : wg.adj(v))
            has_one = has_one || w == 1;
        if (has_one)
            continue;
        ZeroVertexRemoval step;
        step.vertex = v;
        for (const auto& [u, w] : wg.adj(v))
            step.neighbors.push_back(u);
        for (std::size_t i = 0; i < step.neighbors.size(); ++i)
            for (std::size_t j = i + 1; j < step.neighbors.size(); ++j)
                if (wg.weight(step.neighbors[i], step.neighbors[j]) < 0)
                    step.added_edges.emplace_back(step.neighbors[i], step.neighbors[j]);
        apply(wg, step);
        steps.emplace_back(std::move(step));
    }
    auto stage = finish_stage(g, wg, std::move(steps));
    Graph out = stage.output;
    return {out, ReductionTrace(std::move(stage))};
}

Reduced contract_d2_paths(const Graph& g)
{
    if (!is_connected(g))
        throw InvalidInput("contract_d2_paths: graph must be connected");
    if (is_simple_cycle(g))
        throw CycleInput("contract_d2_paths: graph is a simple cycle; use cycle_solve");
    return contract_core(g);
}

Reduced contract_d2_paths_per_component(const Graph& g)
{
    return contract_core(g);
}

bool has_no_long_d2_paths(const Graph& g)
{
    for (Vertex v = 0; v < g.n(); ++v) {
        if (g.degree(v) != 2)
            continue;
        auto inc = g.incident(v);
        if (g.degree(inc[0].neighbor) == 2 && g.degree(inc[1].neighbor) == 2)
            return false;
    }
    return true;
}

Solution lift_solution(const ReductionTrace& trace, const VertexSet& s)
{
    if (trace.stages().empty())
        throw InvariantViolation("lift_solution: trace has no stages");
    VertexSet cur = s;
    const auto& stages = trace.stages();
    for (auto it = stages.rbegin(); it != stages.rend(); ++it)
        cur = lift_stage(*it, cur);
    auto sol = evaluate(stages.front().input, std::move(cur));
    if (!sol.connected)
        throw InvariantViolation("lift_solution: lifted set is not connected");
    return sol;
}

Solution lift_solution(const ReductionTrace& trace, const Solution& s)
{
    if (trace.stages().empty())
        return s;
    auto out = lift_solution(trace, s.vertices);
    if (out.cut_value < s.cut_value)
        throw InvariantViolation("lift_solution: lifted cut " + format_weight(out.cut_value) +
                                 " is below the reduced cut " + format_weight(s.cut_value));
    return out;
}

Graph replay(const ReductionTrace& trace)
{
    Graph cur;
    bool first = true;
    for (const auto& stage : trace.stages()) {
        if (!first && cur.n() != stage.input.n())
            throw InvariantViolation("replay: stage graphs do not chain");
        first = false;
        WorkGraph wg(stage.input);
        for (const auto& step : stage.steps) {
            if (const auto* c = std::get_if<D2Contraction>(&step))
                wg.revive(c->merged);
            std::visit([&](const auto& st) { apply(wg, st); }, step);
        }
        cur = wg.compact().graph;
    }
    return cur;
}

std::string trace_to_json(const ReductionTrace& trace)
{
    using nlohmann::json;
    json stages = json::array();
    for (const auto& stage : trace.stages()) {
        json steps = json::array();
        for (const auto& step : stage.steps) {
            if (const auto* z = std::get_if<ZeroVertexRemoval>(&step)) {
                json added = json::array();
                for (auto [a, b] : z->added_edges)
                    added.push_back({a, b});
                steps.push_back({{"type", "zero_vertex_removal"},
                                 {"vertex", z->vertex},
                                 {"neighbors", z->neighbors},
                                 {"added_edges", added}});
            } else {
                const auto& c = std::get<D2Contraction>(step);
                steps.push_back({{"type", "d2_contraction"},
                                 {"path", c.path},
                                 {"path_weights", c.path_weights},
                                 {"merged", c.merged},
                                 {"new_weights", c.new_weights},
                                 {"ones", c.ones}});
            }
        }
        stages.push_back({{"input_n", stage.input.n()},
                          {"output_n", stage.output.n()},
                          {"stable_n", stage.stable_n},
                          {"output_to_stable", stage.output_to_stable},
                          {"steps", steps}});
    }
    return json{{"stages", stages}}.dump();
}

} // namespace cmc
