/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#include "cmc/graph.hpp"

#include "cmc/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cmc {

struct Graph::Data {
    std::size_t n = 0;
    std::vector<Edge> edges;
    std::vector<std::size_t> offset;  // CSR offsets, size n + 1
    std::vector<Incidence> incidences;
    std::vector<Weight> weighted_degree;
    Weight total_weight = 0;
    std::size_t unit_edges = 0;
    bool zero_one = true;
};

Graph::Graph() : Graph(0, {}) {}

Graph::Graph(std::size_t n, std::vector<Edge> edges)
{
    auto d = std::make_shared<Data>();
    d->n = n;
    d->edges = std::move(edges);
    d->weighted_degree.assign(n, Weight(0));

    std::vector<std::size_t> deg(n, 0);
    for (auto& e : d->edges) {
        if (e.u >= n || e.v >= n)
            throw InvalidInput("edge endpoint out of range: " + std::to_string(e.u) +
                               "-" + std::to_string(e.v) + " with n=" + std::to_string(n));
        if (e.u == e.v)
            throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
        if (e.w < 0)
            throw InvalidInput("negative weight on edge " + std::to_string(e.u) + "-" +
                               std::to_string(e.v));
        if (e.u > e.v)
            std::swap(e.u, e.v);
        ++deg[e.u];
        ++deg[e.v];
        d->weighted_degree[e.u] += e.w;
        d->weighted_degree[e.v] += e.w;
        d->total_weight += e.w;
        if (e.w == 1)
            ++d->unit_edges;
        else if (e.w != 0)
            d->zero_one = false;
    }

    d->offset.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v)
        d->offset[v + 1] = d->offset[v] + deg[v];
    d->incidences.resize(d->offset[n]);
    std::vector<std::size_t> fill(d->offset.begin(), d->offset.end() - 1);
    for (EdgeId id = 0; id < d->edges.size(); ++id) {
        const auto& e = d->edges[id];
        d->incidences[fill[e.u]++] = {e.v, id};
        d->incidences[fill[e.v]++] = {e.u, id};
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto first = d->incidences.begin() + static_cast<std::ptrdiff_t>(d->offset[v]);
        auto last = d->incidences.begin() + static_cast<std::ptrdiff_t>(d->offset[v + 1]);
        std::sort(first, last, [](const Incidence& a, const Incidence& b) {
            return a.neighbor < b.neighbor;
        });
        auto dup = std::adjacent_find(first, last, [](const Incidence& a, const Incidence& b) {
            return a.neighbor == b.neighbor;
        });
        if (dup != last)
            throw InvalidInput("parallel edge " + std::to_string(v) + "-" +
                               std::to_string(dup->neighbor));
    }
    data_ = std::move(d);
}

std::size_t Graph::n() const noexcept { return data_->n; }
std::size_t Graph::m() const noexcept { return data_->edges.size(); }
const std::vector<Edge>& Graph::edges() const noexcept { return data_->edges; }

const Edge& Graph::edge(EdgeId e) const
{
    return data_->edges.at(e);
}

std::span<const Incidence> Graph::incident(Vertex v) const
{
    const auto& d = *data_;
    return {d.incidences.data() + d.offset[v], d.offset[v + 1] - d.offset[v]};
}

std::size_t Graph::degree(Vertex v) const
{
    return data_->offset[v + 1] - data_->offset[v];
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const
{
    if (u >= n() || v >= n())
        return std::nullopt;
    auto inc = incident(u);
    auto it = std::lower_bound(inc.begin(), inc.end(), v, [](const Incidence& a, Vertex x) {
        return a.neighbor < x;
    });
    if (it != inc.end() && it->neighbor == v)
        return it->edge;
    return std::nullopt;
}

const Weight& Graph::weighted_degree(Vertex v) const { return data_->weighted_degree.at(v); }
const Weight& Graph::total_weight() const noexcept { return data_->total_weight; }
std::size_t Graph::count_unit_edges() const noexcept { return data_->unit_edges; }
bool Graph::is_zero_one() const noexcept { return data_->zero_one; }

// ---------------------------------------------------------------------------

VertexSet::VertexSet(std::size_t universe) : bits_(universe, 0) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : bits_(universe, 0)
{
    for (Vertex v : members)
        insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size()))
{
}

VertexSet VertexSet::full(std::size_t universe)
{
    VertexSet s(universe);
    std::fill(s.bits_.begin(), s.bits_.end(), 1);
    s.count_ = universe;
    return s;
}

void VertexSet::insert(Vertex v)
{
    if (v >= bits_.size())
        throw InvalidInput("vertex " + std::to_string(v) + " out of range for n=" +
                           std::to_string(bits_.size()));
    if (!bits_[v]) {
        bits_[v] = 1;
        ++count_;
    }
}

void VertexSet::erase(Vertex v)
{
    if (v < bits_.size() && bits_[v]) {
        bits_[v] = 0;
        --count_;
    }
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    out.reserve(count_);
    for (Vertex v = 0; v < bits_.size(); ++v)
        if (bits_[v])
            out.push_back(v);
    return out;
}

VertexSet VertexSet::complement() const
{
    VertexSet c(bits_.size());
    for (Vertex v = 0; v < bits_.size(); ++v)
        if (!bits_[v])
            c.insert(v);
    return c;
}

// ---------------------------------------------------------------------------

namespace {

void check_universe(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.n())
        throw InvalidInput("vertex set over " + std::to_string(s.universe()) +
                           " vertices used with a graph of " + std::to_string(g.n()));
}

} // namespace

Weight cut_weight(const Graph& g, const VertexSet& s)
{
    check_universe(g, s);
    Weight total = 0;
    for (const auto& e : g.edges())
        if (s.contains(e.u) != s.contains(e.v))
            total += e.w;
    return total;
}

bool is_connected_induced(const Graph& g, const VertexSet& s)
{
    check_universe(g, s);
    if (s.empty())
        return false;
    auto members = s.members();
    std::vector<char> seen(g.n(), 0);
    std::vector<Vertex> stack{members.front()};
    seen[members.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (const auto& inc : g.incident(v)) {
            if (s.contains(inc.neighbor) && !seen[inc.neighbor]) {
                seen[inc.neighbor] = 1;
                ++reached;
                stack.push_back(inc.neighbor);
            }
        }
    }
    return reached == s.size();
}

Solution evaluate(const Graph& g, VertexSet s)
{
    Solution sol;
    sol.cut_value = cut_weight(g, s);
    sol.connected = is_connected_induced(g, s);
    sol.vertices = std::move(s);
    return sol;
}

bool verify(const Graph& g, const Solution& s)
{
    if (s.vertices.universe() != g.n() || s.vertices.empty())
        return false;
    if (s.cut_value != cut_weight(g, s.vertices))
        return false;
    return !s.connected || is_connected_induced(g, s.vertices);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g)
{
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(g.n(), 0);
    for (Vertex r = 0; r < g.n(); ++r) {
        if (seen[r])
            continue;
        std::vector<Vertex> comp{r};
        seen[r] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (const auto& inc : g.incident(comp[i])) {
                if (!seen[inc.neighbor]) {
                    seen[inc.neighbor] = 1;
                    comp.push_back(inc.neighbor);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g)
{
    return g.n() > 0 && connected_components(g).size() == 1;
}

bool is_simple_cycle(const Graph& g)
{
    if (g.n() < 3 || g.m() != g.n())
        return false;
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) != 2)
            return false;
    return is_connected(g);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members)
{
    constexpr Vertex absent = static_cast<Vertex>(-1);
    std::vector<Vertex> local(g.n(), absent);
    for (Vertex i = 0; i < members.size(); ++i) {
        if (members[i] >= g.n())
            throw InvalidInput("induced_subgraph: vertex out of range");
        if (local[members[i]] != absent)
            throw InvalidInput("induced_subgraph: duplicate vertex");
        local[members[i]] = i;
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (local[e.u] != absent && local[e.v] != absent)
            edges.push_back({local[e.u], local[e.v], e.w});
    return {Graph(members.size(), std::move(edges)),
            std::vector<Vertex>(members.begin(), members.end())};
}

VertexSet ContractionMap::lift(const VertexSet& s, std::size_t original_n) const
{
    if (s.universe() != origin.size())
        throw InvalidInput("ContractionMap::lift: set does not match contracted graph");
    VertexSet out(original_n);
    for (Vertex v : s.members())
        for (Vertex o : origin[v])
            out.insert(o);
    return out;
}

Contraction contract_vertex_sets(const Graph& g, const std::vector<std::vector<Vertex>>& parts)
{
    constexpr Vertex absent = static_cast<Vertex>(-1);
    std::vector<Vertex> part_of(g.n(), absent);
    for (Vertex p = 0; p < parts.size(); ++p) {
        if (parts[p].empty())
            throw InvalidInput("contract_vertex_sets: empty part");
        for (Vertex v : parts[p]) {
            if (v >= g.n())
                throw InvalidInput("contract_vertex_sets: vertex out of range");
            if (part_of[v] != absent)
                throw InvalidInput("contract_vertex_sets: parts overlap at vertex " +
                                   std::to_string(v));
            part_of[v] = p;
        }
        if (!is_connected_induced(g, VertexSet(g.n(), parts[p])))
            throw InvalidInput("contract_vertex_sets: part " + std::to_string(p) +
                               " is not connected");
    }
    for (Vertex v = 0; v < g.n(); ++v)
        if (part_of[v] == absent)
            throw InvalidInput("contract_vertex_sets: vertex " + std::to_string(v) +
                               " is not covered by any part");

    std::vector<Edge> merged;
    std::vector<std::vector<std::pair<Vertex, std::size_t>>> slot(parts.size());
    for (const auto& e : g.edges()) {
        Vertex a = part_of[e.u];
        Vertex b = part_of[e.v];
        if (a == b)
            continue;
        if (a > b)
            std::swap(a, b);
        auto& row = slot[a];
        auto it = std::find_if(row.begin(), row.end(), [b](const auto& x) { return x.first == b; });
        if (it == row.end()) {
            row.emplace_back(b, merged.size());
            merged.push_back({a, b, e.w});
        } else {
            merged[it->second].w += e.w;
        }
    }

    ContractionMap map;
    map.origin.reserve(parts.size());
    for (const auto& p : parts) {
        auto sorted = p;
        std::sort(sorted.begin(), sorted.end());
        map.origin.push_back(std::move(sorted));
    }
    return {Graph(parts.size(), std::move(merged)), std::move(map)};
}

Weight ScaledWeights::unscale(std::int64_t value) const
{
    return Weight(BigInt(value), denominator);
}

std::optional<ScaledWeights> scale_to_integers(const Graph& g)
{
    constexpr std::int64_t limit = std::int64_t{1} << 61;
    BigInt den = 1;
    for (const auto& e : g.edges()) {
        BigInt d = boost::multiprecision::denominator(e.w);
        den = boost::multiprecision::lcm(den, d);
        if (den > limit)
            return std::nullopt;
    }
    ScaledWeights out;
    out.denominator = den;
    out.weight.reserve(g.m());
    BigInt total = 0;
    for (const auto& e : g.edges()) {
        BigInt scaled = boost::multiprecision::numerator(e.w) * (den / boost::multiprecision::denominator(e.w));
        total += scaled;
        if (total > limit)
            return std::nullopt;
        out.weight.push_back(scaled.convert_to<std::int64_t>());
    }
    return out;
}

} // namespace cmc
