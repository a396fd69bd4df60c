/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#include "cmc/generators.hpp"

#include "cmc/error.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace cmc {

namespace {

constexpr std::size_t kMaxVertices = 1u << 20;

using Rng = std::mt19937_64;

std::uint64_t draw(Rng& rng, std::uint64_t bound)
{
    return rng() % bound;
}

struct Args {
    const FamilySpec& spec;

    void expect(std::size_t count) const
    {
        if (spec.args.size() != count)
            throw InvalidInput(spec.family + " takes " + std::to_string(count) + " argument(s), got " +
                               std::to_string(spec.args.size()));
    }

    std::size_t count(std::size_t i, std::size_t lo, std::size_t hi = kMaxVertices) const
    {
        const Weight& a = spec.args.at(i);
        if (boost::multiprecision::denominator(a) != 1 || a < lo || a > hi)
            throw InvalidInput(spec.family + ": argument " + std::to_string(i + 1) + " must be an integer in [" +
                               std::to_string(lo) + ", " + std::to_string(hi) + "]");
        return static_cast<std::size_t>(boost::multiprecision::numerator(a));
    }

    /// A probability as num/den with den bounded so draws stay in 64 bits.
    std::pair<std::uint64_t, std::uint64_t> probability(std::size_t i) const
    {
        const Weight& p = spec.args.at(i);
        if (p < 0 || p > 1)
            throw InvalidInput(spec.family + ": probability must lie in [0, 1]");
        BigInt num = boost::multiprecision::numerator(p);
        BigInt den = boost::multiprecision::denominator(p);
        if (den > (BigInt(1) << 32))
            throw InvalidInput(spec.family + ": probability denominator too large");
        return {static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den)};
    }
};

bool coin(Rng& rng, std::pair<std::uint64_t, std::uint64_t> p)
{
    return draw(rng, p.second) < p.first;
}

/// Cyclic neighbor order of a straight-line drawing.
Rotation rotation_from_points(const Graph& g, const std::vector<std::pair<double, double>>& pt)
{
    Rotation rot(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        for (const auto& inc : g.incident(v))
            rot[v].push_back(inc.neighbor);
        auto angle = [&](Vertex u) { return std::atan2(pt[u].second - pt[v].second, pt[u].first - pt[v].first); };
        std::sort(rot[v].begin(), rot[v].end(), [&](Vertex a, Vertex b) { return angle(a) < angle(b); });
    }
    return rot;
}

std::vector<std::pair<double, double>> circle_points(std::size_t n)
{
    std::vector<std::pair<double, double>> pt(n);
    for (std::size_t i = 0; i < n; ++i) {
        double t = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        pt[i] = {std::cos(t), std::sin(t)};
    }
    return pt;
}

std::vector<Edge> spanning_tree_edges(std::size_t n, Rng& rng)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        auto parent = static_cast<Vertex>(draw(rng, v));
        edges.push_back({parent, v, Weight(1)});
    }
    return edges;
}

/// Spanning tree plus G(n,p) extras, all with unit weight.
std::vector<Edge> connected_edges(std::size_t n, std::pair<std::uint64_t, std::uint64_t> p, Rng& rng)
{
    auto edges = spanning_tree_edges(n, rng);
    std::set<std::pair<Vertex, Vertex>> present;
    for (const auto& e : edges)
        present.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng, p) && !present.count({u, v}))
                edges.push_back({u, v, Weight(1)});
    return edges;
}

GraphFile finish(std::size_t n, std::vector<Edge> edges)
{
    for (auto& e : edges)
        if (e.u > e.v)
            std::swap(e.u, e.v);
    GraphFile f;
    f.graph = Graph(n, std::move(edges));
    f.labels = default_labels(n);
    return f;
}

GraphFile with_points(GraphFile f, const std::vector<std::pair<double, double>>& pt)
{
    f.rotation = rotation_from_points(f.graph, pt);
    return f;
}

GraphFile outerplanar(std::size_t n, std::size_t chords, Rng& rng)
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.push_back({i, static_cast<Vertex>((i + 1) % n), Weight(1)});
    std::vector<std::pair<Vertex, Vertex>> placed;
    auto crosses = [](std::pair<Vertex, Vertex> a, std::pair<Vertex, Vertex> b) {
        return (a.first < b.first && b.first < a.second && a.second < b.second) ||
               (b.first < a.first && a.first < b.second && b.second < a.second);
    };
    // Rejection sampling with a fixed attempt budget keeps the output a pure
    // function of the seed even when fewer chords fit.
    for (std::size_t attempt = 0; attempt < 20 * chords && placed.size() < chords; ++attempt) {
        auto a = static_cast<Vertex>(draw(rng, n));
        auto b = static_cast<Vertex>(draw(rng, n));
        if (a > b)
            std::swap(a, b);
        if (b - a < 2 || (a == 0 && b == n - 1))
            continue;
        std::pair<Vertex, Vertex> c{a, b};
        if (std::find(placed.begin(), placed.end(), c) != placed.end())
            continue;
        if (std::any_of(placed.begin(), placed.end(), [&](const auto& d) { return crosses(c, d); }))
            continue;
        placed.push_back(c);
        edges.push_back({a, b, Weight(1)});
    }
    return with_points(finish(n, std::move(edges)), circle_points(n));
}

} // namespace

std::string FamilySpec::str() const
{
    std::string out = family;
    if (args.empty())
        return out;
    out += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i)
            out += ',';
        out += format_weight(args[i]);
    }
    return out + ')';
}

FamilySpec parse_family_spec(std::string_view text)
{
    FamilySpec spec;
    auto open = text.find('(');
    spec.family = std::string(text.substr(0, open));
    if (spec.family.empty())
        throw InvalidInput("empty generator family in '" + std::string(text) + "'");
    if (open == std::string_view::npos)
        return spec;
    if (text.back() != ')')
        throw InvalidInput("generator spec '" + std::string(text) + "' lacks a closing parenthesis");
    auto inner = text.substr(open + 1, text.size() - open - 2);
    while (!inner.empty()) {
        auto comma = inner.find(',');
        auto item = inner.substr(0, comma);
        auto tok = detail::split_ws(item);
        if (tok.size() != 1)
            throw InvalidInput("bad argument list in '" + std::string(text) + "'");
        spec.args.push_back(parse_weight(tok[0]));
        if (comma == std::string_view::npos)
            break;
        inner = inner.substr(comma + 1);
    }
    return spec;
}

std::vector<std::string> generator_families()
{
    return {"path", "cycle", "clique", "star", "gnp", "grid", "hypercube",
            "subdivided", "zero-one", "weighted", "outerplanar"};
}

GraphFile generate_instance(const FamilySpec& spec, std::uint64_t seed)
{
    Rng rng(seed);
    Args a{spec};
    const std::string& f = spec.family;

    if (f == "path") {
        a.expect(1);
        auto n = a.count(0, 1);
        std::vector<Edge> edges;
        std::vector<std::pair<double, double>> pt(n);
        for (Vertex i = 0; i < n; ++i) {
            pt[i] = {static_cast<double>(i), 0.0};
            if (i + 1 < n)
                edges.push_back({i, i + 1, Weight(1)});
        }
        return with_points(finish(n, std::move(edges)), pt);
    }
    if (f == "cycle") {
        a.expect(1);
        auto n = a.count(0, 3);
        std::vector<Edge> edges;
        for (Vertex i = 0; i < n; ++i)
            edges.push_back({i, static_cast<Vertex>((i + 1) % n), Weight(1)});
        return with_points(finish(n, std::move(edges)), circle_points(n));
    }
    if (f == "clique") {
        a.expect(1);
        auto n = a.count(0, 1, 4096);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                edges.push_back({u, v, Weight(1)});
        return finish(n, std::move(edges));
    }
    if (f == "star") {
        a.expect(1);
        auto n = a.count(0, 1);
        std::vector<Edge> edges;
        std::vector<std::pair<double, double>> pt{{0.0, 0.0}};
        auto rim = circle_points(n - 1);
        pt.insert(pt.end(), rim.begin(), rim.end());
        for (Vertex v = 1; v < n; ++v)
            edges.push_back({0, v, Weight(1)});
        return with_points(finish(n, std::move(edges)), pt);
    }
    if (f == "gnp") {
        a.expect(2);
        auto n = a.count(0, 1, 1u << 14);
        auto p = a.probability(1);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng, p))
                    edges.push_back({u, v, Weight(1)});
        return finish(n, std::move(edges));
    }
    if (f == "grid") {
        a.expect(2);
        auto rows = a.count(0, 1, 1024);
        auto cols = a.count(1, 1, 1024);
        auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
        std::vector<Edge> edges;
        std::vector<std::pair<double, double>> pt(rows * cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                pt[id(r, c)] = {static_cast<double>(c), -static_cast<double>(r)};
                if (c + 1 < cols)
                    edges.push_back({id(r, c), id(r, c + 1), Weight(1)});
                if (r + 1 < rows)
                    edges.push_back({id(r, c), id(r + 1, c), Weight(1)});
            }
        return with_points(finish(rows * cols, std::move(edges)), pt);
    }
    if (f == "hypercube") {
        a.expect(1);
        auto d = a.count(0, 0, 20);
        std::size_t n = std::size_t{1} << d;
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (std::size_t b = 0; b < d; ++b) {
                Vertex v = u ^ (Vertex{1} << b);
                if (u < v)
                    edges.push_back({u, v, Weight(1)});
            }
        return finish(n, std::move(edges));
    }
    if (f == "subdivided") {
        a.expect(3);
        auto n = a.count(0, 1, 1u << 14);
        auto p = a.probability(1);
        auto s = a.count(2, 0, 64);
        auto base = connected_edges(n, p, rng);
        std::vector<Edge> edges;
        Vertex next = static_cast<Vertex>(n);
        for (const auto& e : base) {
            auto extra = draw(rng, s + 1);
            Vertex prev = e.u;
            for (std::uint64_t i = 0; i < extra; ++i) {
                edges.push_back({prev, next, Weight(draw(rng, 2))});
                prev = next++;
            }
            edges.push_back({prev, e.v, Weight(draw(rng, 2))});
        }
        if (next > kMaxVertices)
            throw SizeGuardError("subdivided: too many vertices");
        return finish(next, std::move(edges));
    }
    if (f == "zero-one" || f == "weighted") {
        a.expect(2);
        auto n = a.count(0, 1, 1u << 14);
        auto p = a.probability(1);
        auto edges = connected_edges(n, p, rng);
        for (auto& e : edges)
            e.w = f == "zero-one" ? Weight(draw(rng, 2))
                                  : Weight(static_cast<long long>(draw(rng, 13)),
                                           static_cast<long long>(1 + draw(rng, 4)));
        return finish(n, std::move(edges));
    }
    if (f == "outerplanar") {
        a.expect(2);
        auto n = a.count(0, 3);
        auto c = std::min(a.count(1, 0), n - 3);
        return outerplanar(n, c, rng);
    }
    throw InvalidInput("unknown generator family '" + f + "'");
}

} // namespace cmc
