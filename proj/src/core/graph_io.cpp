/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#include "cmc/graph_io.hpp"

#include "cmc/error.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace cmc {

namespace {

struct RawEdge {
    std::uint64_t u;
    std::uint64_t v;
    Weight w;
};

struct RawRot {
    std::size_t lineno;
    std::uint64_t v;
    std::vector<std::uint64_t> order;
};

} // namespace

std::vector<std::uint64_t> default_labels(std::size_t n)
{
    std::vector<std::uint64_t> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[i] = i + 1;
    return labels;
}

GraphFile parse_graph(std::string_view text)
{
    bool have_header = false;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::vector<RawEdge> edges;
    std::vector<RawRot> rots;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> outer;

    detail::for_each_line(text, [&](std::size_t ln, const std::vector<std::string_view>& tok) {
        const auto& kind = tok[0];
        if (kind == "c")
            return;
        if (kind == "p") {
            if (have_header)
                throw InvalidInput("line " + std::to_string(ln) + ": duplicate header");
            if (tok.size() != 4 || tok[1] != "cmc")
                throw InvalidInput("line " + std::to_string(ln) + ": expected 'p cmc <n> <m>'");
            n = detail::parse_u64(tok[2], ln, "vertex count");
            m = detail::parse_u64(tok[3], ln, "edge count");
            have_header = true;
            return;
        }
        if (!have_header)
            throw InvalidInput("line " + std::to_string(ln) + ": data before 'p cmc' header");
        if (kind == "e") {
            if (tok.size() != 3 && tok.size() != 4)
                throw InvalidInput("line " + std::to_string(ln) + ": expected 'e <u> <v> <w>'");
            RawEdge e{detail::parse_u64(tok[1], ln, "vertex"), detail::parse_u64(tok[2], ln, "vertex"),
                      tok.size() == 4 ? parse_weight(tok[3]) : Weight(1)};
            if (e.u == 0 || e.v == 0)
                throw InvalidInput("line " + std::to_string(ln) + ": vertex labels are 1-indexed");
            edges.push_back(std::move(e));
        } else if (kind == "rot") {
            if (tok.size() < 2)
                throw InvalidInput("line " + std::to_string(ln) + ": expected 'rot <v> <u1> ...'");
            RawRot r{ln, detail::parse_u64(tok[1], ln, "vertex"), {}};
            for (std::size_t i = 2; i < tok.size(); ++i)
                r.order.push_back(detail::parse_u64(tok[i], ln, "vertex"));
            rots.push_back(std::move(r));
        } else if (kind == "outer") {
            if (tok.size() != 3)
                throw InvalidInput("line " + std::to_string(ln) + ": expected 'outer <edge> <side>'");
            outer = std::make_pair(detail::parse_u64(tok[1], ln, "edge index"),
                                   detail::parse_u64(tok[2], ln, "side"));
        } else {
            throw InvalidInput("line " + std::to_string(ln) + ": unknown record '" +
                               std::string(kind) + "'");
        }
    });

    if (!have_header)
        throw InvalidInput("missing 'p cmc <n> <m>' header");
    if (edges.size() != m)
        throw InvalidInput("header announces " + std::to_string(m) + " edges, found " +
                           std::to_string(edges.size()));

    // Label mapping.
    std::uint64_t max_label = 0;
    for (const auto& e : edges)
        max_label = std::max({max_label, e.u, e.v});
    for (const auto& r : rots) {
        max_label = std::max(max_label, r.v);
        for (auto x : r.order)
            max_label = std::max(max_label, x);
    }

    GraphFile file;
    std::map<std::uint64_t, Vertex> dense;
    if (max_label <= n) {
        file.labels = default_labels(n);
        for (std::uint64_t l = 1; l <= max_label; ++l)
            dense[l] = static_cast<Vertex>(l - 1);
    } else {
        std::vector<std::uint64_t> seen;
        for (const auto& e : edges) {
            seen.push_back(e.u);
            seen.push_back(e.v);
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        if (seen.size() > n)
            throw InvalidInput("edges mention " + std::to_string(seen.size()) +
                               " distinct vertices but header has n=" + std::to_string(n));
        for (std::size_t i = 0; i < seen.size(); ++i)
            dense[seen[i]] = static_cast<Vertex>(i);
        file.labels = seen;
        std::uint64_t next = seen.empty() ? 1 : seen.back() + 1;
        while (file.labels.size() < n)
            file.labels.push_back(next++);
    }
    auto lookup = [&](std::uint64_t label) {
        auto it = dense.find(label);
        if (it == dense.end())
            throw InvalidInput("unknown vertex label " + std::to_string(label));
        return it->second;
    };

    std::vector<Edge> dense_edges;
    dense_edges.reserve(edges.size());
    for (const auto& e : edges)
        dense_edges.push_back({lookup(e.u), lookup(e.v), e.w});
    file.graph = Graph(n, dense_edges);

    if (!rots.empty()) {
        Rotation rot(n);
        std::vector<char> given(n, 0);
        for (const auto& r : rots) {
            Vertex v = lookup(r.v);
            if (given[v])
                throw InvalidInput("line " + std::to_string(r.lineno) + ": duplicate rotation");
            given[v] = 1;
            for (auto x : r.order)
                rot[v].push_back(lookup(x));
        }
        for (Vertex v = 0; v < n; ++v) {
            if (!given[v]) {
                if (file.graph.degree(v) > 2)
                    throw InvalidInput("missing rotation for vertex " +
                                       std::to_string(file.labels[v]));
                for (const auto& inc : file.graph.incident(v))
                    rot[v].push_back(inc.neighbor);
            }
            auto expect = rot[v];
            std::sort(expect.begin(), expect.end());
            std::vector<Vertex> nbrs;
            for (const auto& inc : file.graph.incident(v))
                nbrs.push_back(inc.neighbor);
            if (expect != nbrs)
                throw InvalidInput("rotation of vertex " + std::to_string(file.labels[v]) +
                                   " does not list each neighbor exactly once");
        }
        file.rotation = std::move(rot);
    }

    if (outer) {
        auto [idx, side] = *outer;
        if (idx == 0 || idx > dense_edges.size() || side > 1)
            throw InvalidInput("outer: edge index or side out of range");
        const auto& e = dense_edges[idx - 1];
        file.outer = side == 0 ? Dart{e.u, e.v} : Dart{e.v, e.u};
    }
    return file;
}

GraphFile read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open graph file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

std::string write_graph(const GraphFile& file)
{
    const auto& g = file.graph;
    auto labels = file.labels.size() == g.n() ? file.labels : default_labels(g.n());
    std::ostringstream out;
    out << "p cmc " << g.n() << ' ' << g.m() << '\n';
    for (const auto& e : g.edges())
        out << "e " << labels[e.u] << ' ' << labels[e.v] << ' ' << format_weight(e.w) << '\n';
    if (file.rotation) {
        for (Vertex v = 0; v < g.n(); ++v) {
            out << "rot " << labels[v];
            for (Vertex u : (*file.rotation)[v])
                out << ' ' << labels[u];
            out << '\n';
        }
    }
    if (file.outer) {
        auto id = g.find_edge(file.outer->tail, file.outer->head);
        if (!id)
            throw InvalidInput("outer dart is not an edge");
        bool forward = g.edge(*id).u == file.outer->tail;
        out << "outer " << (*id + 1) << ' ' << (forward ? 0 : 1) << '\n';
    }
    return out.str();
}

std::string write_graph(const Graph& g)
{
    return write_graph(GraphFile{g, default_labels(g.n()), std::nullopt, std::nullopt});
}

} // namespace cmc
