/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#include "random_graphs.hpp"

#include <algorithm>
#include <numeric>

namespace cmc::testing {

Weight random_weight(std::mt19937_64& rng, WeightKind kind)
{
    switch (kind) {
    case WeightKind::unit:
        return Weight(1);
    case WeightKind::zero_one:
        return Weight(draw(rng, 3) == 0 ? 0 : 1);
    case WeightKind::integer:
        return Weight(draw(rng, 10));
    case WeightKind::rational:
        return Weight(static_cast<long long>(draw(rng, 12)),
                      static_cast<long long>(1 + draw(rng, 6)));
    }
    return Weight(1);
}

Graph random_connected(std::size_t n, std::uint64_t extra_num, std::uint64_t extra_den,
                       WeightKind kind, std::mt19937_64& rng)
{
    std::vector<Edge> edges;
    std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    for (std::size_t i = n; i > 1; --i)
        std::swap(order[i - 1], order[draw(rng, i)]);
    for (std::size_t i = 1; i < n; ++i) {
        Vertex a = order[i];
        Vertex b = order[draw(rng, i)];
        used[a][b] = used[b][a] = 1;
        edges.push_back({std::min(a, b), std::max(a, b), random_weight(rng, kind)});
    }
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (!used[a][b] && draw(rng, extra_den) < extra_num)
                edges.push_back({a, b, random_weight(rng, kind)});
    return Graph(n, std::move(edges));
}

Graph random_gnp(std::size_t n, std::uint64_t num, std::uint64_t den, WeightKind kind,
                 std::mt19937_64& rng)
{
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (draw(rng, den) < num)
                edges.push_back({a, b, random_weight(rng, kind)});
    return Graph(n, std::move(edges));
}

std::vector<EdgeId> random_spanning_tree(const Graph& g, std::mt19937_64& rng)
{
    // Random edge order plus union-find.
    std::vector<EdgeId> ids(g.m());
    std::iota(ids.begin(), ids.end(), EdgeId{0});
    for (std::size_t i = ids.size(); i > 1; --i)
        std::swap(ids[i - 1], ids[draw(rng, i)]);
    std::vector<Vertex> parent(g.n());
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<EdgeId> tree;
    for (EdgeId e : ids) {
        Vertex a = find(g.edge(e).u);
        Vertex b = find(g.edge(e).v);
        if (a != b)
            parent[a] = b, tree.push_back(e);
    }
    return tree;
}

} // namespace cmc::testing
