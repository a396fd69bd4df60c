/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#include "oracles.hpp"

#include <stdexcept>

namespace cmc::oracle {

Weight mask_cut(const Graph& g, std::uint64_t mask)
{
    Weight total;
    for (const auto& e : g.edges())
        if (((mask >> e.u) & 1U) != ((mask >> e.v) & 1U))
            total += e.w;
    return total;
}

bool mask_connected(const Graph& g, std::uint64_t mask)
{
    if (mask == 0)
        return false;
    std::uint64_t reach = mask & (~mask + 1);
    for (;;) {
        std::uint64_t next = reach;
        for (const auto& e : g.edges()) {
            std::uint64_t bu = std::uint64_t{1} << e.u;
            std::uint64_t bv = std::uint64_t{1} << e.v;
            if ((mask & bu) && (mask & bv) && ((reach & bu) || (reach & bv)))
                next |= bu | bv;
        }
        if (next == reach)
            return reach == mask;
        reach = next;
    }
}

Optimum naive_cmc(const Graph& g)
{
    if (g.n() == 0 || g.n() > 20)
        throw std::invalid_argument("naive_cmc: n must be in [1, 20]");
    // Weights are rescaled to integers by the common denominator so the
    // 2^n sweep stays in machine arithmetic.
    BigInt den = 1;
    for (const auto& e : g.edges())
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(e.w));
    std::vector<long long> w;
    for (const auto& e : g.edges())
        w.push_back(static_cast<long long>(boost::multiprecision::numerator(e.w) *
                                           (den / boost::multiprecision::denominator(e.w))));
    Optimum best{Weight(-1), 0};
    long long best_int = -1;
    const std::uint64_t full = std::uint64_t{1} << g.n();
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        long long cut = 0;
        for (std::size_t i = 0; i < g.m(); ++i) {
            const auto& e = g.edge(static_cast<EdgeId>(i));
            if (((mask >> e.u) & 1U) != ((mask >> e.v) & 1U))
                cut += w[i];
        }
        if (cut <= best_int || !mask_connected(g, mask))
            continue;
        best_int = cut;
        best.mask = mask;
    }
    best.value = Weight(BigInt(best_int), den);
    return best;
}

std::uint64_t to_mask(const VertexSet& s)
{
    std::uint64_t m = 0;
    for (Vertex v : s.members())
        m |= std::uint64_t{1} << v;
    return m;
}

VertexSet from_mask(std::size_t n, std::uint64_t mask)
{
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
        if ((mask >> v) & 1U)
            s.insert(v);
    return s;
}

} // namespace cmc::oracle
