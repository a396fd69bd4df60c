/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#include "cmc/error.hpp"
#include "cmc/exact.hpp"

#include <bit>

namespace cmc {

namespace {

using Mask = std::uint64_t;

/// True when the sorted member list of a precedes that of b.
bool lex_less(Mask a, Mask b)
{
    Mask diff = a ^ b;
    if (diff == 0)
        return false;
    int d = std::countr_zero(diff);
    Mask above = d == 63 ? 0 : ~((Mask{2} << d) - 1);
    if ((a >> d) & 1U)
        return (b & above) != 0;
    return (a & above) == 0;
}

template <class Value>
class Enumerator {
public:
    Enumerator(const Graph& g, std::vector<Value> edge_weight)
        : g_(g), w_(std::move(edge_weight)), nbr_(g.n(), 0), wdeg_(g.n(), Value(0))
    {
        for (EdgeId e = 0; e < g.m(); ++e) {
            const auto& ed = g.edge(e);
            nbr_[ed.u] |= Mask{1} << ed.v;
            nbr_[ed.v] |= Mask{1} << ed.u;
            wdeg_[ed.u] += w_[e];
            wdeg_[ed.v] += w_[e];
        }
    }

    void run()
    {
        for (Vertex v = 0; v < g_.n(); ++v) {
            Mask higher = v == 63 ? 0 : ~((Mask{2} << v) - 1);
            Mask self = Mask{1} << v;
            extend(self, nbr_[v] & higher, nbr_[v] | self, wdeg_[v], v, higher);
        }
    }

    Mask best_mask() const { return best_; }

private:
    Value weight_into(Vertex w, Mask s) const
    {
        Value total(0);
        for (const auto& inc : g_.incident(w))
            if ((s >> inc.neighbor) & 1U)
                total += w_[inc.edge];
        return total;
    }

    void offer(Mask s, const Value& cut)
    {
        if (!have_ || cut > best_cut_ || (cut == best_cut_ && lex_less(s, best_)))
            best_ = s, best_cut_ = cut, have_ = true;
    }

    // Each connected set whose lowest vertex is v is reported exactly once:
    // new vertices come only from the exclusive neighborhood of the last
    // addition.
    void extend(Mask s, Mask ext, Mask closed, const Value& cut, Vertex v, Mask higher)
    {
        offer(s, cut);
        while (ext != 0) {
            Vertex w = static_cast<Vertex>(std::countr_zero(ext));
            ext &= ext - 1;
            Mask fresh = nbr_[w] & ~closed & higher;
            Value next = cut + wdeg_[w] - 2 * weight_into(w, s);
            extend(s | (Mask{1} << w), ext | fresh, closed | nbr_[w], next, v, higher);
        }
    }

    const Graph& g_;
    std::vector<Value> w_;
    std::vector<Mask> nbr_;
    std::vector<Value> wdeg_;
    Mask best_ = 0;
    Value best_cut_{};
    bool have_ = false;
};

} // namespace

Solution brute_force_cmc(const Graph& g, bool force)
{
    if (g.n() == 0)
        throw InvalidInput("brute_force_cmc: graph has no vertices");
    if (g.n() > 64)
        throw SizeGuardError("brute_force_cmc: more than 64 vertices is not supported");
    if (g.n() > kBruteForceLimit && !force)
        throw SizeGuardError("brute_force_cmc: n = " + std::to_string(g.n()) + " exceeds the limit of " +
                             std::to_string(kBruteForceLimit) + "; pass force to override");

    Mask best = 0;
    if (auto scaled = scale_to_integers(g)) {
        Enumerator<std::int64_t> en(g, scaled->weight);
        en.run();
        best = en.best_mask();
    } else {
        std::vector<Weight> w;
        for (const auto& e : g.edges())
            w.push_back(e.w);
        Enumerator<Weight> en(g, std::move(w));
        en.run();
        best = en.best_mask();
    }
    VertexSet s(g.n());
    for (Vertex v = 0; v < g.n(); ++v)
        if ((best >> v) & 1U)
            s.insert(v);
    return evaluate(g, std::move(s));
}

} // namespace cmc
