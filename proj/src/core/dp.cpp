/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#include "cmc/error.hpp"
#include "cmc/exact.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <tuple>
#include <unordered_map>

namespace cmc {

namespace {

// A state labels every bag position with 0 (outside S) or the 1-based index
// of its block, 4 bits per position, blocks numbered by first appearance.
// kClosed marks "S meets no bag vertex but one finished component exists
// below"; key 0 is the empty set.
using Key = std::uint64_t;
constexpr Key kClosed = Key{1} << 63;
using Labels = std::array<std::uint8_t, 16>;

Labels decode(Key k, std::size_t size)
{
    Labels l{};
    for (std::size_t i = 0; i < size; ++i)
        l[i] = static_cast<std::uint8_t>((k >> (4 * i)) & 0xF);
    return l;
}

/// Renumbers blocks by first appearance and packs the labels.
Key encode(const Labels& l, std::size_t size)
{
    std::array<std::uint8_t, 32> remap{};
    std::uint8_t next = 0;
    Key k = 0;
    for (std::size_t i = 0; i < size; ++i) {
        if (l[i] == 0)
            continue;
        if (remap[l[i]] == 0)
            remap[l[i]] = ++next;
        k |= Key{remap[l[i]]} << (4 * i);
    }
    return k;
}

std::size_t block_count(Key k, std::size_t size)
{
    std::size_t most = 0;
    for (std::size_t i = 0; i < size; ++i)
        most = std::max<std::size_t>(most, (k >> (4 * i)) & 0xF);
    return most;
}

std::uint32_t members_mask(Key k, std::size_t size)
{
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < size; ++i)
        if ((k >> (4 * i)) & 0xF)
            m |= 1U << i;
    return m;
}

std::ptrdiff_t position(const std::vector<Vertex>& bag, Vertex v)
{
    auto it = std::lower_bound(bag.begin(), bag.end(), v);
    return it != bag.end() && *it == v ? it - bag.begin() : -1;
}

template <class Value>
struct Entry {
    Value value;
    Key left;
    Key right;
};

template <class Value>
using Table = std::unordered_map<Key, Entry<Value>>;

template <class Value>
void relax(Table<Value>& t, Key k, Value v, Key left, Key right)
{
    auto [it, fresh] = t.try_emplace(k, Entry<Value>{v, left, right});
    if (!fresh && v > it->second.value)
        it->second = Entry<Value>{std::move(v), left, right};
}

template <class Value>
class Solver {
public:
    Solver(const Graph& g, const NiceDecomposition& nd, std::vector<Value> weight)
        : g_(g), nd_(nd), w_(std::move(weight)), tables_(nd.nodes.size())
    {
    }

    DpResult run()
    {
        DpResult out;
        out.stats.nodes = nd_.nodes.size();
        out.stats.width = nd_.width();
        for (std::size_t i = 0; i < nd_.nodes.size(); ++i) {
            const auto& node = nd_.nodes[i];
            switch (node.kind) {
            case NiceKind::leaf:
                leaf(i);
                break;
            case NiceKind::introduce:
                introduce(i);
                break;
            case NiceKind::forget:
                forget(i);
                break;
            case NiceKind::join:
                join(i);
                break;
            }
            out.stats.max_states = std::max(out.stats.max_states, tables_[i].size());
            out.stats.total_states += tables_[i].size();
            out.stats.max_bag = std::max(out.stats.max_bag, node.bag.size());
            for (const auto& [k, e] : tables_[i])
                if (k != kClosed)
                    out.stats.max_blocks = std::max(out.stats.max_blocks, block_count(k, node.bag.size()));
        }

        const auto& root = nd_.nodes[nd_.root];
        const auto& table = tables_[nd_.root];
        std::optional<Key> best;
        for (const auto& [k, e] : table) {
            bool ok = k == kClosed || (k != 0 && block_count(k, root.bag.size()) == 1);
            if (!ok)
                continue;
            if (!best || e.value > table.at(*best).value ||
                (e.value == table.at(*best).value && k < *best))
                best = k;
        }
        if (!best)
            throw InvariantViolation("dp_solve: no feasible root state");

        VertexSet s(g_.n());
        std::vector<std::pair<std::size_t, Key>> stack{{nd_.root, *best}};
        while (!stack.empty()) {
            auto [node, key] = stack.back();
            stack.pop_back();
            const auto& n = nd_.nodes[node];
            if (key != kClosed) {
                auto l = decode(key, n.bag.size());
                for (std::size_t p = 0; p < n.bag.size(); ++p)
                    if (l[p])
                        s.insert(n.bag[p]);
            }
            const auto& e = tables_[node].at(key);
            if (n.children.size() >= 1)
                stack.emplace_back(n.children[0], e.left);
            if (n.children.size() == 2)
                stack.emplace_back(n.children[1], e.right);
        }
        out.solution = evaluate(g_, std::move(s));
        if (!out.solution.connected || !matches(out.solution.cut_value, table.at(*best).value))
            throw InvariantViolation("dp_solve: extracted set does not reproduce the table value");
        return out;
    }

    std::function<bool(const Weight&, const Value&)> matches;

private:
    void leaf(std::size_t i)
    {
        auto& t = tables_[i];
        relax<Value>(t, 0, Value(0), 0, 0);
        relax<Value>(t, 1, Value(0), 0, 0);
    }

    void introduce(std::size_t i)
    {
        const auto& node = nd_.nodes[i];
        const auto& child = nd_.nodes[node.children[0]];
        const Vertex v = node.vertex;
        const auto p = static_cast<std::size_t>(position(node.bag, v));
        const std::size_t cs = child.bag.size();

        // Bag neighbors of v: child position and edge weight.
        std::vector<std::pair<std::size_t, Value>> around;
        for (const auto& inc : g_.incident(v)) {
            auto q = position(child.bag, inc.neighbor);
            if (q >= 0)
                around.emplace_back(static_cast<std::size_t>(q), w_[inc.edge]);
        }

        auto& t = tables_[i];
        for (const auto& [k, e] : child_table(i, 0)) {
            if (k == kClosed) {
                relax<Value>(t, kClosed, e.value, k, 0);
                continue;
            }
            auto l = decode(k, cs);
            Value out_gain(0);
            Value in_gain(0);
            for (const auto& [q, w] : around)
                (l[q] ? out_gain : in_gain) += w;

            Labels shifted{};
            for (std::size_t q = 0, r = 0; r < cs + 1; ++r)
                shifted[r] = r == p ? 0 : l[q++];
            relax<Value>(t, encode(shifted, cs + 1), e.value + out_gain, k, 0);

            // v joins S: every block it touches fuses with it.
            std::uint8_t fused = 15;
            for (const auto& [q, w] : around)
                if (l[q]) {
                    std::uint8_t old = l[q];
                    for (std::size_t r = 0; r < cs + 1; ++r)
                        if (shifted[r] == old)
                            shifted[r] = fused;
                }
            shifted[p] = fused;
            relax<Value>(t, encode(shifted, cs + 1), e.value + in_gain, k, 0);
        }
    }

    void forget(std::size_t i)
    {
        const auto& node = nd_.nodes[i];
        const auto& child = nd_.nodes[node.children[0]];
        const auto p = static_cast<std::size_t>(position(child.bag, node.vertex));
        const std::size_t cs = child.bag.size();
        auto& t = tables_[i];
        for (const auto& [k, e] : child_table(i, 0)) {
            if (k == kClosed) {
                relax<Value>(t, kClosed, e.value, k, 0);
                continue;
            }
            auto l = decode(k, cs);
            Labels rest{};
            bool shared = false;
            bool others = false;
            for (std::size_t q = 0, r = 0; q < cs; ++q) {
                if (q == p)
                    continue;
                rest[r++] = l[q];
                shared = shared || (l[p] && l[q] == l[p]);
                others = others || (l[q] && l[q] != l[p]);
            }
            if (l[p] == 0 || shared) {
                relax<Value>(t, encode(rest, cs - 1), e.value, k, 0);
            } else if (!others) {
                // The block of v is finished; it must be all of S.
                relax<Value>(t, kClosed, e.value, k, 0);
            }
        }
    }

    void join(std::size_t i)
    {
        const auto& node = nd_.nodes[i];
        const std::size_t bs = node.bag.size();
        const auto& left = child_table(i, 0);
        const auto& right = child_table(i, 1);

        std::unordered_map<std::uint32_t, std::vector<Key>> by_members;
        for (const auto& [k, e] : right)
            if (k != kClosed)
                by_members[members_mask(k, bs)].push_back(k);

        std::vector<std::tuple<std::size_t, std::size_t, Value>> bag_edges;
        for (std::size_t a = 0; a < bs; ++a)
            for (const auto& inc : g_.incident(node.bag[a])) {
                auto b = position(node.bag, inc.neighbor);
                if (b > static_cast<std::ptrdiff_t>(a))
                    bag_edges.emplace_back(a, static_cast<std::size_t>(b), w_[inc.edge]);
            }

        auto& t = tables_[i];
        auto closed_left = left.find(kClosed);
        auto empty_right = right.find(0);
        if (closed_left != left.end() && empty_right != right.end())
            relax<Value>(t, kClosed, closed_left->second.value + empty_right->second.value, kClosed, Key{0});
        auto empty_left = left.find(0);
        auto closed_right = right.find(kClosed);
        if (empty_left != left.end() && closed_right != right.end())
            relax<Value>(t, kClosed, empty_left->second.value + closed_right->second.value, Key{0}, kClosed);

        for (const auto& [k1, e1] : left) {
            if (k1 == kClosed)
                continue;
            auto mask = members_mask(k1, bs);
            auto it = by_members.find(mask);
            if (it == by_members.end())
                continue;
            Value boundary(0);
            for (const auto& [a, b, w] : bag_edges)
                if (((mask >> a) & 1U) != ((mask >> b) & 1U))
                    boundary += w;
            auto l1 = decode(k1, bs);
            for (Key k2 : it->second) {
                auto l2 = decode(k2, bs);
                // Union-find over the at most 2 * 13 block labels.
                std::array<std::uint8_t, 32> parent{};
                for (std::uint8_t x = 0; x < 32; ++x)
                    parent[x] = x;
                auto find = [&](std::uint8_t x) {
                    while (parent[x] != x)
                        x = parent[x] = parent[parent[x]];
                    return x;
                };
                for (std::size_t p = 0; p < bs; ++p)
                    if (l1[p])
                        parent[find(l1[p])] = find(static_cast<std::uint8_t>(16 + l2[p]));
                Labels merged{};
                for (std::size_t p = 0; p < bs; ++p)
                    merged[p] = l1[p] ? find(l1[p]) : 0;
                relax<Value>(t, encode(merged, bs), e1.value + right.at(k2).value - boundary, k1, k2);
            }
        }
    }

    const Table<Value>& child_table(std::size_t i, std::size_t which) const
    {
        return tables_[nd_.nodes[i].children[which]];
    }

    const Graph& g_;
    const NiceDecomposition& nd_;
    std::vector<Value> w_;
    std::vector<Table<Value>> tables_;
};

} // namespace

DpResult dp_solve(const Graph& g, const NiceDecomposition& nd)
{
    if (g.n() == 0)
        throw InvalidInput("dp_solve: graph has no vertices");
    if (nd.width() > kDpWidthLimit)
        throw SizeGuardError("dp_solve: decomposition width " + std::to_string(nd.width()) +
                             " exceeds the limit of " + std::to_string(kDpWidthLimit));
    auto check = validate_nice(g, nd);
    if (!check.valid)
        throw InvalidInput("dp_solve: decomposition does not fit the graph (" + check.witness + ")");

    if (auto scaled = scale_to_integers(g)) {
        Solver<std::int64_t> solver(g, nd, scaled->weight);
        solver.matches = [&](const Weight& w, const std::int64_t& v) { return w == scaled->unscale(v); };
        return solver.run();
    }
    std::vector<Weight> w;
    for (const auto& e : g.edges())
        w.push_back(e.w);
    Solver<Weight> solver(g, nd, std::move(w));
    solver.matches = [](const Weight& a, const Weight& b) { return a == b; };
    return solver.run();
}

} // namespace cmc
