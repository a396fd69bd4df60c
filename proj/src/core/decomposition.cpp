/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#include "cmc/error.hpp"
#include "cmc/exact.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cmc {

namespace {

bool contains_sorted(const std::vector<Vertex>& bag, Vertex v)
{
    return std::binary_search(bag.begin(), bag.end(), v);
}

std::vector<std::vector<std::size_t>> tree_adjacency(std::size_t bags,
                                                     const std::vector<std::pair<std::size_t, std::size_t>>& edges)
{
    std::vector<std::vector<std::size_t>> adj(bags);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& a : adj)
        std::sort(a.begin(), a.end());
    return adj;
}

std::string edge_text(Vertex u, Vertex v)
{
    return std::to_string(u) + "-" + std::to_string(v);
}

} // namespace

std::size_t TreeDecomposition::width() const
{
    std::size_t w = 0;
    for (const auto& b : bags)
        w = std::max(w, b.size());
    return w == 0 ? 0 : w - 1;
}

TreeDecomposition trivial_decomposition(const Graph& g)
{
    TreeDecomposition td;
    std::vector<Vertex> all(g.n());
    std::iota(all.begin(), all.end(), Vertex{0});
    td.bags.push_back(std::move(all));
    return td;
}

TreeDecomposition build_decomposition(const Graph& g)
{
    if (g.n() == 0)
        throw InvalidInput("build_decomposition: graph has no vertices");
    const std::size_t n = g.n();
    std::vector<std::set<Vertex>> adj(n);
    for (const auto& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<char> gone(n, 0);
    std::vector<Vertex> order;
    std::vector<std::vector<Vertex>> bag_of(n);

    auto fill_in = [&](Vertex v) {
        std::size_t missing = 0;
        for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
            for (auto b = std::next(a); b != adj[v].end(); ++b)
                missing += adj[*a].count(*b) == 0;
        return missing;
    };

    for (std::size_t step = 0; step < n; ++step) {
        Vertex pick = 0;
        std::size_t pick_fill = 0;
        bool have = false;
        for (Vertex v = 0; v < n; ++v) {
            if (gone[v])
                continue;
            std::size_t f = fill_in(v);
            if (!have || f < pick_fill || (f == pick_fill && adj[v].size() < adj[pick].size()))
                pick = v, pick_fill = f, have = true;
        }
        std::vector<Vertex> nb(adj[pick].begin(), adj[pick].end());
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                adj[nb[i]].insert(nb[j]);
                adj[nb[j]].insert(nb[i]);
            }
        for (Vertex u : nb)
            adj[u].erase(pick);
        adj[pick].clear();
        gone[pick] = 1;
        auto bag = nb;
        bag.push_back(pick);
        std::sort(bag.begin(), bag.end());
        bag_of[pick] = std::move(bag);
        order.push_back(pick);
    }

    // Bag i belongs to the i-th eliminated vertex; it hangs below the bag of
    // its earliest-eliminated later neighbor. Remaining roots are chained.
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i)
        position[order[i]] = i;
    TreeDecomposition td;
    std::optional<std::size_t> last_root;
    for (std::size_t i = 0; i < n; ++i) {
        Vertex v = order[i];
        td.bags.push_back(bag_of[v]);
        std::size_t parent = n;
        for (Vertex u : bag_of[v])
            if (u != v)
                parent = std::min(parent, position[u]);
        if (parent < n) {
            td.tree_edges.emplace_back(i, parent);
        } else {
            if (last_root)
                td.tree_edges.emplace_back(*last_root, i);
            last_root = i;
        }
    }
    return td;
}

DecompositionCheck validate_decomposition(const Graph& g, const TreeDecomposition& td)
{
    auto fail = [](std::string w) { return DecompositionCheck{false, std::move(w)}; };
    const std::size_t nb = td.bags.size();
    if (nb == 0)
        return g.n() == 0 ? DecompositionCheck{true, {}} : fail("no bags");
    for (std::size_t b = 0; b < nb; ++b) {
        const auto& bag = td.bags[b];
        if (!std::is_sorted(bag.begin(), bag.end()) ||
            std::adjacent_find(bag.begin(), bag.end()) != bag.end())
            return fail("bag " + std::to_string(b) + " is not a sorted set");
        if (!bag.empty() && bag.back() >= g.n())
            return fail("bag " + std::to_string(b) + " names vertex " + std::to_string(bag.back()) +
                        " outside the graph");
    }
    // The bag graph must be a tree.
    if (td.tree_edges.size() + 1 != nb)
        return fail("bag tree has " + std::to_string(td.tree_edges.size()) + " edges for " +
                    std::to_string(nb) + " bags");
    for (auto [a, b] : td.tree_edges)
        if (a >= nb || b >= nb || a == b)
            return fail("bag tree edge " + std::to_string(a) + "-" + std::to_string(b) + " is invalid");
    auto adj = tree_adjacency(nb, td.tree_edges);
    {
        std::vector<char> seen(nb, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (auto y : adj[x])
                if (!seen[y])
                    seen[y] = 1, ++count, stack.push_back(y);
        }
        if (count != nb)
            return fail("bag tree is disconnected");
    }

    std::vector<std::vector<std::size_t>> holders(g.n());
    for (std::size_t b = 0; b < nb; ++b)
        for (Vertex v : td.bags[b])
            holders[v].push_back(b);
    for (Vertex v = 0; v < g.n(); ++v)
        if (holders[v].empty())
            return fail("vertex cover: vertex " + std::to_string(v) + " is in no bag");
    for (const auto& e : g.edges()) {
        bool covered = false;
        for (auto b : holders[e.u])
            covered = covered || contains_sorted(td.bags[b], e.v);
        if (!covered)
            return fail("edge cover: edge " + edge_text(e.u, e.v) + " is in no bag");
    }
    for (Vertex v = 0; v < g.n(); ++v) {
        std::set<std::size_t> mine(holders[v].begin(), holders[v].end());
        std::set<std::size_t> seen{holders[v].front()};
        std::vector<std::size_t> stack{holders[v].front()};
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (auto y : adj[x])
                if (mine.count(y) && seen.insert(y).second)
                    stack.push_back(y);
        }
        if (seen.size() != mine.size())
            return fail("connected trace: bags holding vertex " + std::to_string(v) +
                        " are not connected");
    }
    return {true, {}};
}

TreeDecomposition parse_td(std::string_view text, const std::vector<std::uint64_t>& labels)
{
    std::map<std::uint64_t, Vertex> dense;
    for (std::size_t i = 0; i < labels.size(); ++i)
        dense[labels[i]] = static_cast<Vertex>(i);
    bool have_header = false;
    std::uint64_t bag_count = 0;
    std::uint64_t n = 0;
    std::vector<char> given;
    TreeDecomposition td;

    detail::for_each_line(text, [&](std::size_t ln, const std::vector<std::string_view>& tok) {
        auto where = "line " + std::to_string(ln) + ": ";
        if (tok[0] == "c")
            return;
        if (tok[0] == "s") {
            if (have_header || tok.size() != 5 || tok[1] != "td")
                throw InvalidInput(where + "expected a single 's td <bags> <width+1> <n>'");
            bag_count = detail::parse_u64(tok[2], ln, "bag count");
            detail::parse_u64(tok[3], ln, "bag size");
            n = detail::parse_u64(tok[4], ln, "vertex count");
            if (n != labels.size())
                throw InvalidInput(where + "decomposition is for " + std::to_string(n) +
                                   " vertices but the graph has " + std::to_string(labels.size()));
            td.bags.resize(bag_count);
            given.assign(bag_count, 0);
            have_header = true;
            return;
        }
        if (!have_header)
            throw InvalidInput(where + "data before 's td' header");
        if (tok[0] == "b") {
            if (tok.size() < 2)
                throw InvalidInput(where + "expected 'b <id> <vertices>'");
            auto id = detail::parse_u64(tok[1], ln, "bag id");
            if (id == 0 || id > bag_count || given[id - 1])
                throw InvalidInput(where + "bag id out of range or repeated");
            given[id - 1] = 1;
            auto& bag = td.bags[id - 1];
            for (std::size_t i = 2; i < tok.size(); ++i) {
                auto label = detail::parse_u64(tok[i], ln, "vertex");
                auto it = dense.find(label);
                if (it == dense.end())
                    throw InvalidInput(where + "unknown vertex " + std::to_string(label));
                bag.push_back(it->second);
            }
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            return;
        }
        if (tok.size() != 2)
            throw InvalidInput(where + "expected a bag tree edge '<i> <j>'");
        auto a = detail::parse_u64(tok[0], ln, "bag id");
        auto b = detail::parse_u64(tok[1], ln, "bag id");
        if (a == 0 || b == 0 || a > bag_count || b > bag_count)
            throw InvalidInput(where + "bag id out of range");
        td.tree_edges.emplace_back(a - 1, b - 1);
    });
    if (!have_header)
        throw InvalidInput("missing 's td' header");
    for (std::size_t b = 0; b < given.size(); ++b)
        if (!given[b])
            throw InvalidInput("bag " + std::to_string(b + 1) + " is never listed");
    return td;
}

std::string write_td(const TreeDecomposition& td, const std::vector<std::uint64_t>& labels)
{
    std::ostringstream out;
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << labels.size() << '\n';
    for (std::size_t b = 0; b < td.bags.size(); ++b) {
        out << "b " << b + 1;
        for (Vertex v : td.bags[b])
            out << ' ' << labels.at(v);
        out << '\n';
    }
    for (auto [a, b] : td.tree_edges)
        out << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

std::size_t NiceDecomposition::width() const
{
    std::size_t w = 0;
    for (const auto& node : nodes)
        w = std::max(w, node.bag.size());
    return w == 0 ? 0 : w - 1;
}

std::vector<Vertex> NiceDecomposition::cone(std::size_t node) const
{
    std::set<Vertex> out;
    std::vector<std::size_t> stack{node};
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        out.insert(nodes[x].bag.begin(), nodes[x].bag.end());
        for (auto c : nodes[x].children)
            stack.push_back(c);
    }
    return {out.begin(), out.end()};
}

TreeDecomposition NiceDecomposition::flatten() const
{
    TreeDecomposition td;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        td.bags.push_back(nodes[i].bag);
        for (auto c : nodes[i].children)
            td.tree_edges.emplace_back(c, i);
    }
    return td;
}

NiceDecomposition make_nice(const Graph& g, const TreeDecomposition& input)
{
    auto check = validate_decomposition(g, input);
    if (!check.valid)
        throw InvalidInput("make_nice: invalid decomposition (" + check.witness + ")");

    // Drop empty bags, reattaching their neighbors to the first neighbor.
    auto adj = tree_adjacency(input.bags.size(), input.tree_edges);
    std::vector<std::set<std::size_t>> nbr(input.bags.size());
    for (std::size_t b = 0; b < adj.size(); ++b)
        nbr[b].insert(adj[b].begin(), adj[b].end());
    std::vector<char> alive(input.bags.size(), 1);
    for (std::size_t b = 0; b < input.bags.size(); ++b) {
        if (!input.bags[b].empty())
            continue;
        alive[b] = 0;
        std::vector<std::size_t> around(nbr[b].begin(), nbr[b].end());
        for (auto x : around)
            nbr[x].erase(b);
        for (std::size_t i = 1; i < around.size(); ++i) {
            nbr[around[0]].insert(around[i]);
            nbr[around[i]].insert(around[0]);
        }
        nbr[b].clear();
    }
    std::size_t root = 0;
    while (root < alive.size() && !alive[root])
        ++root;
    if (root == alive.size())
        throw InvalidInput("make_nice: every bag is empty");

    NiceDecomposition nd;
    auto add = [&](NiceKind kind, Vertex v, std::vector<std::size_t> children, std::vector<Vertex> bag) {
        nd.nodes.push_back({kind, v, std::move(children), std::move(bag)});
        return nd.nodes.size() - 1;
    };
    // Walks node `from` (bag `have`) to bag `want`: forgets first, then
    // introductions, both in increasing vertex order.
    auto morph = [&](std::size_t from, std::vector<Vertex> have, const std::vector<Vertex>& want) {
        for (Vertex v : std::vector<Vertex>(have))
            if (!contains_sorted(want, v)) {
                have.erase(std::find(have.begin(), have.end(), v));
                from = add(NiceKind::forget, v, {from}, have);
            }
        for (Vertex v : want)
            if (!contains_sorted(have, v)) {
                have.insert(std::upper_bound(have.begin(), have.end(), v), v);
                from = add(NiceKind::introduce, v, {from}, have);
            }
        return from;
    };

    std::function<std::size_t(std::size_t, std::size_t)> build = [&](std::size_t b, std::size_t parent) {
        const auto& bag = input.bags[b];
        std::vector<std::size_t> tops;
        for (auto c : nbr[b])
            if (c != parent)
                tops.push_back(morph(build(c, b), input.bags[c], bag));
        if (tops.empty()) {
            auto node = add(NiceKind::leaf, bag.front(), {}, {bag.front()});
            return morph(node, {bag.front()}, bag);
        }
        std::size_t acc = tops.front();
        for (std::size_t i = 1; i < tops.size(); ++i)
            acc = add(NiceKind::join, 0, {acc, tops[i]}, bag);
        return acc;
    };
    nd.root = build(root, static_cast<std::size_t>(-1));
    return nd;
}

DecompositionCheck validate_nice(const Graph& g, const NiceDecomposition& nd)
{
    auto fail = [](std::size_t i, const std::string& what) {
        return DecompositionCheck{false, "node " + std::to_string(i) + ": " + what};
    };
    if (nd.nodes.empty() || nd.root >= nd.nodes.size())
        return {false, "no root"};
    std::vector<int> parents(nd.nodes.size(), 0);
    for (std::size_t i = 0; i < nd.nodes.size(); ++i) {
        const auto& node = nd.nodes[i];
        if (!std::is_sorted(node.bag.begin(), node.bag.end()))
            return fail(i, "bag not sorted");
        for (auto c : node.children) {
            if (c >= i)
                return fail(i, "child does not precede parent");
            ++parents[c];
        }
        auto child_bag = [&](std::size_t k) -> const std::vector<Vertex>& {
            return nd.nodes[node.children[k]].bag;
        };
        switch (node.kind) {
        case NiceKind::leaf:
            if (!node.children.empty() || node.bag != std::vector<Vertex>{node.vertex})
                return fail(i, "leaf must hold exactly its vertex");
            break;
        case NiceKind::introduce: {
            if (node.children.size() != 1)
                return fail(i, "introduce needs one child");
            auto expect = child_bag(0);
            if (contains_sorted(expect, node.vertex))
                return fail(i, "introduced vertex already present");
            expect.insert(std::upper_bound(expect.begin(), expect.end(), node.vertex), node.vertex);
            if (expect != node.bag)
                return fail(i, "introduce bag mismatch");
            break;
        }
        case NiceKind::forget: {
            if (node.children.size() != 1)
                return fail(i, "forget needs one child");
            auto expect = child_bag(0);
            auto it = std::lower_bound(expect.begin(), expect.end(), node.vertex);
            if (it == expect.end() || *it != node.vertex)
                return fail(i, "forgotten vertex absent from child");
            expect.erase(it);
            if (expect != node.bag)
                return fail(i, "forget bag mismatch");
            break;
        }
        case NiceKind::join:
            if (node.children.size() != 2 || child_bag(0) != node.bag || child_bag(1) != node.bag)
                return fail(i, "join children must share its bag");
            break;
        }
    }
    for (std::size_t i = 0; i < nd.nodes.size(); ++i)
        if (parents[i] != (i == nd.root ? 0 : 1))
            return fail(i, "not a rooted tree");
    return validate_decomposition(g, nd.flatten());
}

DpResult treewidth_solve(const Graph& g, const std::optional<TreeDecomposition>& td)
{
    auto nice = make_nice(g, td ? *td : build_decomposition(g));
    return dp_solve(g, nice);
}

} // namespace cmc
