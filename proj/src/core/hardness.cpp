/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#include "cmc/hardness.hpp"

#include "cmc/error.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <json.hpp>

namespace cmc {

namespace {

constexpr std::uint64_t kMaxGadgetVertices = std::uint64_t{1} << 25;
constexpr std::size_t kOracleVariableLimit = 20;

std::pair<std::size_t, std::size_t> interval(const std::vector<std::size_t>& c)
{
    auto [lo, hi] = std::minmax_element(c.begin(), c.end());
    return {*lo, *hi};
}

void check_side(const PM3Sat& inst, bool positive, PM3SatReport& rep)
{
    const auto& side = positive ? inst.positive : inst.negative;
    auto fail = [&](std::size_t a, std::size_t b, std::string why) {
        rep.valid = false;
        rep.violations.push_back({positive, a, b, std::move(why)});
    };
    std::vector<char> usable(side.size(), 1);
    for (std::size_t i = 0; i < side.size(); ++i) {
        if (side[i].empty() || side[i].size() > 3) {
            fail(i, i, "clause must have one to three literals");
            usable[i] = 0;
            continue;
        }
        for (auto v : side[i])
            if (v < 1 || v > inst.n) {
                fail(i, i, "variable " + std::to_string(v) + " out of range");
                usable[i] = 0;
                break;
            }
    }
    for (std::size_t i = 0; i < side.size(); ++i)
        for (std::size_t j = i + 1; j < side.size(); ++j) {
            if (!usable[i] || !usable[j])
                continue;
            auto a = interval(side[i]);
            auto b = interval(side[j]);
            if (a.first > b.first || (a.first == b.first && a.second > b.second))
                std::swap(a, b);
            // a starts first; crossing means b starts strictly inside a and
            // ends strictly beyond it.
            if (a.first < b.first && b.first < a.second && a.second < b.second)
                fail(i, j, "intervals [" + std::to_string(a.first) + "," + std::to_string(a.second) + "] and [" +
                               std::to_string(b.first) + "," + std::to_string(b.second) + "] cross");
        }
}

} // namespace

PM3SatReport validate_pm3sat(const PM3Sat& inst)
{
    PM3SatReport rep;
    check_side(inst, true, rep);
    check_side(inst, false, rep);
    return rep;
}

PM3Sat parse_pm3sat(std::string_view text)
{
    PM3Sat inst;
    std::optional<std::size_t> declared_m;
    detail::for_each_line(text, [&](std::size_t lineno, const std::vector<std::string_view>& tok) {
        auto where = "line " + std::to_string(lineno) + ": ";
        if (tok[0] == "c")
            return;
        if (tok[0] == "p") {
            if (declared_m)
                throw InvalidInput(where + "duplicate problem line");
            if (tok.size() != 4 || tok[1] != "pmsat")
                throw InvalidInput(where + "expected 'p pmsat <n> <m>'");
            inst.n = detail::parse_u64(tok[2], lineno, "variable count");
            declared_m = detail::parse_u64(tok[3], lineno, "clause count");
            return;
        }
        if (tok[0] == "cp" || tok[0] == "cn") {
            if (!declared_m)
                throw InvalidInput(where + "clause before the problem line");
            if (tok.size() < 2 || tok.size() > 4)
                throw InvalidInput(where + "a clause has one to three literals");
            std::vector<std::size_t> clause;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                auto v = detail::parse_u64(tok[i], lineno, "variable");
                if (v < 1 || v > inst.n)
                    throw InvalidInput(where + "variable " + std::to_string(v) + " out of range");
                clause.push_back(v);
            }
            (tok[0] == "cp" ? inst.positive : inst.negative).push_back(std::move(clause));
            return;
        }
        throw InvalidInput(where + "unknown line type '" + std::string(tok[0]) + "'");
    });
    if (!declared_m)
        throw InvalidInput("missing 'p pmsat' line");
    if (*declared_m != inst.m())
        throw InvalidInput("declared " + std::to_string(*declared_m) + " clauses, found " + std::to_string(inst.m()));
    return inst;
}

std::string write_pm3sat(const PM3Sat& inst)
{
    std::ostringstream out;
    out << "p pmsat " << inst.n << ' ' << inst.m() << '\n';
    for (bool pos : {true, false})
        for (const auto& c : pos ? inst.positive : inst.negative) {
            out << (pos ? "cp" : "cn");
            for (auto v : c)
                out << ' ' << v;
            out << '\n';
        }
    return out.str();
}

Vertex Gadget::literal(std::size_t var, bool value) const
{
    return static_cast<Vertex>(2 * var + (value ? 0 : 1));
}

Vertex Gadget::helper(std::size_t var, std::size_t k) const
{
    return static_cast<Vertex>(2 * source.n + var * K + k);
}

Vertex Gadget::clause(std::size_t j) const
{
    return static_cast<Vertex>(2 * source.n + source.n * K + source.n * K * K + j);
}

const std::vector<std::size_t>& Gadget::clause_vars(std::size_t j) const
{
    return j < source.positive.size() ? source.positive[j] : source.negative.at(j - source.positive.size());
}

bool Gadget::clause_positive(std::size_t j) const
{
    return j < source.positive.size();
}

VertexRole Gadget::role(Vertex v) const
{
    const std::uint64_t n = source.n, m = source.m();
    std::uint64_t x = v;
    auto u32 = [](std::uint64_t a) { return static_cast<std::uint32_t>(a); };
    if (x < 2 * n)
        return {x % 2 ? GadgetRole::neg_literal : GadgetRole::pos_literal, u32(x / 2)};
    x -= 2 * n;
    if (x < n * K)
        return {GadgetRole::helper, u32(x / K), u32(x % K)};
    x -= n * K;
    if (x < n * K * K) {
        auto h = x / K;
        return {GadgetRole::helper_leaf, u32(h / K), u32(h % K), 0, u32(x % K)};
    }
    x -= n * K * K;
    if (x < m)
        return {GadgetRole::clause, 0, 0, u32(x)};
    x -= m;
    if (x < m * sqrt_K)
        return {GadgetRole::clause_leaf, 0, 0, u32(x / sqrt_K), u32(x % sqrt_K)};
    throw InvalidInput("vertex " + std::to_string(v) + " is not in the gadget");
}

std::string Gadget::role_name(Vertex v) const
{
    auto r = role(v);
    auto s = [](std::uint32_t a) { return std::to_string(a + 1); };
    switch (r.kind) {
    case GadgetRole::pos_literal:
        return "x" + s(r.var);
    case GadgetRole::neg_literal:
        return "~x" + s(r.var);
    case GadgetRole::helper:
        return "h" + s(r.var) + "." + s(r.helper);
    case GadgetRole::helper_leaf:
        return "h" + s(r.var) + "." + s(r.helper) + ":" + s(r.leaf);
    case GadgetRole::clause:
        return "C" + s(r.clause);
    case GadgetRole::clause_leaf:
        return "C" + s(r.clause) + ":" + s(r.leaf);
    }
    return {};
}

Gadget sat_to_cmc(const PM3Sat& inst)
{
    auto rep = validate_pm3sat(inst);
    if (!rep.valid) {
        const auto& v = rep.violations.front();
        throw InvalidInput(std::string("invalid PM-3SAT instance: ") + (v.positive_side ? "positive" : "negative") +
                           " clause " + std::to_string(v.first + 1) + ": " + v.reason);
    }
    Gadget gdt;
    gdt.source = inst;
    const std::uint64_t n = inst.n, m = inst.m();
    gdt.sqrt_K = m + 1;
    gdt.K = gdt.sqrt_K * gdt.sqrt_K;
    const std::uint64_t K = gdt.K;
    if (n > kMaxGadgetVertices || K > kMaxGadgetVertices)
        throw SizeGuardError("gadget too large");
    const std::uint64_t total = 2 * n + n * K + n * K * K + m + m * gdt.sqrt_K;
    if (total > kMaxGadgetVertices)
        throw SizeGuardError("gadget would have " + std::to_string(total) + " vertices");
    gdt.threshold = m * gdt.sqrt_K + n * K + n * K * K;

    std::vector<Edge> edges;
    auto add = [&](Vertex a, Vertex b) { edges.push_back({std::min(a, b), std::max(a, b), Weight(1)}); };
    Vertex next_leaf = static_cast<Vertex>(2 * n + n * K);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < K; ++k) {
            Vertex h = gdt.helper(i, k);
            add(h, gdt.literal(i, true));
            add(h, gdt.literal(i, false));
            for (std::size_t l = 0; l < K; ++l)
                add(h, next_leaf++);
        }
    for (std::size_t i = 0; i + 1 < n; ++i)
        add(gdt.helper(i, K - 1), gdt.helper(i + 1, 0));
    next_leaf = static_cast<Vertex>(gdt.clause(0) + m);
    for (std::size_t j = 0; j < m; ++j) {
        auto vars = gdt.clause_vars(j);
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        for (auto v : vars)
            add(gdt.clause(j), gdt.literal(v - 1, gdt.clause_positive(j)));
        for (std::size_t l = 0; l < gdt.sqrt_K; ++l)
            add(gdt.clause(j), next_leaf++);
    }
    gdt.graph = Graph(total, std::move(edges));
    return gdt;
}

std::string gadget_sidecar_json(const Gadget& gdt)
{
    nlohmann::json roles = nlohmann::json::array();
    for (Vertex v = 0; v < gdt.graph.n(); ++v)
        roles.push_back(gdt.role_name(v));
    nlohmann::json out{{"K", gdt.K}, {"threshold", gdt.threshold}, {"n", gdt.source.n},
                       {"m", gdt.source.m()}, {"roles", std::move(roles)}};
    return out.dump();
}

namespace {

bool satisfied(const Gadget& gdt, std::size_t j, const std::vector<bool>& assignment)
{
    bool want = gdt.clause_positive(j);
    const auto& vars = gdt.clause_vars(j);
    return std::any_of(vars.begin(), vars.end(), [&](std::size_t v) { return assignment[v - 1] == want; });
}

/// Helpers, the chosen literal of each variable and the satisfied clauses.
std::vector<char> assignment_members(const Gadget& gdt, const std::vector<bool>& assignment)
{
    std::vector<char> in(gdt.graph.n(), 0);
    for (std::size_t i = 0; i < gdt.source.n; ++i) {
        in[gdt.literal(i, assignment[i])] = 1;
        for (std::size_t k = 0; k < gdt.K; ++k)
            in[gdt.helper(i, k)] = 1;
    }
    for (std::size_t j = 0; j < gdt.source.m(); ++j)
        if (satisfied(gdt, j, assignment))
            in[gdt.clause(j)] = 1;
    return in;
}

/// Unit-weight cut and connectivity of a membership vector.
std::pair<std::uint64_t, bool> count_cut(const Graph& g, const std::vector<char>& in)
{
    std::uint64_t cut = 0;
    std::optional<Vertex> start;
    std::size_t members = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (!in[v])
            continue;
        ++members;
        if (!start)
            start = v;
        for (const auto& inc : g.incident(v))
            cut += in[inc.neighbor] ? 0 : 1;
    }
    if (!start)
        return {0, false};
    std::vector<char> seen(g.n(), 0);
    std::deque<Vertex> q{*start};
    seen[*start] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        for (const auto& inc : g.incident(v))
            if (in[inc.neighbor] && !seen[inc.neighbor]) {
                seen[inc.neighbor] = 1;
                ++reached;
                q.push_back(inc.neighbor);
            }
    }
    return {cut, reached == members};
}

VertexSet to_set(const std::vector<char>& in)
{
    VertexSet s(in.size());
    for (Vertex v = 0; v < in.size(); ++v)
        if (in[v])
            s.insert(v);
    return s;
}

} // namespace

ForwardResult assignment_to_solution(const Gadget& gdt, const std::vector<bool>& assignment)
{
    if (assignment.size() != gdt.source.n)
        throw InvalidInput("assignment has " + std::to_string(assignment.size()) + " values for " +
                           std::to_string(gdt.source.n) + " variables");
    ForwardResult r;
    for (std::size_t j = 0; j < gdt.source.m(); ++j)
        if (!satisfied(gdt, j, assignment))
            r.unsatisfied.push_back(j);
    if (!r.unsatisfied.empty())
        return r;
    auto sol = evaluate(gdt.graph, to_set(assignment_members(gdt, assignment)));
    if (!sol.connected)
        throw InvariantViolation("assignment_to_solution: satisfying assignment gave a disconnected set");
    r.solution = std::move(sol);
    return r;
}

OracleResult structured_opt_oracle(const Gadget& gdt)
{
    const std::size_t n = gdt.source.n;
    if (n > kOracleVariableLimit)
        throw SizeGuardError("structured_opt_oracle: " + std::to_string(n) + " variables exceed the limit of " +
                             std::to_string(kOracleVariableLimit));
    if (n == 0)
        throw InvalidInput("structured_opt_oracle: instance has no variables");
    std::optional<std::uint64_t> best;
    std::uint64_t best_mask = 0;
    std::vector<bool> assignment(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i)
            assignment[i] = (mask >> i) & 1;
        auto [cut, connected] = count_cut(gdt.graph, assignment_members(gdt, assignment));
        if (!connected)
            throw InvariantViolation("structured_opt_oracle: assignment-shaped set is disconnected");
        if (!best || cut > *best)
            best = cut, best_mask = mask;
    }
    OracleResult r;
    r.value = *best;
    r.assignment.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        r.assignment[i] = (best_mask >> i) & 1;
    r.solution = evaluate(gdt.graph, to_set(assignment_members(gdt, r.assignment)));
    if (!r.solution.connected || r.solution.cut_value != Weight(r.value))
        throw InvariantViolation("structured_opt_oracle: recomputed cut disagrees");
    return r;
}

} // namespace cmc
