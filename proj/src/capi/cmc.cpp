/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#include "cmc/cmc.h"

#include "cmc/bench.hpp"
#include "cmc/error.hpp"
#include "cmc/exact.hpp"
#include "cmc/generators.hpp"
#include "cmc/graph_io.hpp"
#include "cmc/hardness.hpp"
#include "cmc/planar.hpp"
#include "cmc/thick_tree.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

struct cmc_graph {
    cmc::GraphFile file;
};

struct cmc_solution {
    cmc::Solution solution;
    std::vector<std::uint64_t> labels;
};

namespace {

thread_local std::string last_error;

cmc_status fail(cmc_status status, const std::string& message)
{
    last_error = message;
    return status;
}

/// Runs fn, translating library exceptions into status codes.
template <class Fn>
cmc_status guarded(Fn&& fn)
{
    try {
        fn();
        return CMC_OK;
    } catch (const cmc::Error& e) {
        return fail(static_cast<cmc_status>(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(CMC_SIZE_GUARD, "out of memory");
    } catch (const std::exception& e) {
        return fail(CMC_INTERNAL, e.what());
    }
}

char* dup(const std::string& s)
{
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* what)
{
    if (!p)
        throw cmc::InvalidInput(std::string(what) + " must not be null");
}

cmc::Weight weight_or(const char* text, const cmc::Weight& fallback)
{
    return text ? cmc::parse_weight(text) : fallback;
}

cmc_solution* wrap(const cmc_graph* g, cmc::Solution s)
{
    auto* out = new cmc_solution{std::move(s), {}};
    for (auto v : out->solution.vertices.members())
        out->labels.push_back(g->file.labels[v]);
    return out;
}

} // namespace

extern "C" {

const char* cmc_version(void)
{
    return "1.0.0";
}

const char* cmc_last_error(void)
{
    return last_error.c_str();
}

void cmc_string_free(char* s)
{
    std::free(s);
}

cmc_status cmc_graph_parse(const char* text, cmc_graph** out)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new cmc_graph{cmc::parse_graph(text)};
    });
}

cmc_status cmc_graph_read_file(const char* path, cmc_graph** out)
{
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new cmc_graph{cmc::read_graph_file(path)};
    });
}

cmc_status cmc_graph_generate(const char* family, uint64_t seed, cmc_graph** out)
{
    return guarded([&] {
        require(family, "family");
        require(out, "out");
        *out = new cmc_graph{cmc::generate_instance(cmc::parse_family_spec(family), seed)};
    });
}

void cmc_graph_free(cmc_graph* g)
{
    delete g;
}

size_t cmc_graph_vertex_count(const cmc_graph* g)
{
    return g ? g->file.graph.n() : 0;
}

size_t cmc_graph_edge_count(const cmc_graph* g)
{
    return g ? g->file.graph.m() : 0;
}

int cmc_graph_has_embedding(const cmc_graph* g)
{
    return g && g->file.rotation ? 1 : 0;
}

cmc_status cmc_graph_write(const cmc_graph* g, char** text)
{
    return guarded([&] {
        require(g, "graph");
        require(text, "text");
        *text = dup(cmc::write_graph(g->file));
    });
}

cmc_status cmc_generator_families(char** text)
{
    return guarded([&] {
        require(text, "text");
        std::string out;
        for (const auto& f : cmc::generator_families())
            out += f + "\n";
        *text = dup(out);
    });
}

cmc_status cmc_solve_bcmc(const cmc_graph* g, uint64_t seed, cmc_solution** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = wrap(g, cmc::bcmc_approx(g->file.graph, seed));
    });
}

cmc_status cmc_solve_wcmc(const cmc_graph* g, const char* epsilon, uint64_t seed, cmc_solution** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = wrap(g, cmc::wcmc_approx(g->file.graph, weight_or(epsilon, cmc::Weight(1)), seed));
    });
}

cmc_status cmc_solve_random_half(const cmc_graph* g, size_t trials, uint64_t seed, cmc_solution** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = wrap(g, cmc::random_half_cmc(g->file.graph, trials, seed));
    });
}

cmc_status cmc_solve_brute_force(const cmc_graph* g, int force, cmc_solution** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = wrap(g, cmc::brute_force_cmc(g->file.graph, force != 0));
    });
}

cmc_status cmc_solve_treewidth(const cmc_graph* g, const char* td_text, cmc_solution** out, char** report)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        std::optional<cmc::TreeDecomposition> td;
        if (td_text)
            td = cmc::parse_td(td_text, g->file.labels);
        auto r = cmc::treewidth_solve(g->file.graph, td);
        if (report) {
            nlohmann::json j{{"width", r.stats.width},
                             {"nodes", r.stats.nodes},
                             {"max_states", r.stats.max_states},
                             {"total_states", r.stats.total_states},
                             {"max_blocks", r.stats.max_blocks},
                             {"max_bag", r.stats.max_bag},
                             {"cut", cmc::format_weight(r.solution.cut_value)}};
            *report = dup(j.dump(2));
        }
        *out = wrap(g, std::move(r.solution));
    });
}

cmc_status cmc_solve_ptas(const cmc_graph* g, const char* epsilon, cmc_solution** out, char** report)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        if (!g->file.rotation)
            throw cmc::InvalidInput("ptas needs a rotation system ('rot' lines) in the graph");
        auto emb = cmc::trace_faces(g->file.graph, *g->file.rotation, g->file.outer);
        auto r = cmc::ptas_solve(g->file.graph, emb, weight_or(epsilon, cmc::Weight(1, 2)));
        if (report)
            *report = dup(cmc::ptas_report_json(r));
        *out = wrap(g, std::move(r.solution));
    });
}

void cmc_solution_free(cmc_solution* s)
{
    delete s;
}

size_t cmc_solution_size(const cmc_solution* s)
{
    return s ? s->labels.size() : 0;
}

size_t cmc_solution_labels(const cmc_solution* s, uint64_t* labels, size_t capacity)
{
    if (!s || !labels)
        return 0;
    size_t count = std::min(capacity, s->labels.size());
    std::copy_n(s->labels.begin(), count, labels);
    return count;
}

cmc_status cmc_solution_cut(const cmc_solution* s, char** text)
{
    return guarded([&] {
        require(s, "solution");
        require(text, "text");
        *text = dup(cmc::format_weight(s->solution.cut_value));
    });
}

double cmc_solution_cut_double(const cmc_solution* s)
{
    return s ? cmc::to_double(s->solution.cut_value) : 0.0;
}

int cmc_solution_connected(const cmc_solution* s)
{
    return s && s->solution.connected ? 1 : 0;
}

cmc_status cmc_solution_verify(const cmc_graph* g, const cmc_solution* s)
{
    return guarded([&] {
        require(g, "graph");
        require(s, "solution");
        if (s->solution.vertices.universe() != g->file.graph.n())
            throw cmc::InvalidInput("solution belongs to a different graph");
        if (!cmc::verify(g->file.graph, s->solution))
            throw cmc::InvariantViolation("solution failed verification");
    });
}

cmc_status cmc_decompose(const cmc_graph* g, char** td_text)
{
    return guarded([&] {
        require(g, "graph");
        require(td_text, "td_text");
        *td_text = dup(cmc::write_td(cmc::build_decomposition(g->file.graph), g->file.labels));
    });
}

cmc_status cmc_validate_td(const cmc_graph* g, const char* td_text, char** report)
{
    return guarded([&] {
        require(g, "graph");
        require(td_text, "td_text");
        require(report, "report");
        auto td = cmc::parse_td(td_text, g->file.labels);
        auto check = cmc::validate_decomposition(g->file.graph, td);
        nlohmann::json j{{"valid", check.valid}, {"width", td.width()}, {"bags", td.bags.size()}};
        if (!check.valid)
            j["witness"] = check.witness;
        *report = dup(j.dump(2));
    });
}

cmc_status cmc_validate_coloring(const cmc_graph* g, size_t k, char** report)
{
    return guarded([&] {
        require(g, "graph");
        require(report, "report");
        if (!g->file.rotation)
            throw cmc::InvalidInput("coloring needs a rotation system ('rot' lines) in the graph");
        auto emb = cmc::trace_faces(g->file.graph, *g->file.rotation, g->file.outer);
        auto c = cmc::radial_coloring(emb, k);
        nlohmann::json j{{"valid", c.check.passed}, {"k", c.k}, {"violations", c.check.violations},
                         {"faces", emb.faces.size()}, {"class_of", c.class_of}, {"levels", c.levels}};
        if (c.check.witness) {
            const auto& g0 = g->file.graph;
            auto edge = [&](cmc::EdgeId e) {
                return std::to_string(g->file.labels[g0.edge(e).u]) + "-" +
                       std::to_string(g->file.labels[g0.edge(e).v]);
            };
            j["witness"] = {edge(c.check.witness->first), edge(c.check.witness->second)};
        }
        *report = dup(j.dump(2));
    });
}

cmc_status cmc_validate_pmsat(const char* pmsat_text, char** report)
{
    return guarded([&] {
        require(pmsat_text, "pmsat_text");
        require(report, "report");
        auto inst = cmc::parse_pm3sat(pmsat_text);
        auto rep = cmc::validate_pm3sat(inst);
        nlohmann::json violations = nlohmann::json::array();
        for (const auto& v : rep.violations)
            violations.push_back({{"side", v.positive_side ? "positive" : "negative"},
                                  {"first", v.first + 1},
                                  {"second", v.second + 1},
                                  {"reason", v.reason}});
        nlohmann::json j{{"valid", rep.valid}, {"n", inst.n}, {"m", inst.m()}, {"violations", violations}};
        *report = dup(j.dump(2));
    });
}

cmc_status cmc_reduce_sat(const char* pmsat_text, char** graph_text, char** sidecar_json)
{
    return guarded([&] {
        require(pmsat_text, "pmsat_text");
        require(graph_text, "graph_text");
        auto gdt = cmc::sat_to_cmc(cmc::parse_pm3sat(pmsat_text));
        auto text = cmc::write_graph(gdt.graph);
        auto side = sidecar_json ? cmc::gadget_sidecar_json(gdt) : std::string();
        *graph_text = dup(text);
        if (sidecar_json)
            *sidecar_json = dup(side);
    });
}

cmc_status cmc_bench(const char* suite_json, const char* format, char** out)
{
    return guarded([&] {
        require(suite_json, "suite_json");
        require(out, "out");
        std::string fmt = format ? format : "csv";
        if (fmt != "csv" && fmt != "json")
            throw cmc::InvalidInput("bench format must be csv or json");
        auto records = cmc::run_bench(cmc::parse_suite(suite_json));
        *out = dup(fmt == "csv" ? cmc::records_csv(records) : cmc::records_json(records));
    });
}

} // extern "C"
