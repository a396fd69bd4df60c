/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#include "cmc/bench.hpp"

#include "cmc/error.hpp"
#include "cmc/exact.hpp"
#include "cmc/planar.hpp"
#include "cmc/thick_tree.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <future>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace cmc {

namespace {

using nlohmann::json;

Weight json_weight(const json& j, const char* what)
{
    if (j.is_string())
        return parse_weight(j.get<std::string>());
    if (j.is_number_integer())
        return Weight(j.get<long long>());
    throw InvalidInput(std::string("suite: ") + what + " must be an integer or a string such as \"1/2\"");
}

AlgorithmSpec parse_algorithm(const json& j)
{
    AlgorithmSpec a;
    if (j.is_string()) {
        a.name = j.get<std::string>();
    } else if (j.is_object() && j.contains("name") && j["name"].is_string()) {
        a.name = j["name"].get<std::string>();
        if (j.contains("epsilon"))
            a.epsilon = json_weight(j["epsilon"], "epsilon");
        if (j.contains("trials")) {
            if (!j["trials"].is_number_unsigned() || j["trials"].get<std::uint64_t>() == 0)
                throw InvalidInput("suite: trials must be a positive integer");
            a.trials = j["trials"].get<std::size_t>();
        }
        if (j.contains("seed")) {
            if (!j["seed"].is_number_unsigned())
                throw InvalidInput("suite: algorithm seed must be a nonnegative integer");
            a.seed = j["seed"].get<std::uint64_t>();
        }
    } else {
        throw InvalidInput("suite: each algorithm is a name or an object with a name");
    }
    static const std::vector<std::string> known{"bcmc", "wcmc", "randomhalf", "bf", "tw", "ptas"};
    if (std::find(known.begin(), known.end(), a.name) == known.end())
        throw InvalidInput("suite: unknown algorithm '" + a.name + "'");
    if (a.epsilon && a.name != "wcmc" && a.name != "ptas")
        throw InvalidInput("suite: only wcmc and ptas take an epsilon");
    if (a.trials && a.name != "randomhalf")
        throw InvalidInput("suite: only randomhalf takes trials");
    return a;
}

Solution run_algorithm(const AlgorithmSpec& a, const GraphFile& f, std::uint64_t instance_seed)
{
    const Graph& g = f.graph;
    if (a.name == "bcmc")
        return bcmc_approx(g, a.seed);
    if (a.name == "wcmc")
        return wcmc_approx(g, a.epsilon.value_or(Weight(1)), a.seed);
    if (a.name == "randomhalf")
        return random_half_cmc(g, a.trials.value_or(1000), a.seed ^ instance_seed);
    if (a.name == "bf")
        return brute_force_cmc(g);
    if (a.name == "tw")
        return treewidth_solve(g).solution;
    if (a.name == "ptas") {
        if (!f.rotation)
            throw InvalidInput("ptas needs an embedding; this family emits none");
        return ptas_solve(g, trace_faces(g, *f.rotation, f.outer), a.epsilon.value_or(Weight(1, 2))).solution;
    }
    throw InvalidInput("unknown algorithm '" + a.name + "'");
}

std::optional<Weight> oracle_optimum(const Graph& g)
{
    try {
        if (g.n() <= kBruteForceLimit)
            return brute_force_cmc(g).cut_value;
        return treewidth_solve(g).solution.cut_value;
    } catch (const SizeGuardError&) {
        return std::nullopt;
    }
}

struct Job {
    std::size_t instance;
    std::size_t seed_index;
    const SuiteInstance* spec;
    std::uint64_t seed;
};

std::vector<ExperimentRecord> run_job(const Suite& suite, const Job& job)
{
    std::vector<ExperimentRecord> out;
    auto base = [&](std::size_t algo) {
        ExperimentRecord r;
        char id[64];
        std::snprintf(id, sizeof id, "i%04zu-s%03zu-a%02zu", job.instance, job.seed_index, algo);
        r.id = id;
        r.generator = job.spec->family.str();
        r.seed = job.seed;
        return r;
    };
    GraphFile f;
    try {
        f = generate_instance(job.spec->family, job.seed);
    } catch (const std::exception& e) {
        for (std::size_t a = 0; a < suite.algorithms.size(); ++a) {
            auto r = base(a);
            r.algorithm = suite.algorithms[a].name;
            r.params = suite.algorithms[a].params();
            r.error = std::string("generator: ") + e.what();
            out.push_back(std::move(r));
        }
        return out;
    }
    std::optional<Weight> optimum;
    std::string oracle_error;
    if (suite.oracle) {
        try {
            optimum = oracle_optimum(f.graph);
        } catch (const std::exception& e) {
            oracle_error = std::string("oracle: ") + e.what();
        }
    }
    for (std::size_t a = 0; a < suite.algorithms.size(); ++a) {
        const auto& algo = suite.algorithms[a];
        auto r = base(a);
        r.algorithm = algo.name;
        r.params = algo.params();
        r.n = f.graph.n();
        r.m = f.graph.m();
        r.optimum = optimum;
        r.error = oracle_error;
        auto start = std::chrono::steady_clock::now();
        try {
            auto sol = run_algorithm(algo, f, job.seed);
            r.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            r.connected = is_connected_induced(f.graph, sol.vertices);
            r.verified = verify(f.graph, sol);
            if (r.verified) {
                r.cut = sol.cut_value;
            } else {
                r.error = "solution failed re-verification";
            }
        } catch (const std::exception& e) {
            r.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            r.error = e.what();
        }
        if (r.cut && r.optimum) {
            if (*r.cut > 0)
                r.ratio = *r.optimum / *r.cut;
            else if (*r.optimum == 0)
                r.ratio = Weight(1);
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

std::string opt_weight(const std::optional<Weight>& w)
{
    return w ? format_weight(*w) : std::string();
}

std::string format_ms(double ms)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

} // namespace

std::string AlgorithmSpec::params() const
{
    std::string out;
    auto add = [&](const std::string& kv) { out += (out.empty() ? "" : ";") + kv; };
    if (epsilon)
        add("epsilon=" + format_weight(*epsilon));
    if (trials)
        add("trials=" + std::to_string(*trials));
    if (seed)
        add("seed=" + std::to_string(seed));
    return out;
}

Suite parse_suite(std::string_view json_text)
{
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("suite is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw InvalidInput("suite must be a JSON object");
    Suite s;
    if (j.contains("oracle")) {
        if (!j["oracle"].is_boolean())
            throw InvalidInput("suite: oracle must be true or false");
        s.oracle = j["oracle"].get<bool>();
    }
    for (const auto& a : j.value("algorithms", json::array()))
        s.algorithms.push_back(parse_algorithm(a));
    for (const auto& inst : j.value("instances", json::array())) {
        SuiteInstance si;
        if (inst.is_string()) {
            si.family = parse_family_spec(inst.get<std::string>());
        } else if (inst.is_object() && inst.contains("family") && inst["family"].is_string()) {
            si.family = parse_family_spec(inst["family"].get<std::string>());
            for (const auto& seed : inst.value("seeds", json::array())) {
                if (!seed.is_number_unsigned())
                    throw InvalidInput("suite: seeds must be nonnegative integers");
                si.seeds.push_back(seed.get<std::uint64_t>());
            }
        } else {
            throw InvalidInput("suite: each instance is a family string or an object with a family");
        }
        if (si.seeds.empty())
            si.seeds.push_back(0);
        s.instances.push_back(std::move(si));
    }
    return s;
}

std::vector<ExperimentRecord> run_bench(const Suite& suite)
{
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < suite.instances.size(); ++i)
        for (std::size_t k = 0; k < suite.instances[i].seeds.size(); ++k)
            jobs.push_back({i, k, &suite.instances[i], suite.instances[i].seeds[k]});

    std::vector<ExperimentRecord> records;
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t begin = 0; begin < jobs.size(); begin += workers) {
        std::vector<std::future<std::vector<ExperimentRecord>>> batch;
        for (std::size_t j = begin; j < std::min(jobs.size(), begin + workers); ++j)
            batch.push_back(std::async(std::launch::async, run_job, std::cref(suite), std::cref(jobs[j])));
        for (auto& fut : batch)
            for (auto& r : fut.get())
                records.push_back(std::move(r));
    }
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return records;
}

std::string records_csv(const std::vector<ExperimentRecord>& records)
{
    std::ostringstream out;
    out << "id,generator,seed,algorithm,params,n,m,cut,optimum,ratio,time_ms,connected,verified,error\n";
    for (const auto& r : records)
        out << r.id << ',' << csv_field(r.generator) << ',' << r.seed << ',' << r.algorithm << ','
            << csv_field(r.params) << ',' << r.n << ',' << r.m << ',' << opt_weight(r.cut) << ','
            << opt_weight(r.optimum) << ',' << opt_weight(r.ratio) << ',' << format_ms(r.time_ms) << ','
            << (r.connected ? 1 : 0) << ',' << (r.verified ? 1 : 0) << ',' << csv_field(r.error) << '\n';
    return out.str();
}

std::string records_json(const std::vector<ExperimentRecord>& records)
{
    json arr = json::array();
    for (const auto& r : records) {
        json j{{"id", r.id},
               {"generator", r.generator},
               {"seed", r.seed},
               {"algorithm", r.algorithm},
               {"params", r.params},
               {"n", r.n},
               {"m", r.m},
               {"time_ms", r.time_ms},
               {"connected", r.connected},
               {"verified", r.verified}};
        j["cut"] = r.cut ? json(format_weight(*r.cut)) : json(nullptr);
        j["optimum"] = r.optimum ? json(format_weight(*r.optimum)) : json(nullptr);
        j["ratio"] = r.ratio ? json(format_weight(*r.ratio)) : json(nullptr);
        if (!r.error.empty())
            j["error"] = r.error;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

} // namespace cmc
