#pragma once

// Corpus batch runner: applies a task list to every graph, in parallel,
// assembling an order-normalized report. Per-graph failures are recorded in
// that graph's record and the batch continues.
//
// Exit-code contract: 0 everything passed; 1 input errors only; 2 any
// proof-level problem (a discharging verdict other than PASS, or an internal
// inconsistency surfaced by the reducer/solver).

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "fp45/classify.hpp"
#include "fp45/configs.hpp"
#include "fp45/corpus.hpp"
#include "fp45/discharging.hpp"
#include "fp45/jsonio.hpp"
#include "fp45/partition.hpp"
#include "fp45/planegraph.hpp"
#include "fp45/reducer.hpp"

namespace fp45 {

struct Task {
    enum class Kind { Classify, Detect, Audit, Solve, Partition };
    Kind kind = Kind::Classify;
    SpecPair specs = make_specs("F3", "F4");  // Solve only

    // "classify" | "detect" | "audit" | "solve:F3,F4" | "partition"
    static Task parse(std::string_view s) {
        if (s == "classify") return {Kind::Classify, {}};
        if (s == "detect") return {Kind::Detect, {}};
        if (s == "audit") return {Kind::Audit, {}};
        if (s == "partition") return {Kind::Partition, {}};
        if (s.rfind("solve:", 0) == 0) {
            std::string_view rest = s.substr(6);
            auto comma = rest.find(',');
            if (comma == std::string_view::npos)
                throw Error(ErrorKind::ParseError,
                            "solve task wants two specs, e.g. solve:F3,F4");
            return {Kind::Solve, make_specs(rest.substr(0, comma),
                                            rest.substr(comma + 1))};
        }
        throw Error(ErrorKind::ParseError, "unknown task '" + std::string(s) + "'");
    }

    std::string name() const {
        switch (kind) {
            case Kind::Classify: return "classify";
            case Kind::Detect: return "detect";
            case Kind::Audit: return "audit";
            case Kind::Solve:
                return "solve:" + specs[0].name() + "," + specs[1].name();
            case Kind::Partition: return "partition";
        }
        return "?";
    }
};

struct GraphRecord {
    int id = 0;
    int n = 0, m = 0;
    std::optional<ClassReport> membership;
    std::optional<json> classification;
    std::map<std::string, int> configs_found;   // kind name -> witness count
    std::optional<std::string> audit_verdict;
    std::optional<json> audit;
    std::map<std::string, std::string> solve_status;  // task name -> status
    std::map<std::string, json> solve_partition;
    std::optional<json> partition;               // reducer output + trace summary
    int reduce_steps = 0;
    int reduce_fallbacks = 0;
    std::vector<std::string> errors;
    bool violation = false;  // proof-level failure
    std::map<std::string, double> timings_ms;
};

struct BatchOptions {
    int jobs = 0;  // 0 = hardware concurrency; FP_JOBS overrides
    int solver_cap = 26;
    PendentMode pendent_mode = PendentMode::PerRecord;
    ReduceOptions reduce;
    int detect_cap = 10000;
};

struct RunReport {
    std::vector<GraphRecord> records;
    int count = 0;
    int in_class = 0;
    int audit_pass = 0;
    int audit_violation = 0;
    int partition_valid = 0;
    int fallbacks = 0;
    int input_errors = 0;
    int violations = 0;
    int exit_code = 0;
};

namespace detail {

inline int resolve_jobs(int requested) {
    if (const char* env = std::getenv("FP_JOBS")) {
        const int j = std::atoi(env);
        if (j > 0) return j;
    }
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

inline GraphRecord run_tasks_on(const PlaneGraph& g, int id,
                                const std::vector<Task>& tasks,
                                const BatchOptions& opt) {
    GraphRecord rec;
    rec.id = id;
    rec.n = g.num_vertices();
    rec.m = g.num_edges();
    auto timed = [&](const std::string& key, auto&& body) {
        const auto t0 = std::chrono::steady_clock::now();
        try {
            body();
        } catch (const Error& e) {
            rec.errors.push_back(std::string(to_string(e.kind())) + ": " + e.what());
            if (e.kind() == ErrorKind::InternalInconsistency) rec.violation = true;
        }
        const auto t1 = std::chrono::steady_clock::now();
        rec.timings_ms[key] =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
    };

    for (const Task& t : tasks) {
        switch (t.kind) {
            case Task::Kind::Classify:
                timed("classify", [&] {
                    rec.membership = class_membership(g);
                    rec.classification = to_json(classify(g));
                });
                break;
            case Task::Kind::Detect:
                timed("detect", [&] {
                    if (!rec.membership) rec.membership = class_membership(g);
                    const Classification c = classify(g);
                    for (int k = 0; k < 13; ++k) {
                        const auto kind = static_cast<ConfigKind>(k);
                        const auto ws = detect(g, c, kind, opt.detect_cap);
                        if (!ws.empty())
                            rec.configs_found[to_string(kind)] =
                                static_cast<int>(ws.size());
                    }
                });
                break;
            case Task::Kind::Audit:
                timed("audit", [&] {
                    if (!rec.membership) rec.membership = class_membership(g);
                    const AuditReport r = audit(g, opt.pendent_mode);
                    rec.audit_verdict = to_string(r.verdict);
                    rec.audit = to_json(r);
                    if (r.verdict != AuditReport::Verdict::Pass) rec.violation = true;
                });
                break;
            case Task::Kind::Solve:
                timed(t.name(), [&] {
                    try {
                        auto s = solve(g, t.specs, {opt.solver_cap});
                        rec.solve_status[t.name()] = s ? "feasible" : "infeasible";
                        if (s) rec.solve_partition[t.name()] = to_json(*s);
                    } catch (const Error& e) {
                        if (e.kind() != ErrorKind::TooLarge) throw;
                        rec.solve_status[t.name()] = "too_large";
                    }
                });
                break;
            case Task::Kind::Partition:
                timed("partition", [&] {
                    auto [p, trace] = partition_constructively(g, opt.reduce);
                    if (verify(g, p)) {
                        rec.violation = true;
                        rec.errors.push_back(
                            "InternalInconsistency: reducer output failed verify");
                        return;
                    }
                    rec.reduce_steps = static_cast<int>(trace.steps.size());
                    rec.reduce_fallbacks = trace.fallback_count;
                    rec.partition =
                        json{{"partition", to_json(p)}, {"trace", to_json(trace)}};
                })
                ;
                break;
        }
    }
    return rec;
}

}  // namespace detail

inline RunReport run_batch(const std::vector<PlaneGraph>& corpus,
                           const std::vector<Task>& tasks,
                           const BatchOptions& opt = {}) {
    RunReport rep;
    rep.count = static_cast<int>(corpus.size());
    rep.records.resize(corpus.size());

    const int jobs =
        std::max(1, std::min(detail::resolve_jobs(opt.jobs),
                             static_cast<int>(corpus.size() ? corpus.size() : 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= corpus.size()) break;
            rep.records[i] =
                detail::run_tasks_on(corpus[i], static_cast<int>(i), tasks, opt);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const auto& r : rep.records) {
        if (r.membership && r.membership->in_class) ++rep.in_class;
        if (r.audit_verdict) {
            if (*r.audit_verdict == std::string("PASS"))
                ++rep.audit_pass;
            else
                ++rep.audit_violation;
        }
        if (r.partition) ++rep.partition_valid;
        rep.fallbacks += r.reduce_fallbacks;
        if (!r.errors.empty()) ++rep.input_errors;
        if (r.violation) ++rep.violations;
    }
    rep.exit_code = rep.violations ? 2 : (rep.input_errors ? 1 : 0);
    return rep;
}

inline json to_json(const GraphRecord& r, bool include_timings = true) {
    json j{{"id", r.id}, {"n", r.n}, {"m", r.m}};
    if (r.membership) j["class"] = to_json(*r.membership);
    if (r.classification) j["classification"] = *r.classification;
    if (!r.configs_found.empty()) j["configs_found"] = r.configs_found;
    if (r.audit) j["audit"] = *r.audit;
    if (!r.solve_status.empty()) {
        j["solve"] = json::object();
        for (const auto& [name, status] : r.solve_status) {
            json s{{"status", status}};
            auto it = r.solve_partition.find(name);
            if (it != r.solve_partition.end()) s["partition"] = it->second;
            j["solve"][name] = s;
        }
    }
    if (r.partition) j["partition"] = *r.partition;
    if (!r.errors.empty()) j["errors"] = r.errors;
    j["violation"] = r.violation;
    if (include_timings) j["timings_ms"] = r.timings_ms;
    return j;
}

inline json to_json(const RunReport& rep, bool include_timings = true) {
    json records = json::array();
    for (const auto& r : rep.records)
        records.push_back(to_json(r, include_timings));
    return json{{"records", records},
                {"aggregate",
                 {{"count", rep.count},
                  {"in_class", rep.in_class},
                  {"audit_pass", rep.audit_pass},
                  {"audit_violation", rep.audit_violation},
                  {"partition_valid", rep.partition_valid},
                  {"fallbacks", rep.fallbacks},
                  {"input_errors", rep.input_errors},
                  {"violations", rep.violations}}},
                {"exit_code", rep.exit_code}};
}

}  // namespace fp45
