// Command-line front end: detect / audit / solve / partition / verify /
// enumerate / generate / ingest / run. Graph inputs are rotgraph text or
// planar_code binary, a file path or "-" for stdin.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fp45/batch.hpp"
#include "fp45/corpus.hpp"
#include "fp45/jsonio.hpp"

using namespace fp45;

namespace {

std::vector<PlaneGraph> load_graphs(const std::string& path) {
    if (path == "-") return ingest(std::cin);
    return ingest_file(path);
}

void write_json_to(const std::string& path, const json& j) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

void write_graphs(const std::string& path, const std::string& format,
                  const std::vector<PlaneGraph>& graphs) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!path.empty() && path != "-") {
        file.open(path, std::ios::binary);
        if (!file)
            throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
        out = &file;
    }
    if (format == "planar_code") {
        write_planar_code(*out, graphs);
    } else {
        for (const auto& g : graphs) write_rotgraph(*out, g);
    }
}

PendentMode parse_pendent_mode(const std::string& s) {
    if (s == "per-record") return PendentMode::PerRecord;
    if (s == "per-face") return PendentMode::PerFace;
    throw Error(ErrorKind::ParseError,
                "--pendent-mode wants per-record or per-face");
}

SpecPair parse_spec_pair(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw Error(ErrorKind::ParseError, "--specs wants e.g. F3,F4");
    return make_specs(s.substr(0, comma), s.substr(comma + 1));
}

int guarded(int (*body)(), const char* what) {
    (void)what;
    try {
        return body();
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::InternalInconsistency ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

// options shared by several subcommands
std::string g_input, g_json, g_out, g_format = "rotgraph";
std::string g_specs = "F3,F4", g_pendent = "per-record", g_fallback = "local";
std::string g_assignment;
std::vector<std::string> g_kinds, g_tasks;
int g_n = 7, g_count = 100, g_nmax = 40, g_cap = 26, g_base = 8, g_jobs = 0;
std::uint64_t g_seed = 0;
double g_decoration = 0.35;
std::string g_mix;
bool g_trace_flag = false;
std::string g_trace;

int cmd_detect() {
    auto graphs = load_graphs(g_input);
    json out = json::array();
    for (const auto& g : graphs) {
        json rec;
        rec["class"] = to_json(class_membership(g));
        const Classification c = classify(g);
        if (g_kinds.empty()) {
            rec["classification"] = to_json(c);
        } else {
            json ws = json::object();
            for (const auto& ks : g_kinds) {
                const auto kind = config_kind_from_string(ks);
                if (!kind)
                    throw Error(ErrorKind::ParseError, "unknown kind '" + ks + "'");
                json arr = json::array();
                for (const auto& w : detect(g, c, *kind))
                    arr.push_back(to_json(w));
                ws[ks] = arr;
            }
            rec["witnesses"] = ws;
        }
        out.push_back(rec);
    }
    write_json_to(g_json, out);
    return 0;
}

int cmd_audit() {
    auto graphs = load_graphs(g_input);
    const PendentMode mode = parse_pendent_mode(g_pendent);
    json out = json::array();
    int exit_code = 0;
    for (const auto& g : graphs) {
        try {
            const AuditReport r = audit(g, mode);
            out.push_back(to_json(r));
            if (r.verdict != AuditReport::Verdict::Pass) exit_code = 2;
        } catch (const Error& e) {
            out.push_back(json{{"error", std::string(to_string(e.kind())) + ": " +
                                             e.what()}});
            if (exit_code == 0) exit_code = 1;
        }
    }
    write_json_to(g_json, out);
    return exit_code;
}

int cmd_solve() {
    auto graphs = load_graphs(g_input);
    const SpecPair specs = parse_spec_pair(g_specs);
    json out = json::array();
    for (const auto& g : graphs) {
        json rec;
        try {
            auto s = solve(g, specs, {g_cap});
            rec["status"] = s ? "feasible" : "infeasible";
            if (s) {
                rec["partition"] = to_json(*s);
                std::cout << assignment_line(*s) << "\n";
            } else {
                std::cout << "infeasible\n";
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::TooLarge) throw;
            rec["status"] = "too_large";
            std::cout << "too_large\n";
        }
        out.push_back(rec);
    }
    if (!g_json.empty()) write_json_to(g_json, out);
    return 0;
}

int cmd_partition() {
    auto graphs = load_graphs(g_input);
    ReduceOptions opt;
    opt.base_case_size = g_base;
    opt.solver_cap = g_cap;
    const auto mode = fallback_mode_from_string(g_fallback);
    if (!mode)
        throw Error(ErrorKind::ParseError, "--fallback wants local, full or abort");
    opt.fallback = *mode;
    json out = json::array();
    json traces = json::array();
    for (const auto& g : graphs) {
        auto [p, trace] = partition_constructively(g, opt);
        std::cout << assignment_line(p) << "\n";
        out.push_back(to_json(p));
        traces.push_back(to_json(trace));
    }
    if (!g_json.empty()) write_json_to(g_json, out);
    if (!g_trace.empty()) write_json_to(g_trace, traces);
    return 0;
}

int cmd_verify() {
    auto graphs = load_graphs(g_input);
    if (g_assignment.empty()) {
        // No assignment: report class membership.
        json out = json::array();
        bool all = true;
        for (const auto& g : graphs) {
            auto r = class_membership(g);
            all = all && r.in_class;
            out.push_back(to_json(r));
        }
        write_json_to(g_json, out);
        return all ? 0 : 1;
    }
    std::ifstream in(g_assignment);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open '" + g_assignment + "'");
    const SpecPair specs = parse_spec_pair(g_specs);
    json out = json::array();
    int exit_code = 0;
    for (const auto& g : graphs) {
        std::string line;
        if (!(in >> line))
            throw Error(ErrorKind::ParseError, "assignment file ran out of lines");
        if (static_cast<int>(line.size()) != g.num_vertices())
            throw Error(ErrorKind::ParseError,
                        "assignment length != vertex count");
        Partition p{{}, specs};
        for (char ch : line) {
            if (ch != '0' && ch != '1')
                throw Error(ErrorKind::ParseError, "assignment chars must be 0/1");
            p.assignment.push_back(ch - '0');
        }
        auto v = verify(g, p);
        json rec{{"valid", !v.has_value()}};
        if (v) {
            rec["violation"] = json{
                {"type", v->type == Violation::Type::DegreeExceeded
                             ? "degree_exceeded"
                             : "cycle_closed"},
                {"part", v->part},
                {"vertex", v->vertex}};
            exit_code = 2;
        }
        out.push_back(rec);
    }
    write_json_to(g_json, out);
    return exit_code;
}

int cmd_enumerate() {
    write_graphs(g_out, g_format, enumerate_exhaustive(g_n));
    return 0;
}

int cmd_generate() {
    CorpusSpec spec;
    spec.mode = CorpusSpec::Mode::Gadget;
    spec.seed = g_seed;
    spec.count = g_count;
    spec.n_max = g_nmax;
    spec.decoration = g_decoration;
    if (!g_mix.empty()) {
        std::istringstream is(g_mix);
        std::string tok;
        double* slot[5] = {&spec.block_mix.edge, &spec.block_mix.triangle,
                           &spec.block_mix.c6, &spec.block_mix.c7,
                           &spec.block_mix.hex_patch};
        int i = 0;
        while (std::getline(is, tok, ',') && i < 5) *slot[i++] = std::stod(tok);
        if (i != 5)
            throw Error(ErrorKind::ParseError,
                        "--mix wants five comma-separated weights "
                        "(edge,triangle,c6,c7,hex)");
    }
    write_graphs(g_out, g_format, generate_gadget(spec));
    return 0;
}

int cmd_ingest() {
    write_graphs(g_out, g_format, load_graphs(g_input));
    return 0;
}

int cmd_run() {
    auto graphs = load_graphs(g_input);
    std::vector<Task> tasks;
    for (const auto& t : g_tasks) tasks.push_back(Task::parse(t));
    if (tasks.empty())
        tasks = {Task::parse("classify"), Task::parse("audit"),
                 Task::parse("solve:F3,F4"), Task::parse("partition")};
    BatchOptions opt;
    opt.jobs = g_jobs;
    opt.solver_cap = g_cap;
    opt.pendent_mode = parse_pendent_mode(g_pendent);
    opt.reduce.base_case_size = g_base;
    const auto mode = fallback_mode_from_string(g_fallback);
    if (!mode)
        throw Error(ErrorKind::ParseError, "--fallback wants local, full or abort");
    opt.reduce.fallback = *mode;
    const RunReport rep = run_batch(graphs, tasks, opt);
    write_json_to(g_json, to_json(rep));
    return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane-graph partition toolkit"};
    app.require_subcommand(1);

    auto add_input = [](CLI::App* c) {
        c->add_option("input", g_input, "graph file (rotgraph or planar_code), - for stdin")
            ->required();
    };

    auto* detect = app.add_subcommand("detect", "classification sets / config witnesses");
    add_input(detect);
    detect->add_option("--kinds", g_kinds, "witness kinds, e.g. C3,C8")
        ->delimiter(',');
    detect->add_option("--json", g_json, "JSON output path (- = stdout)");

    auto* auditc = app.add_subcommand("audit", "discharging audit");
    add_input(auditc);
    auditc->add_option("--pendent-mode", g_pendent, "per-record | per-face");
    auditc->add_option("--json", g_json, "JSON output path (- = stdout)");

    auto* solvec = app.add_subcommand("solve", "exact partition solver");
    add_input(solvec);
    solvec->add_option("--specs", g_specs, "part specs, e.g. F3,F4");
    solvec->add_option("--cap", g_cap, "free-vertex cap");
    solvec->add_option("--json", g_json, "JSON output path");

    auto* partc = app.add_subcommand("partition", "constructive reducer");
    add_input(partc);
    partc->add_option("--trace", g_trace, "write ReduceTrace JSON here");
    partc->add_option("--base-case", g_base, "exact-solve below this size");
    partc->add_option("--fallback", g_fallback, "local | full | abort");
    partc->add_option("--json", g_json, "JSON output path");

    auto* verifyc = app.add_subcommand("verify", "verify partitions / membership");
    add_input(verifyc);
    verifyc->add_option("--assignment", g_assignment, "0/1 lines, one per graph");
    verifyc->add_option("--specs", g_specs, "part specs, e.g. F3,F4");
    verifyc->add_option("--json", g_json, "JSON output path (- = stdout)");

    auto* enumc = app.add_subcommand("enumerate", "all small class members");
    enumc->add_option("--n", g_n, "max vertex count (<= 7)");
    enumc->add_option("--format", g_format, "rotgraph | planar_code");
    enumc->add_option("-o,--out", g_out, "output path (- = stdout)");

    auto* genc = app.add_subcommand("generate", "seeded gadget corpus");
    genc->add_option("--count", g_count, "number of graphs");
    genc->add_option("--seed", g_seed, "RNG seed")->required();
    genc->add_option("--n-max", g_nmax, "max vertices per graph");
    genc->add_option("--mix", g_mix, "weights edge,triangle,c6,c7,hex");
    genc->add_option("--decoration", g_decoration, "decorated-triangle chance");
    genc->add_option("--format", g_format, "rotgraph | planar_code");
    genc->add_option("-o,--out", g_out, "output path (- = stdout)");

    auto* ingc = app.add_subcommand("ingest", "normalize graph files");
    add_input(ingc);
    ingc->add_option("--format", g_format, "rotgraph | planar_code");
    ingc->add_option("-o,--out", g_out, "output path (- = stdout)");

    auto* runc = app.add_subcommand("run", "batch runner with JSON report");
    add_input(runc);
    runc->add_option("--task", g_tasks,
                     "classify | detect | audit | solve:SPECS | partition "
                     "(repeatable; default: all)");
    runc->add_option("--jobs", g_jobs, "worker threads (FP_JOBS overrides)");
    runc->add_option("--cap", g_cap, "solver free-vertex cap");
    runc->add_option("--pendent-mode", g_pendent, "per-record | per-face");
    runc->add_option("--base-case", g_base, "reducer base case size");
    runc->add_option("--fallback", g_fallback, "local | full | abort");
    runc->add_option("--json", g_json, "JSON report path (- = stdout)");

    CLI11_PARSE(app, argc, argv);

    if (detect->parsed()) return guarded(cmd_detect, "detect");
    if (auditc->parsed()) return guarded(cmd_audit, "audit");
    if (solvec->parsed()) return guarded(cmd_solve, "solve");
    if (partc->parsed()) return guarded(cmd_partition, "partition");
    if (verifyc->parsed()) return guarded(cmd_verify, "verify");
    if (enumc->parsed()) return guarded(cmd_enumerate, "enumerate");
    if (genc->parsed()) return guarded(cmd_generate, "generate");
    if (ingc->parsed()) return guarded(cmd_ingest, "ingest");
    if (runc->parsed()) return guarded(cmd_run, "run");
    return 1;
}
