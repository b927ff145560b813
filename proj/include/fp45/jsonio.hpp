#pragma once

// JSON views of the library types (nlohmann::json). Charge amounts are
// emitted in whole charge units as doubles (the ledger's internal half-unit
// integers divided by 2). Key order is alphabetical (nlohmann's default
// object ordering), so serialized output is deterministic.

#include <json.hpp>

#include "fp45/classify.hpp"
#include "fp45/configs.hpp"
#include "fp45/discharging.hpp"
#include "fp45/partition.hpp"
#include "fp45/planegraph.hpp"
#include "fp45/reducer.hpp"

namespace fp45 {

using nlohmann::json;

inline json to_json(const ClassReport& r) {
    return json{{"planar_embedding", r.planar_embedding},
                {"connected", r.connected},
                {"has_4_cycle", r.has_4_cycle},
                {"has_5_cycle", r.has_5_cycle},
                {"in_class", r.in_class}};
}

inline json to_json(const Classification& c) {
    json pend = json::array();
    for (const auto& p : c.pendent)
        pend.push_back(
            json{{"anchor", p.anchor}, {"owner", p.owner}, {"face", p.face}});
    return json{{"w2", c.w2},        {"f2", c.f2},
                {"f3", c.f3},        {"terrible", c.terrible},
                {"f2_star", c.f2_star}, {"bad", c.bad},
                {"pendent", pend}};
}

inline json to_json(const ConfigWitness& w) {
    json roles = json::array();
    for (const auto& b : w.vertices)
        roles.push_back(json{{"role", b.role}, {"vertex", b.vertex}});
    json j{{"kind", to_string(w.kind)}, {"roles", roles}, {"faces", w.faces}};
    if (w.delete_vertex)
        j["delete_vertex"] = *w.delete_vertex;
    else
        j["delete_vertex"] = nullptr;
    return j;
}

inline json to_json(const ChargeLedger& l) {
    auto halves = [](const std::vector<int>& v) {
        std::vector<double> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / 2.0;
        return out;
    };
    json transfers = json::array();
    for (const auto& t : l.transfers)
        transfers.push_back(json{{"from", t.from.name()},
                                 {"to", t.to.name()},
                                 {"amount", t.half_amount / 2.0},
                                 {"rule", t.rule}});
    return json{
        {"initial",
         {{"vertices", halves(l.vertex_initial)}, {"faces", halves(l.face_initial)}}},
        {"transfers", transfers},
        {"final",
         {{"vertices", halves(l.vertex_final)}, {"faces", halves(l.face_final)}}},
        {"totals",
         {{"initial", l.total_initial_halves() / 2.0},
          {"final", l.total_final_halves() / 2.0}}}};
}

inline json to_json(const AuditReport& r) {
    json neg = json::array();
    for (const auto& e : r.negative) neg.push_back(e.name());
    json j{{"verdict", to_string(r.verdict)},
           {"membership", to_json(r.membership)},
           {"conservation", r.conservation},
           {"total_is_minus12", r.total_is_minus12},
           {"negative", neg},
           {"ledger", to_json(r.ledger)}};
    if (r.config_found)
        j["config_found"] = to_string(r.config_found->kind);
    else
        j["config_found"] = nullptr;
    return j;
}

inline std::string assignment_line(const Partition& p) {
    std::string line;
    line.reserve(p.assignment.size());
    for (auto a : p.assignment)
        line += (a < 0) ? '-' : static_cast<char>('0' + a);
    return line;
}

inline json to_json(const Partition& p) {
    std::vector<Vertex> part0, part1;
    for (Vertex v = 0; v < static_cast<Vertex>(p.assignment.size()); ++v) {
        if (p.assignment[v] == 0) part0.push_back(v);
        if (p.assignment[v] == 1) part1.push_back(v);
    }
    return json{{"part0", part0},
                {"part1", part1},
                {"specs", {p.specs[0].name(), p.specs[1].name()}},
                {"line", assignment_line(p)}};
}

inline json to_json(const ReduceTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps)
        steps.push_back(json{{"config", to_string(s.kind)},
                             {"deleted", s.deleted},
                             {"method", s.method}});
    return json{{"base_case_size", t.base_case_size},
                {"fallback_count", t.fallback_count},
                {"steps", steps}};
}

}  // namespace fp45
