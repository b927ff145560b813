#pragma once

// Charge bookkeeping. Initial charges are 2*deg(v)-6 on vertices and
// deg(f)-6 on faces (total exactly -12 on a connected plane graph). Rules
// R1..R7 move charge around; every movement is recorded as a tagged transfer
// so audits can re-check conservation and per-element finals exactly.
//
// All amounts are half-integers, stored as integer counts of 1/2 units; only
// R3b moves a genuine half.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fp45/classify.hpp"
#include "fp45/configs.hpp"
#include "fp45/errors.hpp"
#include "fp45/planegraph.hpp"

namespace fp45 {

struct Element {
    enum class Kind { Vertex, Face };
    Kind kind;
    int id;

    bool operator==(const Element&) const = default;
    auto operator<=>(const Element&) const = default;
    std::string name() const {
        return (kind == Kind::Vertex ? "v" : "f") + std::to_string(id);
    }
};

inline Element vertex_element(Vertex v) { return {Element::Kind::Vertex, v}; }
inline Element face_element(FaceId f) { return {Element::Kind::Face, f}; }

struct Transfer {
    Element from, to;
    int half_amount;  // in 1/2 units: 1 means 1/2, 2 means 1, 6 means 3
    const char* rule;  // "R1".."R7", "R3a".."R3c", "R4a".."R4e"
};

struct ChargeLedger {
    std::vector<int> vertex_initial, face_initial;  // 1/2 units
    std::vector<Transfer> transfers;
    std::vector<int> vertex_final, face_final;  // 1/2 units

    int final_of(Element e) const {
        return e.kind == Element::Kind::Vertex ? vertex_final[e.id]
                                               : face_final[e.id];
    }
    long long total_initial_halves() const {
        long long s = 0;
        for (int x : vertex_initial) s += x;
        for (int x : face_initial) s += x;
        return s;
    }
    long long total_final_halves() const {
        long long s = 0;
        for (int x : vertex_final) s += x;
        for (int x : face_final) s += x;
        return s;
    }
};

inline ChargeLedger initial_charges(const PlaneGraph& g) {
    if (!g.is_connected())
        throw Error(ErrorKind::NotConnected, "charges are defined per connected graph");
    ChargeLedger led;
    led.vertex_initial.resize(g.num_vertices());
    led.face_initial.resize(g.num_faces());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        led.vertex_initial[v] = 4 * g.degree(v) - 12;  // 2*(2deg-6)
    for (FaceId f = 0; f < g.num_faces(); ++f)
        led.face_initial[f] = 2 * (g.face_degree(f) - 6);
    led.vertex_final = led.vertex_initial;
    led.face_final = led.face_initial;
    return led;
}

enum class PendentMode {
    PerRecord,  // R3 fires once per (anchor, owner, face) triple -- default
    PerFace,    // R3 fires once per distinct (owner, face) pair
};

inline ChargeLedger apply_rules(const PlaneGraph& g, const Classification& c,
                                PendentMode mode = PendentMode::PerRecord) {
    ChargeLedger led = initial_charges(g);
    auto move = [&](Element from, Element to, int halves, const char* rule) {
        led.transfers.push_back({from, to, halves, rule});
        (from.kind == Element::Kind::Vertex ? led.vertex_final[from.id]
                                            : led.face_final[from.id]) -= halves;
        (to.kind == Element::Kind::Vertex ? led.vertex_final[to.id]
                                          : led.face_final[to.id]) += halves;
    };

    // R1: 4- and 5-vertices feed their 3-faces.
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 4 || g.degree(v) == 5)
            for (FaceId f : c.tri_at[v])
                move(vertex_element(v), face_element(f), 2, "R1");

    // R2: 5+-vertices feed W2 neighbors.
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) >= 5)
            for (Vertex u : g.sorted_neighbors(v))
                if (c.is_w2[u]) move(vertex_element(v), vertex_element(u), 2, "R2");

    // R3: owners feed their pendent faces. Records are sorted by
    // (owner, anchor, face); per-face mode collapses same (owner, face).
    {
        std::set<std::pair<Vertex, FaceId>> fired;
        for (const PendentRecord& rec : c.pendent) {
            if (g.degree(rec.owner) < 5) continue;
            if (mode == PendentMode::PerFace &&
                !fired.insert({rec.owner, rec.face}).second)
                continue;
            if (g.degree(rec.owner) >= 6) {
                move(vertex_element(rec.owner), face_element(rec.face), 2, "R3c");
            } else {
                // A 3-face is (3,5-,5-) iff all its vertices are 5--vertices;
                // otherwise it has a 6+-vertex. Exactly one of R3a/R3b fires.
                const auto& vs = g.face_vertices(rec.face);
                bool all5 = std::all_of(vs.begin(), vs.end(),
                                        [&](Vertex u) { return g.degree(u) <= 5; });
                if (all5)
                    move(vertex_element(rec.owner), face_element(rec.face), 2, "R3a");
                else
                    move(vertex_element(rec.owner), face_element(rec.face), 1, "R3b");
            }
        }
    }

    // R4: 6..10-vertices feed incident 3-faces by face type.
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const int d = g.degree(v);
        if (d < 6 || d > 10) continue;
        for (FaceId f : c.tri_at[v]) {
            if (!c.is_f2[f] && !c.is_f3[f])
                move(vertex_element(v), face_element(f), 2, "R4a");
            else if (c.is_terrible[f])
                move(vertex_element(v), face_element(f), 6, "R4c");
            else if (c.is_f2_star[f])
                move(vertex_element(v), face_element(f), c.is_bad[v] ? 4 : 6,
                     c.is_bad[v] ? "R4d" : "R4e");
            else
                move(vertex_element(v), face_element(f), 4, "R4b");
        }
    }

    // R5: 11+-vertices feed incident 3-faces.
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) >= 11)
            for (FaceId f : c.tri_at[v])
                move(vertex_element(v), face_element(f), 6, "R5");

    // R6: non-terrible (F2 u F3)-faces pay their 2-vertices and bad vertices.
    for (FaceId f = 0; f < g.num_faces(); ++f) {
        if (!(c.is_f2[f] || c.is_f3[f]) || c.is_terrible[f]) continue;
        for (Vertex u : g.face_vertices(f))
            if (g.degree(u) == 2 || c.is_bad[u])
                move(face_element(f), vertex_element(u), 2, "R6");
    }

    // R7: 7+-faces pay 2-vertices that lie on 3-faces, once per boundary
    // position (cut vertices may contribute several positions).
    for (FaceId f = 0; f < g.num_faces(); ++f) {
        if (g.face_degree(f) < 7) continue;
        for (Vertex u : g.face_walk(f))
            if (g.degree(u) == 2 && c.on_three_face[u])
                move(face_element(f), vertex_element(u), 2, "R7");
    }

    return led;
}

struct AuditReport {
    enum class Verdict { Pass, ProofViolation, InternalError };

    ClassReport membership;
    ChargeLedger ledger;
    bool conservation = false;     // re-checked by summation, not assumed
    bool total_is_minus12 = false; // initial total == -12
    std::vector<Element> negative; // elements with final charge < 0
    std::optional<ConfigWitness> config_found;
    Verdict verdict = Verdict::InternalError;
};

inline const char* to_string(AuditReport::Verdict v) {
    switch (v) {
        case AuditReport::Verdict::Pass: return "PASS";
        case AuditReport::Verdict::ProofViolation: return "PROOF_VIOLATION";
        case AuditReport::Verdict::InternalError: return "INTERNAL_ERROR";
    }
    return "?";
}

// Exercises the counting argument on one class member: the total charge is
// fixed at -12, so something ends negative, and the rules are tuned so that
// only the configurations can explain it. A member with no configuration at
// all would break the argument (verdict PROOF_VIOLATION).
inline AuditReport audit(const PlaneGraph& g,
                         PendentMode mode = PendentMode::PerRecord) {
    if (!g.is_connected())
        throw Error(ErrorKind::NotConnected, "audit needs a connected graph");
    AuditReport rep;
    rep.membership = class_membership(g);
    if (!rep.membership.in_class)
        throw Error(ErrorKind::NotInClass, "audit is defined on the 4-/5-cycle-free class");

    Classification c = classify(g);
    rep.ledger = apply_rules(g, c, mode);
    rep.conservation =
        rep.ledger.total_final_halves() == rep.ledger.total_initial_halves();
    rep.total_is_minus12 = rep.ledger.total_initial_halves() == -24;

    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (rep.ledger.vertex_final[v] < 0) rep.negative.push_back(vertex_element(v));
    for (FaceId f = 0; f < g.num_faces(); ++f)
        if (rep.ledger.face_final[f] < 0) rep.negative.push_back(face_element(f));

    rep.config_found = find_any(g, c);

    if (!rep.conservation || !rep.total_is_minus12)
        rep.verdict = AuditReport::Verdict::InternalError;
    else if (!rep.negative.empty() && !rep.config_found)
        rep.verdict = AuditReport::Verdict::ProofViolation;
    else
        rep.verdict = AuditReport::Verdict::Pass;
    return rep;
}

}  // namespace fp45
