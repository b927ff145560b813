#pragma once

// Constructive partitioner. Recursively: find a reducible configuration,
// delete its designated vertex, partition the smaller graph, then re-insert
// the vertex by trying a finite list of part-move templates, each checked by
// the verifier. If no template lands, fall back to the exact solver (full
// instance when small enough, otherwise a frozen-boundary re-solve around the
// deleted vertex).
//
// Templates only ever touch vertices within the closed third neighborhood of
// the deleted vertex: the scripted moves reach a face partner's pendent
// neighbor, which sits three steps away.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fp45/classify.hpp"
#include "fp45/configs.hpp"
#include "fp45/errors.hpp"
#include "fp45/partition.hpp"
#include "fp45/planegraph.hpp"

namespace fp45 {

// A named batch of part-moves; applying one to a partial partition of
// g - deleted always yields a total assignment on g (every template places
// the deleted vertex). Later moves win when a vertex is listed twice.
struct MoveTemplate {
    std::string name;
    std::vector<std::pair<Vertex, int>> moves;
};

struct ReduceStep {
    ConfigKind kind;
    Vertex deleted;      // id in the graph originally handed to the reducer
    std::string method;  // template name, or "fallback:full" / "fallback:local"
};

struct ReduceTrace {
    std::vector<ReduceStep> steps;  // in re-insertion order (deepest first)
    int base_case_size = 8;
    int fallback_count = 0;
};

enum class FallbackMode { Local, Full, Abort };

inline const char* to_string(FallbackMode m) {
    switch (m) {
        case FallbackMode::Local: return "local";
        case FallbackMode::Full: return "full";
        case FallbackMode::Abort: return "abort";
    }
    return "?";
}

inline std::optional<FallbackMode> fallback_mode_from_string(std::string_view s) {
    if (s == "local") return FallbackMode::Local;
    if (s == "full") return FallbackMode::Full;
    if (s == "abort") return FallbackMode::Abort;
    return std::nullopt;
}

struct ReduceOptions {
    int base_case_size = 8;
    FallbackMode fallback = FallbackMode::Local;
    int solver_cap = 26;      // full fallback re-solve allowed up to this size
    int local_free_cap = 24;  // free-vertex cap of the frozen local re-solve
};

namespace detail {

// Triangle containing both u and v, or -1.
inline FaceId three_face_with(const PlaneGraph& g, Vertex u, Vertex v) {
    for (FaceId f : g.faces_at(u))
        if (g.face_degree(f) == 3 && g.on_face(v, f)) return f;
    return -1;
}

// 3-vertices u next to v that share a triangle with v and whose pendent
// neighbor (w.r.t. that triangle) currently sits in `part`, themselves
// assigned to `part`. This is the helper set the hub templates shuffle.
inline std::vector<Vertex> hub_shuffle_set(const PlaneGraph& g,
                                           const std::vector<std::int8_t>& asg,
                                           Vertex v, int part) {
    std::vector<Vertex> out;
    for (Vertex u : g.sorted_neighbors(v)) {
        if (asg[u] != part || g.degree(u) != 3) continue;
        FaceId f = three_face_with(g, u, v);
        if (f < 0) continue;
        Vertex owner = pendent_owner(g, u, f);
        if (asg[owner] == part) out.push_back(u);
    }
    return out;
}

inline bool saturated_in(const PlaneGraph& g, const std::vector<std::int8_t>& asg,
                         Vertex v, int part, int bound) {
    int same = 0;
    for (Vertex u : g.sorted_neighbors(v))
        if (asg[u] == part) ++same;
    return same >= bound;
}

inline std::vector<MoveTemplate> generic_candidates(
    const PlaneGraph& g, Vertex del, const std::vector<std::int8_t>& asg) {
    std::vector<MoveTemplate> out;
    out.push_back({"place-p0", {{del, 0}}});
    out.push_back({"place-p1", {{del, 1}}});
    for (Vertex u : g.sorted_neighbors(del)) {
        if (asg[u] < 0) continue;
        for (int p = 0; p < 2; ++p)
            out.push_back({"flip-neighbor", {{u, 1 - asg[u]}, {del, p}}});
    }
    for (Vertex u : g.sorted_neighbors(del)) {
        if (asg[u] < 0) continue;
        for (Vertex t : g.sorted_neighbors(u)) {
            if (t == del || asg[t] < 0) continue;
            for (int p = 0; p < 2; ++p)
                out.push_back(
                    {"flip-pair", {{u, 1 - asg[u]}, {t, 1 - asg[t]}, {del, p}}});
        }
    }
    return out;
}

// Scripted moves shared by the terrible-hub configurations (C8-C12): the hub
// v sits on terrible faces whose roles x1,y1,x'1,y'1,... the witness carries,
// and x1 is the deleted vertex.
inline std::vector<MoveTemplate> hub_candidates(const PlaneGraph& g,
                                                const std::vector<std::int8_t>& asg,
                                                const ConfigWitness& w) {
    std::vector<MoveTemplate> out;
    const Vertex v = w.role("v");
    const Vertex x = w.role("x1");
    const auto xs = w.indexed_roles("x");
    const auto ys = w.indexed_roles("y");
    const auto xos = w.indexed_roles("x'");

    const auto X = hub_shuffle_set(g, asg, v, 1);
    auto with_X = [&](std::vector<std::pair<Vertex, int>> head) {
        for (Vertex u : X) head.emplace_back(u, 0);
        head.emplace_back(v, 1);
        return head;
    };

    out.push_back({"terrible-x-swap", with_X({{x, 0}})});
    if (w.kind == ConfigKind::C8) {
        out.push_back({"terrible-x-swap-w", with_X({{x, 0}, {w.role("w"), 0}})});
        out.push_back({"terrible-x-swap-w", with_X({{x, 0}, {w.role("u"), 0}})});
    }
    for (Vertex z : g.sorted_neighbors(v)) {
        if (asg[z] != 1) continue;
        if (std::find(xs.begin(), xs.end(), z) != xs.end()) continue;
        if (std::find(ys.begin(), ys.end(), z) != ys.end()) continue;
        out.push_back({"terrible-x-swap-z", with_X({{x, 0}, {z, 0}})});
    }

    {
        std::vector<std::pair<Vertex, int>> mv{{x, 0}};
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j >= ys.size() || j >= xos.size()) break;
            if (asg[xs[j]] == 1 && asg[ys[j]] == 1 && asg[xos[j]] == 0) {
                mv.emplace_back(xs[j], 0);
                if (saturated_in(g, asg, xos[j], 0, 3)) mv.emplace_back(xos[j], 1);
            }
        }
        out.push_back({"terrible-xzu-swap", with_X(std::move(mv))});
    }

    {
        std::vector<std::pair<Vertex, int>> mv{{v, 0}};
        for (Vertex u : hub_shuffle_set(g, asg, v, 0)) mv.emplace_back(u, 1);
        mv.emplace_back(x, 1);
        out.push_back({"terrible-z-swap", std::move(mv)});
    }
    {
        std::vector<std::pair<Vertex, int>> mv{{v, 0}};
        for (std::size_t j = 1; j < ys.size(); ++j)
            if (asg[ys[j]] == 0) mv.emplace_back(ys[j], 1);
        mv.emplace_back(x, 1);
        out.push_back({"terrible-ys-swap", std::move(mv)});
    }
    for (std::size_t j = 1; j < xs.size(); ++j) {
        out.push_back({"terrible-mate-flip", {{xs[j], 0}, {x, 1}}});
        if (j < ys.size())
            out.push_back({"terrible-mate-flip", {{ys[j], 0}, {x, 1}}});
        if (j < xos.size())
            out.push_back(
                {"terrible-mate-flip-pair", {{xs[j], 0}, {xos[j], 1}, {x, 1}}});
    }
    return out;
}

// Scripted moves for C13: the deleted vertex is the 2-vertex x1 of the
// distinguished small face; face j is terrible exactly when role x'j exists.
inline std::vector<MoveTemplate> c13_candidates(const PlaneGraph& g,
                                                const std::vector<std::int8_t>& asg,
                                                const ConfigWitness& w) {
    std::vector<MoveTemplate> out;
    const Vertex v = w.role("v");
    const Vertex x1 = w.role("x1");
    const Vertex y1 = w.role("y1");
    const int k = static_cast<int>(w.faces.size());

    auto role_of = [&](const char* p, int j) -> std::optional<Vertex> {
        std::string r = p + std::to_string(j);
        if (!w.has_role(r)) return std::nullopt;
        return w.role(r);
    };
    auto terrible_j = [&](int j) { return role_of("x'", j).has_value(); };

    for (int j = 2; j <= k; ++j) {
        const Vertex xj = *role_of("x", j);
        const Vertex yj = *role_of("y", j);
        out.push_back({"fstar-mate-flip", {{xj, 0}, {x1, 1}}});
        out.push_back({"fstar-mate-flip", {{yj, 0}, {x1, 1}}});
        if (terrible_j(j))
            out.push_back(
                {"fstar-mate-flip-pair", {{xj, 0}, {*role_of("x'", j), 1}, {x1, 1}}});
    }

    const Classification cl = classify(g);
    std::vector<std::pair<Vertex, int>> mv{{x1, 0}, {v, 0}};
    std::vector<Vertex> W;
    for (int j = 1; j <= k; ++j) {
        if (terrible_j(j)) continue;
        const Vertex yj = *role_of("y", j);
        if (asg[yj] == 0) W.push_back(yj);
    }
    for (Vertex yj : W)
        if (cl.is_bad[yj])
            for (Vertex u : hub_shuffle_set(g, asg, yj, 1)) mv.emplace_back(u, 0);
    mv.emplace_back(y1, 1);
    for (int j = 2; j <= k; ++j) {
        const Vertex xj = *role_of("x", j);
        if (terrible_j(j))
            mv.emplace_back(xj, 1);
        else if (asg[xj] == 0)
            mv.emplace_back(xj, 1);
    }
    for (Vertex yj : W) mv.emplace_back(yj, 1);
    out.push_back({"fstar-grand-swap", std::move(mv)});
    return out;
}

inline std::vector<MoveTemplate> scripted_candidates(
    const PlaneGraph& g, const std::vector<std::int8_t>& asg,
    const ConfigWitness& w) {
    switch (w.kind) {
        case ConfigKind::C8:
        case ConfigKind::C9:
        case ConfigKind::C10:
        case ConfigKind::C11:
        case ConfigKind::C12:
            return hub_candidates(g, asg, w);
        case ConfigKind::C13:
            return c13_candidates(g, asg, w);
        default:
            return {};  // the generic moves already cover C2-C7
    }
}

}  // namespace detail

struct ExtendResult {
    Partition partition;
    std::string method;
};

// Re-insert `deleted` into a valid partition of g - deleted (given as a
// partial partition over g's ids with `deleted` unassigned). Candidates are
// tried in order -- direct placement, generic neighbor flips, the witness
// kind's scripted templates -- and the first one the verifier accepts wins.
inline ExtendResult extend(const PlaneGraph& g, Vertex deleted,
                           const Partition& sub_partition,
                           const ConfigWitness& witness) {
    const auto& asg = sub_partition.assignment;
    auto attempt =
        [&](const std::vector<MoveTemplate>& cands) -> std::optional<ExtendResult> {
        for (const auto& t : cands) {
            Partition p = sub_partition;
            for (auto [u, part] : t.moves) p.assignment[u] = static_cast<std::int8_t>(part);
            if (p.assignment[deleted] < 0) continue;
            if (!verify(g, p)) return ExtendResult{std::move(p), t.name};
        }
        return std::nullopt;
    };
    if (auto r = attempt(detail::generic_candidates(g, deleted, asg))) return *r;
    if (auto r = attempt(detail::scripted_candidates(g, asg, witness))) return *r;
    throw Error(ErrorKind::NoTemplateApplied,
                std::string("no template re-inserts vertex ") +
                    std::to_string(deleted) + " for a " + to_string(witness.kind) +
                    " witness");
}

// Swap x_j/y_j pairs of a C13 witness to push more x_j into part 0 while the
// partial partition (deleted x1 unassigned) stays valid. Monotone, so it
// terminates; the guard is belt and braces.
inline Partition improve_for_C13(const PlaneGraph& g, Partition partition,
                                 const ConfigWitness& witness) {
    if (witness.kind != ConfigKind::C13) return partition;
    const auto xs = witness.indexed_roles("x");
    const auto ys = witness.indexed_roles("y");
    for (int guard = 0; guard < 32; ++guard) {
        bool changed = false;
        for (std::size_t j = 1; j < xs.size() && j < ys.size(); ++j) {
            if (partition.assignment[xs[j]] != 1 || partition.assignment[ys[j]] != 0)
                continue;
            Partition q = partition;
            q.assignment[xs[j]] = 0;
            q.assignment[ys[j]] = 1;
            if (!verify_partial(g, q)) {
                partition = std::move(q);
                changed = true;
            }
        }
        if (!changed) break;
    }
    return partition;
}

namespace detail {

inline Partition fallback_solve(const PlaneGraph& g, Vertex del,
                                const Partition& sub, const SpecPair& specs,
                                const ReduceOptions& opt, std::string& method,
                                ReduceTrace& trace) {
    if (opt.fallback == FallbackMode::Abort)
        throw Error(ErrorKind::NoTemplateApplied,
                    "extension failed and fallback is disabled");
    ++trace.fallback_count;
    const int n = g.num_vertices();
    if (opt.fallback == FallbackMode::Full || n <= opt.solver_cap) {
        method = "fallback:full";
        auto s = solve(g, specs, {opt.solver_cap});
        if (!s)
            throw Error(ErrorKind::InternalInconsistency,
                        "exact solver found a class member infeasible");
        return Partition{std::move(s->assignment), specs};
    }

    // Frozen-boundary local re-solve: free the closed third neighborhood of
    // the deleted vertex, pin everything else to the recursive partition.
    method = "fallback:local";
    std::vector<int> dist(n, -1);
    std::deque<Vertex> bfs{del};
    dist[del] = 0;
    while (!bfs.empty()) {
        Vertex u = bfs.front();
        bfs.pop_front();
        if (dist[u] == 3) continue;
        for (Vertex t : g.sorted_neighbors(u))
            if (dist[t] < 0) {
                dist[t] = dist[u] + 1;
                bfs.push_back(t);
            }
    }
    std::vector<std::int8_t> fixed(n);
    for (Vertex u = 0; u < n; ++u)
        fixed[u] = (dist[u] >= 0) ? std::int8_t{-1} : sub.assignment[u];
    try {
        auto s = solve(g, specs, {opt.local_free_cap}, &fixed);
        if (s) return Partition{std::move(s->assignment), specs};
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::TooLarge) throw;
    }
    throw Error(ErrorKind::NoTemplateApplied,
                "frozen-boundary re-solve around vertex " + std::to_string(del) +
                    " failed");
}

inline std::vector<std::int8_t> reduce(const PlaneGraph& g,
                                       const std::vector<Vertex>& labels,
                                       const SpecPair& specs,
                                       const ReduceOptions& opt,
                                       ReduceTrace& trace) {
    const int n = g.num_vertices();
    if (n <= opt.base_case_size) {
        auto s = solve(g, specs, {std::max(opt.solver_cap, opt.base_case_size)});
        if (!s)
            throw Error(ErrorKind::InternalInconsistency,
                        "base case infeasible for a class member");
        return std::move(s->assignment);
    }

    const Classification c = classify(g);
    auto w = find_any(g, c);
    if (!w || !w->delete_vertex)
        throw Error(ErrorKind::InternalInconsistency,
                    "no reducible configuration in a class member on " +
                        std::to_string(n) + " vertices");
    const Vertex del = *w->delete_vertex;

    std::vector<Vertex> keep;
    keep.reserve(n - 1);
    for (Vertex v = 0; v < n; ++v)
        if (v != del) keep.push_back(v);
    auto [h, old_of] = g.induced_subgraph(keep);

    std::vector<std::int8_t> sub_asg(n, -1);
    for (const auto& comp : h.components()) {
        auto [hc, old_of_c] = h.induced_subgraph(comp);
        std::vector<Vertex> sub_labels(hc.num_vertices());
        for (int i = 0; i < hc.num_vertices(); ++i)
            sub_labels[i] = labels[old_of[old_of_c[i]]];
        auto asg = reduce(hc, sub_labels, specs, opt, trace);
        for (int i = 0; i < hc.num_vertices(); ++i)
            sub_asg[old_of[old_of_c[i]]] = asg[i];
    }

    Partition sub{std::move(sub_asg), specs};
    if (w->kind == ConfigKind::C13) sub = improve_for_C13(g, sub, *w);

    Partition full{{}, specs};
    std::string method;
    try {
        auto r = extend(g, del, sub, *w);
        full = std::move(r.partition);
        method = std::move(r.method);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoTemplateApplied) throw;
        full = fallback_solve(g, del, sub, specs, opt, method, trace);
    }
    trace.steps.push_back({w->kind, labels[del], std::move(method)});
    return std::move(full.assignment);
}

}  // namespace detail

// Partition a connected class member into (F3, F4) by structural reduction.
// Every returned partition has passed verify; the trace records each
// deletion, the template (or fallback) that re-inserted it, and how often
// the scripted templates were insufficient.
inline std::pair<Partition, ReduceTrace> partition_constructively(
    const PlaneGraph& g, const ReduceOptions& options = {}) {
    if (!g.is_connected())
        throw Error(ErrorKind::NotConnected,
                    "constructive partitioner wants one component at a time");
    if (!class_membership(g).in_class)
        throw Error(ErrorKind::NotInClass,
                    "graph is not a 4-/5-cycle-free plane graph");
    ReduceTrace trace;
    trace.base_case_size = options.base_case_size;
    const SpecPair specs = make_specs("F3", "F4");
    std::vector<Vertex> labels(g.num_vertices());
    std::iota(labels.begin(), labels.end(), 0);
    Partition p{detail::reduce(g, labels, specs, options, trace), specs};
    if (verify(g, p))
        throw Error(ErrorKind::InternalInconsistency,
                    "reducer assembled an invalid partition");
    return {std::move(p), std::move(trace)};
}

}  // namespace fp45
