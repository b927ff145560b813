#pragma once

// Detectors for the thirteen unavoidable configurations. Each witness carries
// role-tagged vertices (the names the extension templates bind against), the
// involved faces, and the vertex whose deletion the extension step reverses.
//
//  C1   7+-face incident with deg(f)-5 2-vertices that lie on 3-faces
//  C2   vertex of degree <= 1
//  C3   2-vertex with a 4--neighbor
//  C4   (2,5,6-)-face
//  C5   (3,5-,5-)-face with a pendent 4--neighbor
//  C6   5-vertex with only 3--neighbors, one of them in W2
//  C7   5-vertex with five pendent 3-faces, four of them (3,5-,5-)
//  C8   bad vertex with only 6--neighbors
//  C9   (F2 u F3)-face with two bad vertices
//  C10  6-vertex on three 3-faces, one of them terrible
//  C11  d-vertex (6<=d<=10) on d-4 terrible faces
//  C12  d-vertex (6<=d<=10) on d-5 terrible faces, only 3--neighbors
//  C13  non-bad d-vertex (7<=d<=10) on an F2*-face plus d-6 other 3-faces,
//       each terrible or F2*
//
// C1 is special: it cannot occur in a member of the class at all (the
// shortcut walk it induces would close a 4- or 5-cycle), so it carries no
// deletion vertex and find_any treats it as evidence of internal breakage
// when the graph is a verified class member.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fp45/classify.hpp"
#include "fp45/errors.hpp"
#include "fp45/planegraph.hpp"

namespace fp45 {

enum class ConfigKind {
    C1, C2, C3, C4, C5, C6, C7, C8, C9, C10, C11, C12, C13,
};

inline const char* to_string(ConfigKind k) {
    static const char* names[] = {"C1", "C2", "C3", "C4",  "C5",  "C6", "C7",
                                  "C8", "C9", "C10", "C11", "C12", "C13"};
    return names[static_cast<int>(k)];
}

inline std::optional<ConfigKind> config_kind_from_string(std::string_view s) {
    for (int i = 0; i < 13; ++i)
        if (s == to_string(static_cast<ConfigKind>(i)))
            return static_cast<ConfigKind>(i);
    return std::nullopt;
}

struct RoleBinding {
    std::string role;
    Vertex vertex;
};

struct ConfigWitness {
    ConfigKind kind{};
    std::vector<RoleBinding> vertices;
    std::vector<FaceId> faces;
    std::optional<Vertex> delete_vertex;

    bool has_role(std::string_view r) const {
        for (const auto& b : vertices)
            if (b.role == r) return true;
        return false;
    }

    Vertex role(std::string_view r) const {
        for (const auto& b : vertices)
            if (b.role == r) return b.vertex;
        throw Error(ErrorKind::RoleBindingFailure,
                    std::string(to_string(kind)) + " witness has no role '" +
                        std::string(r) + "'");
    }

    // Roles "<prefix>1", "<prefix>2", ... in index order, stopping at the
    // first missing index.
    std::vector<Vertex> indexed_roles(std::string_view prefix) const {
        std::vector<Vertex> out;
        for (int i = 1;; ++i) {
            std::string r = std::string(prefix) + std::to_string(i);
            if (!has_role(r)) break;
            out.push_back(role(r));
        }
        return out;
    }
};

namespace detail {

// Role assignment on a terrible face: x is the (lowest-id) 3-vertex whose
// pendent neighbor is a 4--vertex, y the other 3-vertex; xo/yo are the
// pendent neighbors.
struct TerribleRoles {
    Vertex x, y, xo, yo;
};

inline TerribleRoles bind_terrible(const PlaneGraph& g, FaceId f) {
    std::vector<Vertex> threes;
    for (Vertex u : g.face_vertices(f))
        if (g.degree(u) == 3) threes.push_back(u);
    Vertex x = -1;
    for (Vertex u : threes)
        if (g.degree(pendent_owner(g, u, f)) <= 4) {
            x = u;
            break;
        }
    Vertex y = -1;
    for (Vertex u : threes)
        if (u != x) {
            y = u;
            break;
        }
    if (x < 0 || y < 0)
        throw Error(ErrorKind::RoleBindingFailure,
                    "face " + std::to_string(f) + " is not terrible");
    return {x, y, pendent_owner(g, x, f), pendent_owner(g, y, f)};
}

inline void push_terrible_roles(ConfigWitness& w, const TerribleRoles& r, int i) {
    const std::string n = std::to_string(i);
    w.vertices.push_back({"x" + n, r.x});
    w.vertices.push_back({"y" + n, r.y});
    w.vertices.push_back({"x'" + n, r.xo});
    w.vertices.push_back({"y'" + n, r.yo});
}

// The 3-faces pendent to owner v, keyed by their anchor (v's neighbor of
// degree 3 whose off-face neighbor is v). Returned sorted by anchor.
inline std::vector<std::pair<Vertex, FaceId>> pendent_faces_of(
    const Classification& c, Vertex v) {
    std::vector<std::pair<Vertex, FaceId>> out;
    for (const auto& rec : c.pendent)
        if (rec.owner == v) out.emplace_back(rec.anchor, rec.face);
    return out;  // c.pendent is sorted by (owner, anchor, face)
}

}  // namespace detail

inline std::vector<ConfigWitness> detect(const PlaneGraph& g, const Classification& c,
                                         ConfigKind kind,
                                         std::size_t max_witnesses = 10000) {
    std::vector<ConfigWitness> out;
    auto full = [&] { return out.size() >= max_witnesses; };

    switch (kind) {
        case ConfigKind::C1: {
            for (FaceId f = 0; f < g.num_faces() && !full(); ++f) {
                if (g.face_degree(f) < 7) continue;
                std::vector<Vertex> hits;
                for (Vertex u : g.face_vertices(f))
                    if (g.degree(u) == 2 && c.on_three_face[u]) hits.push_back(u);
                if (static_cast<int>(hits.size()) < g.face_degree(f) - 5) continue;
                ConfigWitness w{ConfigKind::C1, {}, {f}, std::nullopt};
                for (std::size_t i = 0; i < hits.size(); ++i)
                    w.vertices.push_back({"u" + std::to_string(i + 1), hits[i]});
                out.push_back(std::move(w));
            }
            break;
        }
        case ConfigKind::C2: {
            for (Vertex v = 0; v < g.num_vertices() && !full(); ++v)
                if (g.degree(v) <= 1)
                    out.push_back({ConfigKind::C2, {{"v", v}}, {}, v});
            break;
        }
        case ConfigKind::C3: {
            for (Vertex v = 0; v < g.num_vertices() && !full(); ++v) {
                if (g.degree(v) != 2) continue;
                Vertex u = -1;
                for (Vertex t : g.sorted_neighbors(v))
                    if (g.degree(t) <= 4) {
                        u = t;
                        break;
                    }
                if (u >= 0)
                    out.push_back({ConfigKind::C3, {{"v", v}, {"u", u}}, {}, v});
            }
            break;
        }
        case ConfigKind::C4: {
            for (FaceId f = 0; f < g.num_faces() && !full(); ++f) {
                if (g.face_degree(f) != 3) continue;
                const auto& vs = g.face_vertices(f);
                bool done = false;
                for (Vertex x : vs) {
                    if (done || g.degree(x) != 2) continue;
                    for (Vertex y : vs) {
                        if (done || y == x || g.degree(y) != 5) continue;
                        for (Vertex z : vs) {
                            if (z == x || z == y) {
                                if (done) break;
                                continue;
                            }
                            if (g.degree(z) <= 6) {
                                out.push_back({ConfigKind::C4,
                                               {{"x", x}, {"y", y}, {"z", z}},
                                               {f},
                                               x});
                                done = true;
                            }
                            break;
                        }
                    }
                }
            }
            break;
        }
        case ConfigKind::C5: {
            for (FaceId f = 0; f < g.num_faces() && !full(); ++f) {
                if (g.face_degree(f) != 3) continue;
                const auto& vs = g.face_vertices(f);
                if (std::any_of(vs.begin(), vs.end(),
                                [&](Vertex u) { return g.degree(u) > 5; }))
                    continue;
                Vertex x = -1;
                for (Vertex u : vs)
                    if (g.degree(u) == 3 && g.degree(detail::pendent_owner(g, u, f)) <= 4) {
                        x = u;
                        break;
                    }
                if (x < 0) continue;
                ConfigWitness w{ConfigKind::C5, {{"x", x}}, {f}, x};
                w.vertices.push_back({"x'", detail::pendent_owner(g, x, f)});
                const char* other[] = {"y", "z"};
                int i = 0;
                for (Vertex u : vs)
                    if (u != x) w.vertices.push_back({other[i++], u});
                out.push_back(std::move(w));
            }
            break;
        }
        case ConfigKind::C6: {
            for (Vertex v = 0; v < g.num_vertices() && !full(); ++v) {
                if (g.degree(v) != 5) continue;
                const auto& nbrs = g.sorted_neighbors(v);
                if (std::any_of(nbrs.begin(), nbrs.end(),
                                [&](Vertex u) { return g.degree(u) > 3; }))
                    continue;
                Vertex x1 = -1;
                for (Vertex u : nbrs)
                    if (c.is_w2[u]) {
                        x1 = u;
                        break;
                    }
                if (x1 < 0) continue;
                Vertex y1 = g.neighbors(x1)[0] == v ? g.neighbors(x1)[1]
                                                    : g.neighbors(x1)[0];
                out.push_back(
                    {ConfigKind::C6, {{"v", v}, {"x1", x1}, {"y1", y1}}, {}, x1});
            }
            break;
        }
        case ConfigKind::C7: {
            for (Vertex v = 0; v < g.num_vertices() && !full(); ++v) {
                if (g.degree(v) != 5) continue;
                auto pend = detail::pendent_faces_of(c, v);
                std::vector<FaceId> distinct;
                for (auto& [a, f] : pend) distinct.push_back(f);
                std::sort(distinct.begin(), distinct.end());
                distinct.erase(std::unique(distinct.begin(), distinct.end()),
                               distinct.end());
                if (distinct.size() != 5 || pend.size() != 5) continue;
                int good = 0;
                for (auto& [a, f] : pend) {
                    const auto& vs = g.face_vertices(f);
                    if (std::all_of(vs.begin(), vs.end(),
                                    [&](Vertex u) { return g.degree(u) <= 5; }))
                        ++good;
                }
                if (good < 4) continue;
                ConfigWitness w{ConfigKind::C7, {{"v", v}}, {}, v};
                int i = 1;
                for (auto& [anchor, f] : pend) {
                    const std::string n = std::to_string(i++);
                    w.vertices.push_back({"x" + n, anchor});
                    const char* yz[] = {"y", "z"};
                    int j = 0;
                    for (Vertex u : g.face_vertices(f))
                        if (u != anchor)
                            w.vertices.push_back({yz[j++] + n, u});
                    w.faces.push_back(f);
                }
                out.push_back(std::move(w));
            }
            break;
        }
        case ConfigKind::C8: {
            for (Vertex v : c.bad) {
                if (full()) break;
                const auto& nbrs = g.sorted_neighbors(v);
                if (std::any_of(nbrs.begin(), nbrs.end(),
                                [&](Vertex u) { return g.degree(u) > 6; }))
                    continue;
                FaceId tf = -1, nf = -1;
                for (FaceId f : c.tri_at[v]) {
                    if (c.is_terrible[f]) {
                        if (tf < 0) tf = f;
                    } else if (c.is_f2[f] || c.is_f3[f]) {
                        nf = f;
                    }
                }
                ConfigWitness w{ConfigKind::C8, {{"v", v}}, {tf, nf}, std::nullopt};
                auto r = detail::bind_terrible(g, tf);
                detail::push_terrible_roles(w, r, 1);
                std::vector<Vertex> rest;
                for (Vertex t : g.face_vertices(nf))
                    if (t != v) rest.push_back(t);
                Vertex u = (g.degree(rest[0]) <= 3) ? rest[0] : rest[1];
                Vertex ww = (u == rest[0]) ? rest[1] : rest[0];
                w.vertices.push_back({"u", u});
                w.vertices.push_back({"w", ww});
                w.delete_vertex = r.x;
                out.push_back(std::move(w));
            }
            break;
        }
        case ConfigKind::C9: {
            for (FaceId f = 0; f < g.num_faces() && !full(); ++f) {
                if (g.face_degree(f) != 3 || !(c.is_f2[f] || c.is_f3[f])) continue;
                std::vector<Vertex> bads, rest;
                for (Vertex u : g.face_vertices(f))
                    (c.is_bad[u] ? bads : rest).push_back(u);
                if (bads.size() < 2) continue;
                ConfigWitness w{ConfigKind::C9,
                                {{"v", bads[0]}, {"w", bads[1]}},
                                {f},
                                std::nullopt};
                if (!rest.empty()) w.vertices.push_back({"u", rest[0]});
                FaceId tf = -1;
                for (FaceId t : c.tri_at[bads[0]])
                    if (c.is_terrible[t]) {
                        tf = t;
                        break;
                    }
                auto r = detail::bind_terrible(g, tf);
                detail::push_terrible_roles(w, r, 1);
                w.faces.push_back(tf);
                w.delete_vertex = r.x;
                out.push_back(std::move(w));
            }
            break;
        }
        case ConfigKind::C10: {
            for (Vertex v = 0; v < g.num_vertices() && !full(); ++v) {
                if (g.degree(v) != 6 || c.tri_at[v].size() < 3) continue;
                FaceId tf = -1;
                for (FaceId f : c.tri_at[v])
                    if (c.is_terrible[f]) {
                        tf = f;
                        break;
                    }
                if (tf < 0) continue;
                ConfigWitness w{ConfigKind::C10, {{"v", v}}, {tf}, std::nullopt};
                auto r = detail::bind_terrible(g, tf);
                detail::push_terrible_roles(w, r, 1);
                for (FaceId f : c.tri_at[v])
                    if (f != tf) w.faces.push_back(f);
                w.delete_vertex = r.x;
                out.push_back(std::move(w));
            }
            break;
        }
        case ConfigKind::C11:
        case ConfigKind::C12: {
            const bool eleven = (kind == ConfigKind::C11);
            for (Vertex v = 0; v < g.num_vertices() && !full(); ++v) {
                const int d = g.degree(v);
                if (d < 6 || d > 10) continue;
                if (!eleven) {
                    const auto& nbrs = g.sorted_neighbors(v);
                    if (std::any_of(nbrs.begin(), nbrs.end(),
                                    [&](Vertex u) { return g.degree(u) > 3; }))
                        continue;
                }
                std::vector<FaceId> terr;
                for (FaceId f : c.tri_at[v])
                    if (c.is_terrible[f]) terr.push_back(f);
                const int need = eleven ? d - 4 : d - 5;
                if (static_cast<int>(terr.size()) < need) continue;
                ConfigWitness w{kind, {{"v", v}}, {}, std::nullopt};
                for (int i = 0; i < need; ++i) {
                    auto r = detail::bind_terrible(g, terr[i]);
                    detail::push_terrible_roles(w, r, i + 1);
                    w.faces.push_back(terr[i]);
                    if (i == 0) w.delete_vertex = r.x;
                }
                out.push_back(std::move(w));
            }
            break;
        }
        case ConfigKind::C13: {
            for (Vertex v = 0; v < g.num_vertices() && !full(); ++v) {
                const int d = g.degree(v);
                if (d < 7 || d > 10 || c.is_bad[v]) continue;
                FaceId f1 = -1;
                std::vector<FaceId> others;
                for (FaceId f : c.tri_at[v]) {
                    if (c.is_f2_star[f] && f1 < 0)
                        f1 = f;
                    else if (c.is_f2_star[f] || c.is_terrible[f])
                        others.push_back(f);
                }
                if (f1 < 0 || static_cast<int>(others.size()) < d - 6) continue;
                ConfigWitness w{ConfigKind::C13, {{"v", v}}, {}, std::nullopt};
                std::vector<FaceId> bound{f1};
                bound.insert(bound.end(), others.begin(), others.begin() + (d - 6));
                for (int j = 0; j < static_cast<int>(bound.size()); ++j) {
                    const FaceId f = bound[j];
                    const std::string n = std::to_string(j + 1);
                    if (c.is_f2_star[f]) {
                        Vertex xj = -1, yj = -1;
                        for (Vertex u : g.face_vertices(f))
                            if (g.degree(u) == 2 && xj < 0) xj = u;
                        for (Vertex u : g.face_vertices(f))
                            if (u != xj && (g.degree(u) == 5 || c.is_bad[u]) && yj < 0)
                                yj = u;
                        w.vertices.push_back({"x" + n, xj});
                        w.vertices.push_back({"y" + n, yj});
                        if (j == 0) w.delete_vertex = xj;
                    } else {
                        auto r = detail::bind_terrible(g, f);
                        detail::push_terrible_roles(w, r, j + 1);
                    }
                    w.faces.push_back(f);
                }
                out.push_back(std::move(w));
            }
            break;
        }
    }
    return out;
}

// First witness by kind order C2, C3, C1, C4, ..., C13 (cheapest predicates
// first). A C1 hit on a verified class member is impossible by the theory, so
// it is escalated instead of returned.
inline std::optional<ConfigWitness> find_any(const PlaneGraph& g,
                                             const Classification& c) {
    static constexpr ConfigKind order[] = {
        ConfigKind::C2, ConfigKind::C3, ConfigKind::C1,  ConfigKind::C4,
        ConfigKind::C5, ConfigKind::C6, ConfigKind::C7,  ConfigKind::C8,
        ConfigKind::C9, ConfigKind::C10, ConfigKind::C11, ConfigKind::C12,
        ConfigKind::C13,
    };
    for (ConfigKind k : order) {
        auto ws = detect(g, c, k, 1);
        if (ws.empty()) continue;
        if (k == ConfigKind::C1 && class_membership(g).in_class)
            throw Error(ErrorKind::InternalInconsistency,
                        "C1 witness inside a verified class member");
        return std::move(ws.front());
    }
    return std::nullopt;
}

}  // namespace fp45
