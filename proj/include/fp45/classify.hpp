#pragma once

// Structural classification of a connected plane graph without 4-/5-cycles.
// The named sets below drive both the charge-redistribution rules and the
// reducible-configuration detectors:
//
//  w2        2-vertices that lie on no 3-face
//  f2 / f3   3-faces incident with a 2-vertex / with a 3-vertex
//  pendent   records (anchor, owner, face): `anchor` is a 3-vertex on 3-face
//            `face`, and `owner` is its unique neighbor off that face; the
//            face is then "pendent to" the owner
//  terrible  3-faces with (at least) two 3-vertices, one of which has a
//            pendent neighbor of degree <= 4
//  bad       vertices v of degree d in {6,7,8} incident with exactly d-5
//            terrible faces plus exactly one other (f2 or f3) 3-face, all of
//            whose neighbors off those faces have degree <= 3
//  f2_star   f2-faces incident with a 5-vertex or a bad vertex

#include <algorithm>
#include <vector>

#include "fp45/errors.hpp"
#include "fp45/planegraph.hpp"

namespace fp45 {

struct PendentRecord {
    Vertex anchor;  // the 3-vertex on the face
    Vertex owner;   // its neighbor off the face
    FaceId face;    // the 3-face
    bool operator==(const PendentRecord&) const = default;
};

struct Classification {
    std::vector<Vertex> w2;
    std::vector<FaceId> f2, f3, terrible, f2_star;
    std::vector<Vertex> bad;
    std::vector<PendentRecord> pendent;  // sorted by (owner, anchor, face)

    // O(1) membership companions to the lists above.
    std::vector<char> is_w2, is_bad;
    std::vector<char> is_f2, is_f3, is_terrible, is_f2_star;
    std::vector<char> on_three_face;          // vertex lies on some 3-face
    std::vector<std::vector<FaceId>> tri_at;  // incident 3-faces per vertex
};

namespace detail {

// The neighbor of 3-vertex `anchor` that is not on 3-face `f`. Unique because
// the face is a triangle on three distinct vertices (simple graph), so two of
// the anchor's three neighbors lie on it.
inline Vertex pendent_owner(const PlaneGraph& g, Vertex anchor, FaceId f) {
    Vertex owner = -1;
    for (Vertex u : g.neighbors(anchor))
        if (!g.on_face(u, f)) {
            if (owner >= 0)
                throw Error(ErrorKind::InternalInconsistency,
                            "3-vertex with two neighbors off a 3-face");
            owner = u;
        }
    if (owner < 0)
        throw Error(ErrorKind::InternalInconsistency,
                    "3-vertex with all neighbors on a 3-face");
    return owner;
}

inline bool terrible_on(const PlaneGraph& g, FaceId f) {
    const auto& vs = g.face_vertices(f);
    int threes = 0;
    for (Vertex v : vs)
        if (g.degree(v) == 3) ++threes;
    if (threes < 2) return false;
    for (Vertex v : vs)
        if (g.degree(v) == 3 && g.degree(pendent_owner(g, v, f)) <= 4) return true;
    return false;
}

}  // namespace detail

// Face-local query; `f` must be a 3-face.
inline bool is_terrible(const PlaneGraph& g, FaceId f) {
    if (g.face_degree(f) != 3)
        throw Error(ErrorKind::NotATriangle,
                    "face " + std::to_string(f) + " has degree " +
                        std::to_string(g.face_degree(f)));
    return detail::terrible_on(g, f);
}

inline Classification classify(const PlaneGraph& g) {
    if (!g.is_connected())
        throw Error(ErrorKind::NotConnected, "classification needs a connected graph");

    const int n = g.num_vertices();
    const int nf = g.num_faces();
    Classification c;
    c.is_w2.assign(n, 0);
    c.is_bad.assign(n, 0);
    c.is_f2.assign(nf, 0);
    c.is_f3.assign(nf, 0);
    c.is_terrible.assign(nf, 0);
    c.is_f2_star.assign(nf, 0);
    c.on_three_face.assign(n, 0);
    c.tri_at.resize(n);

    for (FaceId f = 0; f < nf; ++f) {
        if (g.face_degree(f) != 3) continue;
        bool has2 = false, has3 = false;
        for (Vertex v : g.face_vertices(f)) {
            c.on_three_face[v] = 1;
            c.tri_at[v].push_back(f);
            if (g.degree(v) == 2) has2 = true;
            if (g.degree(v) == 3) has3 = true;
        }
        if (has2) {
            c.is_f2[f] = 1;
            c.f2.push_back(f);
        }
        if (has3) {
            c.is_f3[f] = 1;
            c.f3.push_back(f);
        }
        if (detail::terrible_on(g, f)) {
            c.is_terrible[f] = 1;
            c.terrible.push_back(f);
        }
        for (Vertex v : g.face_vertices(f))
            if (g.degree(v) == 3)
                c.pendent.push_back({v, detail::pendent_owner(g, v, f), f});
    }
    std::sort(c.pendent.begin(), c.pendent.end(),
              [](const PendentRecord& a, const PendentRecord& b) {
                  if (a.owner != b.owner) return a.owner < b.owner;
                  if (a.anchor != b.anchor) return a.anchor < b.anchor;
                  return a.face < b.face;
              });

    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 2 && !c.on_three_face[v]) {
            c.is_w2[v] = 1;
            c.w2.push_back(v);
        }

    for (Vertex v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d < 6 || d > 8) continue;
        std::vector<FaceId> terr, other;
        for (FaceId f : c.tri_at[v]) {
            if (c.is_terrible[f])
                terr.push_back(f);
            else if (c.is_f2[f] || c.is_f3[f])
                other.push_back(f);
        }
        if (static_cast<int>(terr.size()) != d - 5 || other.size() != 1) continue;
        bool off_ok = true;
        for (Vertex u : g.neighbors(v)) {
            bool on_listed = g.on_face(u, other[0]);
            for (FaceId f : terr) on_listed = on_listed || g.on_face(u, f);
            if (!on_listed && g.degree(u) > 3) {
                off_ok = false;
                break;
            }
        }
        if (off_ok) {
            c.is_bad[v] = 1;
            c.bad.push_back(v);
        }
    }

    for (FaceId f : c.f2) {
        for (Vertex v : g.face_vertices(f))
            if (g.degree(v) == 5 || c.is_bad[v]) {
                c.is_f2_star[f] = 1;
                c.f2_star.push_back(f);
                break;
            }
    }

    return c;
}

// Vertex-local query, consistent with classify().bad.
inline bool is_bad(const PlaneGraph& g, Vertex v) {
    Classification c = classify(g);
    return c.is_bad[v];
}

}  // namespace fp45
