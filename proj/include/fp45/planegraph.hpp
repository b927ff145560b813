#pragma once

// Immutable plane graph: a simple graph together with a rotation system
// (cyclic neighbor order per vertex). Faces are traced from the rotation via
// darts; the Euler check V - E + F = 2 * #components certifies genus 0.
//
// Conventions used throughout the library:
//  - vertices are 0..n-1; faces are 0..f-1 in trace order
//  - a face is stored as its boundary walk (sequence of dart tails); a bridge
//    edge contributes two positions to the same walk
//  - an isolated vertex owns one "empty" face of degree 0 whose walk is {v},
//    so that face incidence and charge bookkeeping stay total

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fp45/embed.hpp"
#include "fp45/errors.hpp"

namespace fp45 {

using Vertex = int;
using FaceId = int;

class PlaneGraph {
public:
    PlaneGraph() = default;

    // Build from an edge list; the rotation system is computed by a planar
    // embedder. Throws NonPlanar if none exists.
    static PlaneGraph from_edges(int n, std::vector<std::pair<int, int>> edges) {
        check_simple(n, edges);
        auto rotation = embed_planar(n, edges);
        return finalize(std::move(rotation));
    }

    // Build from an explicit rotation system (the edge set is implied).
    static PlaneGraph from_rotation(std::vector<std::vector<int>> rotation) {
        validate_rotation(rotation);
        return finalize(std::move(rotation));
    }

    // Build from both; the rotation must list exactly the neighbors implied
    // by the edge list (in any cyclic order).
    static PlaneGraph from_edges_and_rotation(int n,
                                              std::vector<std::pair<int, int>> edges,
                                              std::vector<std::vector<int>> rotation) {
        check_simple(n, edges);
        if (static_cast<int>(rotation.size()) != n)
            throw Error(ErrorKind::InconsistentRotation,
                        "rotation has " + std::to_string(rotation.size()) +
                            " lists for " + std::to_string(n) + " vertices");
        std::vector<std::vector<int>> from_edges_adj(n);
        for (auto& [u, v] : edges) {
            from_edges_adj[u].push_back(v);
            from_edges_adj[v].push_back(u);
        }
        for (int v = 0; v < n; ++v) {
            auto a = from_edges_adj[v];
            auto b = rotation[v];
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b)
                throw Error(ErrorKind::InconsistentRotation,
                            "rotation at vertex " + std::to_string(v) +
                                " does not match the edge list");
        }
        validate_rotation(rotation);
        return finalize(std::move(rotation));
    }

    int num_vertices() const { return n_; }
    int num_edges() const { return m_; }
    int num_faces() const { return static_cast<int>(face_walk_.size()); }
    int num_components() const { return n_components_; }
    bool is_connected() const { return n_ > 0 && n_components_ == 1; }

    int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }

    // Neighbors in rotation (cyclic) order.
    const std::vector<Vertex>& neighbors(Vertex v) const { return rot_[v]; }

    // Neighbors ascending by id.
    const std::vector<Vertex>& sorted_neighbors(Vertex v) const {
        return sorted_adj_[v];
    }

    bool adjacent(Vertex u, Vertex v) const {
        const auto& s = sorted_adj_[u];
        return std::binary_search(s.begin(), s.end(), v);
    }

    // Edges as (u, v) with u < v, lexicographically sorted.
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    // Boundary walk of a face: dart tails in trace order. Length == number of
    // darts == face degree, except the degree-0 face of an isolated vertex
    // whose walk is {v}.
    const std::vector<Vertex>& face_walk(FaceId f) const { return face_walk_[f]; }
    int face_degree(FaceId f) const { return face_degree_[f]; }

    // Distinct vertices on the face, ascending.
    const std::vector<Vertex>& face_vertices(FaceId f) const { return face_verts_[f]; }

    // Distinct faces incident to v, ascending.
    const std::vector<FaceId>& faces_at(Vertex v) const { return faces_at_[v]; }

    bool on_face(Vertex v, FaceId f) const {
        const auto& s = face_verts_[f];
        return std::binary_search(s.begin(), s.end(), v);
    }

    // Number of times v occurs on the boundary walk of f (cut vertices may
    // occur more than once).
    int incidence_count(Vertex v, FaceId f) const {
        return static_cast<int>(
            std::count(face_walk_[f].begin(), face_walk_[f].end(), v));
    }

    int component_of(Vertex v) const { return comp_[v]; }

    std::vector<std::vector<Vertex>> components() const {
        std::vector<std::vector<Vertex>> out(n_components_);
        for (int v = 0; v < n_; ++v) out[comp_[v]].push_back(v);
        return out;
    }

    // Induced subgraph on `keep` (need not be sorted); the inherited rotation
    // is the original one with absent vertices dropped, which stays genus 0.
    // Returns the subgraph and the map new-id -> old-id (ascending old ids).
    std::pair<PlaneGraph, std::vector<Vertex>> induced_subgraph(
        std::vector<Vertex> keep) const {
        std::sort(keep.begin(), keep.end());
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        std::vector<int> to_new(n_, -1);
        for (int i = 0; i < static_cast<int>(keep.size()); ++i) to_new[keep[i]] = i;
        std::vector<std::vector<int>> rotation(keep.size());
        for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
            for (Vertex u : rot_[keep[i]])
                if (to_new[u] >= 0) rotation[i].push_back(to_new[u]);
        }
        return {from_rotation(std::move(rotation)), std::move(keep)};
    }

private:
    static void check_simple(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 0) throw Error(ErrorKind::ParseError, "negative vertex count");
        std::vector<std::pair<int, int>> norm;
        norm.reserve(edges.size());
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw Error(ErrorKind::ParseError, "edge endpoint out of range");
            if (u == v)
                throw Error(ErrorKind::Loop, "loop at vertex " + std::to_string(u));
            norm.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(norm.begin(), norm.end());
        auto dup = std::adjacent_find(norm.begin(), norm.end());
        if (dup != norm.end())
            throw Error(ErrorKind::MultiEdge,
                        "duplicate edge {" + std::to_string(dup->first) + "," +
                            std::to_string(dup->second) + "}");
    }

    static void validate_rotation(const std::vector<std::vector<int>>& rotation) {
        const int n = static_cast<int>(rotation.size());
        for (int v = 0; v < n; ++v) {
            std::vector<int> seen;
            for (int u : rotation[v]) {
                if (u < 0 || u >= n)
                    throw Error(ErrorKind::InconsistentRotation,
                                "neighbor out of range at vertex " + std::to_string(v));
                if (u == v)
                    throw Error(ErrorKind::Loop, "loop at vertex " + std::to_string(v));
                seen.push_back(u);
            }
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
                throw Error(ErrorKind::MultiEdge,
                            "repeated neighbor at vertex " + std::to_string(v));
        }
        for (int v = 0; v < n; ++v)
            for (int u : rotation[v])
                if (std::find(rotation[u].begin(), rotation[u].end(), v) ==
                    rotation[u].end())
                    throw Error(ErrorKind::InconsistentRotation,
                                "edge {" + std::to_string(v) + "," + std::to_string(u) +
                                    "} listed only at one endpoint");
    }

    static PlaneGraph finalize(std::vector<std::vector<int>> rotation) {
        PlaneGraph g;
        g.n_ = static_cast<int>(rotation.size());
        g.rot_ = std::move(rotation);

        g.sorted_adj_.resize(g.n_);
        for (int v = 0; v < g.n_; ++v) {
            g.sorted_adj_[v] = g.rot_[v];
            std::sort(g.sorted_adj_[v].begin(), g.sorted_adj_[v].end());
            for (int u : g.rot_[v])
                if (v < u) g.edges_.emplace_back(v, u);
        }
        std::sort(g.edges_.begin(), g.edges_.end());
        g.m_ = static_cast<int>(g.edges_.size());

        // Darts: dart (v, k) points from v to rot_[v][k]; ids are offsets into
        // the concatenated rotation lists.
        std::vector<int> start(g.n_ + 1, 0);
        for (int v = 0; v < g.n_; ++v) start[v + 1] = start[v] + g.degree(v);
        const int n_darts = start[g.n_];
        std::vector<int> tail(n_darts), head(n_darts), rev(n_darts, -1);
        for (int v = 0; v < g.n_; ++v)
            for (int k = 0; k < g.degree(v); ++k) {
                tail[start[v] + k] = v;
                head[start[v] + k] = g.rot_[v][k];
            }
        {
            std::unordered_map<std::int64_t, int> open;  // key: tail * n + head
            open.reserve(n_darts);
            for (int d = 0; d < n_darts; ++d) {
                std::int64_t fwd = static_cast<std::int64_t>(tail[d]) * g.n_ + head[d];
                std::int64_t bwd = static_cast<std::int64_t>(head[d]) * g.n_ + tail[d];
                if (auto it = open.find(bwd); it != open.end()) {
                    rev[d] = it->second;
                    rev[it->second] = d;
                    open.erase(it);
                } else {
                    open.emplace(fwd, d);
                }
            }
        }

        // Face trace: successor of dart d is the rotation-successor of rev(d)
        // at its tail. Orbits of this map are the face boundary walks.
        std::vector<int> face_of(n_darts, -1);
        for (int d0 = 0; d0 < n_darts; ++d0) {
            if (face_of[d0] >= 0) continue;
            const int f = static_cast<int>(g.face_walk_.size());
            std::vector<Vertex> walk;
            int d = d0;
            do {
                face_of[d] = f;
                walk.push_back(tail[d]);
                int r = rev[d];
                int u = tail[r];
                int k = r - start[u];
                d = start[u] + (k + 1) % g.degree(u);
            } while (d != d0);
            g.face_degree_.push_back(static_cast<int>(walk.size()));
            g.face_walk_.push_back(std::move(walk));
        }
        // Isolated vertices: one empty face each.
        for (int v = 0; v < g.n_; ++v)
            if (g.degree(v) == 0) {
                g.face_degree_.push_back(0);
                g.face_walk_.push_back({v});
            }

        g.face_verts_.resize(g.face_walk_.size());
        g.faces_at_.resize(g.n_);
        for (int f = 0; f < static_cast<int>(g.face_walk_.size()); ++f) {
            auto verts = g.face_walk_[f];
            std::sort(verts.begin(), verts.end());
            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            for (Vertex v : verts) g.faces_at_[v].push_back(f);
            g.face_verts_[f] = std::move(verts);
        }

        // Components (BFS), then the genus-0 certificate: each component must
        // satisfy V - E + F = 2 for its own face count.
        g.comp_.assign(g.n_, -1);
        std::vector<int> queue;
        for (int v = 0; v < g.n_; ++v) {
            if (g.comp_[v] >= 0) continue;
            int c = g.n_components_++;
            g.comp_[v] = c;
            queue.assign(1, v);
            while (!queue.empty()) {
                int x = queue.back();
                queue.pop_back();
                for (int u : g.rot_[x])
                    if (g.comp_[u] < 0) {
                        g.comp_[u] = c;
                        queue.push_back(u);
                    }
            }
        }
        std::vector<int> cv(g.n_components_, 0), ce(g.n_components_, 0),
            cf(g.n_components_, 0);
        for (int v = 0; v < g.n_; ++v) cv[g.comp_[v]]++;
        for (auto& [u, v] : g.edges_) ce[g.comp_[u]]++;
        for (int f = 0; f < g.num_faces(); ++f) cf[g.comp_[g.face_walk_[f][0]]]++;
        for (int c = 0; c < g.n_components_; ++c)
            if (cv[c] - ce[c] + cf[c] != 2)
                throw Error(ErrorKind::NonPlanar,
                            "rotation system fails the Euler check (component " +
                                std::to_string(c) + ": V=" + std::to_string(cv[c]) +
                                " E=" + std::to_string(ce[c]) +
                                " F=" + std::to_string(cf[c]) + ")");
        return g;
    }

    int n_ = 0;
    int m_ = 0;
    int n_components_ = 0;
    std::vector<std::vector<Vertex>> rot_;
    std::vector<std::vector<Vertex>> sorted_adj_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> face_walk_;
    std::vector<int> face_degree_;
    std::vector<std::vector<Vertex>> face_verts_;
    std::vector<std::vector<FaceId>> faces_at_;
    std::vector<int> comp_;
};

// True iff the graph contains a cycle with exactly k distinct vertices.
// Canonical search: the cycle's minimum vertex is the DFS root, so each cycle
// is explored from one root only.
inline bool has_cycle_of_length(const PlaneGraph& g, int k) {
    if (k < 3 || k > g.num_vertices()) return false;
    std::vector<char> used(g.num_vertices(), 0);
    // Depth-first walk over vertices > s, closing back to s at depth k.
    auto rec = [&](auto&& self, Vertex s, Vertex v, int depth) -> bool {
        if (depth == k) return g.adjacent(v, s);
        for (Vertex u : g.neighbors(v)) {
            if (u <= s || used[u]) continue;
            used[u] = 1;
            if (self(self, s, u, depth + 1)) return true;
            used[u] = 0;
        }
        return false;
    };
    for (Vertex s = 0; s < g.num_vertices(); ++s)
        if (rec(rec, s, s, 1)) return true;
    return false;
}

struct ClassReport {
    bool planar_embedding = false;
    bool connected = false;
    bool has_4_cycle = false;
    bool has_5_cycle = false;
    // Membership in the class the whole library is about: plane graphs with
    // neither 4-cycles nor 5-cycles. Connectivity is reported separately
    // (several operations require it, membership itself does not).
    bool in_class = false;
};

inline ClassReport class_membership(const PlaneGraph& g) {
    ClassReport r;
    r.planar_embedding = true;  // holding a PlaneGraph certifies the embedding
    r.connected = g.is_connected();
    r.has_4_cycle = has_cycle_of_length(g, 4);
    r.has_5_cycle = has_cycle_of_length(g, 5);
    r.in_class = !r.has_4_cycle && !r.has_5_cycle;
    return r;
}

}  // namespace fp45
