#pragma once

// Test-only oracles. Everything here is re-derived from first principles by a
// different route than the library (combination scans instead of pruned DFS,
// adjacency masks instead of rotation systems, rule text replayed over
// independently recomputed structure sets), so agreement is meaningful.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fp45/classify.hpp"
#include "fp45/configs.hpp"
#include "fp45/discharging.hpp"
#include "fp45/partition.hpp"
#include "fp45/planegraph.hpp"

namespace oracle {

using fp45::FaceId;
using fp45::PlaneGraph;
using fp45::Vertex;

// ---------------------------------------------------------------------------
// Cycle detection by brute force: every k-subset, every ordering.

inline bool subset_has_cycle(const PlaneGraph& g, const std::vector<Vertex>& sub) {
    std::vector<Vertex> perm(sub.begin() + 1, sub.end());
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = g.adjacent(sub[0], perm.front()) && g.adjacent(perm.back(), sub[0]);
        for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i)
            ok = g.adjacent(perm[i], perm[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool has_k_cycle(const PlaneGraph& g, int k) {
    const int n = g.num_vertices();
    if (k < 3 || k > n) return false;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<Vertex> sub(idx.begin(), idx.end());
        if (subset_has_cycle(g, sub)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// ---------------------------------------------------------------------------
// Independent enumeration of the class on <= 5 vertices, straight from edge
// masks. Planarity on <= 5 vertices is exactly "not K5" (a K5 subdivision
// needs 5 branch vertices and K3,3 needs 6 vertices), so no embedder is used.

struct MaskGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<char>> adj;
};

inline MaskGraph mask_graph(int n, unsigned mask) {
    MaskGraph m;
    m.n = n;
    m.adj.assign(n, std::vector<char>(n, 0));
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1u) {
                m.edges.emplace_back(u, v);
                m.adj[u][v] = m.adj[v][u] = 1;
            }
    return m;
}

inline bool mg_connected(const MaskGraph& m) {
    if (m.n == 0) return false;
    std::vector<char> seen(m.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < m.n; ++u)
            if (m.adj[v][u] && !seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

inline bool mg_has_cycle(const MaskGraph& m, int k) {
    if (k > m.n) return false;
    std::vector<int> perm(m.n);
    std::iota(perm.begin(), perm.end(), 0);
    // All ordered k-arrangements via permutations of all n vertices; slow and
    // simple (n <= 5).
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = m.adj[perm[k - 1]][perm[0]] != 0;
        for (int i = 0; ok && i + 1 < k; ++i) ok = m.adj[perm[i]][perm[i + 1]] != 0;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline std::string mg_canon(const MaskGraph& m) {
    std::vector<int> perm(m.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s = std::to_string(m.n) + ":";
        for (int u = 0; u < m.n; ++u)
            for (int v = u + 1; v < m.n; ++v)
                s += m.adj[perm[u]][perm[v]] ? '1' : '0';
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Canonical forms of all connected planar graphs on exactly n <= 5 vertices
// with no 4-cycle and no 5-cycle.
inline std::set<std::string> slow_class_canons(int n) {
    std::set<std::string> out;
    const int bits = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << bits); ++mask) {
        MaskGraph m = mask_graph(n, mask);
        if (!mg_connected(m)) continue;
        if (mg_has_cycle(m, 4) || mg_has_cycle(m, 5)) continue;
        if (n == 5 && static_cast<int>(m.edges.size()) == 10) continue;  // K5
        out.insert(mg_canon(m));
    }
    return out;
}

inline std::string canon(const PlaneGraph& g) {
    MaskGraph m;
    m.n = g.num_vertices();
    m.adj.assign(m.n, std::vector<char>(m.n, 0));
    for (auto [u, v] : g.edges()) m.adj[u][v] = m.adj[v][u] = 1;
    return mg_canon(m);
}

// ---------------------------------------------------------------------------
// Partition validity by DFS (no union-find): per part, bounded degree and --
// for forest specs -- acyclicity of the induced subgraph.

inline bool valid_partition(const PlaneGraph& g, const std::vector<std::int8_t>& asg,
                            const fp45::SpecPair& specs) {
    const int n = g.num_vertices();
    for (int v = 0; v < n; ++v)
        if (asg[v] != 0 && asg[v] != 1) return false;
    for (int part = 0; part < 2; ++part) {
        const auto& spec = specs[part];
        for (int v = 0; v < n; ++v) {
            if (asg[v] != part) continue;
            int d = 0;
            for (Vertex u : g.sorted_neighbors(v))
                if (asg[u] == part) ++d;
            if (spec.max_degree >= 0 && d > spec.max_degree) return false;
        }
        if (spec.kind == fp45::PartSpec::Kind::Forest) {
            std::vector<int> parent(n, -2);
            for (int root = 0; root < n; ++root) {
                if (asg[root] != part || parent[root] != -2) continue;
                parent[root] = -1;
                std::vector<Vertex> stack{root};
                while (!stack.empty()) {
                    Vertex v = stack.back();
                    stack.pop_back();
                    for (Vertex u : g.sorted_neighbors(v)) {
                        if (asg[u] != part || u == parent[v]) continue;
                        if (parent[u] != -2) return false;  // closes a cycle
                        parent[u] = v;
                        stack.push_back(u);
                    }
                }
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Structure sets recomputed from raw face/degree queries.

struct SlowSets {
    std::vector<char> w2;                       // by vertex
    std::vector<char> f2, f3, terrible, f2s;    // by face
    std::vector<char> bad;                      // by vertex
    // (anchor, owner, face) triples, every 3-vertex on a 3-face
    std::vector<std::tuple<Vertex, Vertex, FaceId>> pendent;
};

inline std::vector<FaceId> slow_tri_at(const PlaneGraph& g, Vertex v) {
    std::vector<FaceId> out;
    for (FaceId f : g.faces_at(v))
        if (g.face_degree(f) == 3) out.push_back(f);
    return out;
}

inline Vertex slow_owner(const PlaneGraph& g, Vertex anchor, FaceId f) {
    for (Vertex u : g.sorted_neighbors(anchor))
        if (!g.on_face(u, f)) return u;
    return -1;
}

inline SlowSets slow_sets(const PlaneGraph& g) {
    SlowSets s;
    const int n = g.num_vertices(), nf = g.num_faces();
    s.w2.assign(n, 0);
    s.bad.assign(n, 0);
    s.f2.assign(nf, 0);
    s.f3.assign(nf, 0);
    s.terrible.assign(nf, 0);
    s.f2s.assign(nf, 0);

    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 2 && slow_tri_at(g, v).empty()) s.w2[v] = 1;

    for (FaceId f = 0; f < nf; ++f) {
        if (g.face_degree(f) != 3) continue;
        int twos = 0, threes = 0;
        for (Vertex u : g.face_vertices(f)) {
            if (g.degree(u) == 2) ++twos;
            if (g.degree(u) == 3) ++threes;
        }
        s.f2[f] = twos > 0;
        s.f3[f] = threes > 0;
        if (threes >= 2) {
            for (Vertex u : g.face_vertices(f))
                if (g.degree(u) == 3 && g.degree(slow_owner(g, u, f)) <= 4)
                    s.terrible[f] = 1;
        }
        for (Vertex u : g.face_vertices(f))
            if (g.degree(u) == 3) s.pendent.emplace_back(u, slow_owner(g, u, f), f);
    }

    for (Vertex v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d < 6 || d > 8) continue;
        std::vector<FaceId> terr, other;
        for (FaceId f : slow_tri_at(g, v))
            (s.terrible[f] ? terr : other).push_back(f);
        // keep only F2 u F3 faces among the non-terrible ones
        std::vector<FaceId> other23;
        for (FaceId f : other)
            if (s.f2[f] || s.f3[f]) other23.push_back(f);
        if (static_cast<int>(terr.size()) != d - 5 || other23.size() != 1) continue;
        bool ok = true;
        for (Vertex u : g.sorted_neighbors(v)) {
            bool on_listed = g.on_face(u, other23[0]);
            for (FaceId f : terr) on_listed = on_listed || g.on_face(u, f);
            if (!on_listed && g.degree(u) > 3) ok = false;
        }
        // a vertex on a 3-face outside the listed ones always breaks one of
        // the two counting conditions or the neighbor condition; nothing more
        // to check here
        if (ok) s.bad[v] = 1;
    }

    for (FaceId f = 0; f < nf; ++f) {
        if (!s.f2[f]) continue;
        for (Vertex u : g.face_vertices(f))
            if (g.degree(u) == 5 || s.bad[u]) s.f2s[f] = 1;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Existence checks for the thirteen reducible configurations, replayed from
// their one-line definitions over the slow sets.

inline bool config_exists(const PlaneGraph& g, fp45::ConfigKind kind) {
    const SlowSets s = slow_sets(g);
    const int n = g.num_vertices(), nf = g.num_faces();
    auto deg = [&](Vertex v) { return g.degree(v); };

    switch (kind) {
        case fp45::ConfigKind::C1:
            for (FaceId f = 0; f < nf; ++f) {
                if (g.face_degree(f) < 7) continue;
                int cnt = 0;
                for (Vertex u : g.face_vertices(f))
                    if (deg(u) == 2 && !slow_tri_at(g, u).empty()) ++cnt;
                if (cnt >= g.face_degree(f) - 5) return true;
            }
            return false;
        case fp45::ConfigKind::C2:
            for (Vertex v = 0; v < n; ++v)
                if (deg(v) <= 1) return true;
            return false;
        case fp45::ConfigKind::C3:
            for (Vertex v = 0; v < n; ++v)
                if (deg(v) == 2)
                    for (Vertex u : g.sorted_neighbors(v))
                        if (deg(u) <= 4) return true;
            return false;
        case fp45::ConfigKind::C4:
            for (FaceId f = 0; f < nf; ++f) {
                if (g.face_degree(f) != 3) continue;
                const auto& vs = g.face_vertices(f);
                for (Vertex x : vs)
                    for (Vertex y : vs)
                        for (Vertex z : vs)
                            if (x != y && y != z && x != z && deg(x) == 2 &&
                                deg(y) == 5 && deg(z) <= 6)
                                return true;
            }
            return false;
        case fp45::ConfigKind::C5:
            for (FaceId f = 0; f < nf; ++f) {
                if (g.face_degree(f) != 3) continue;
                const auto& vs = g.face_vertices(f);
                bool all5 = std::all_of(vs.begin(), vs.end(),
                                        [&](Vertex u) { return deg(u) <= 5; });
                if (!all5) continue;
                for (Vertex u : vs)
                    if (deg(u) == 3 && deg(slow_owner(g, u, f)) <= 4) return true;
            }
            return false;
        case fp45::ConfigKind::C6:
            for (Vertex v = 0; v < n; ++v) {
                if (deg(v) != 5) continue;
                bool small = true, hasw2 = false;
                for (Vertex u : g.sorted_neighbors(v)) {
                    small = small && deg(u) <= 3;
                    hasw2 = hasw2 || s.w2[u];
                }
                if (small && hasw2) return true;
            }
            return false;
        case fp45::ConfigKind::C7:
            for (Vertex v = 0; v < n; ++v) {
                if (deg(v) != 5) continue;
                std::set<FaceId> faces;
                for (auto& [a, o, f] : s.pendent)
                    if (o == v) faces.insert(f);
                if (faces.size() != 5) continue;
                int good = 0;
                for (FaceId f : faces) {
                    const auto& vs = g.face_vertices(f);
                    if (std::all_of(vs.begin(), vs.end(),
                                    [&](Vertex u) { return deg(u) <= 5; }))
                        ++good;
                }
                if (good >= 4) return true;
            }
            return false;
        case fp45::ConfigKind::C8:
            for (Vertex v = 0; v < n; ++v) {
                if (!s.bad[v]) continue;
                bool small = true;
                for (Vertex u : g.sorted_neighbors(v)) small = small && deg(u) <= 6;
                if (small) return true;
            }
            return false;
        case fp45::ConfigKind::C9:
            for (FaceId f = 0; f < nf; ++f) {
                if (g.face_degree(f) != 3 || !(s.f2[f] || s.f3[f])) continue;
                int bads = 0;
                for (Vertex u : g.face_vertices(f)) bads += s.bad[u] ? 1 : 0;
                if (bads >= 2) return true;
            }
            return false;
        case fp45::ConfigKind::C10:
            for (Vertex v = 0; v < n; ++v) {
                if (deg(v) != 6) continue;
                auto tri = slow_tri_at(g, v);
                if (tri.size() < 3) continue;
                for (FaceId f : tri)
                    if (s.terrible[f]) return true;
            }
            return false;
        case fp45::ConfigKind::C11:
        case fp45::ConfigKind::C12: {
            const bool eleven = kind == fp45::ConfigKind::C11;
            for (Vertex v = 0; v < n; ++v) {
                const int d = deg(v);
                if (d < 6 || d > 10) continue;
                if (!eleven) {
                    bool small = true;
                    for (Vertex u : g.sorted_neighbors(v)) small = small && deg(u) <= 3;
                    if (!small) continue;
                }
                int terr = 0;
                for (FaceId f : slow_tri_at(g, v)) terr += s.terrible[f] ? 1 : 0;
                if (terr >= (eleven ? d - 4 : d - 5)) return true;
            }
            return false;
        }
        case fp45::ConfigKind::C13:
            for (Vertex v = 0; v < n; ++v) {
                const int d = deg(v);
                if (d < 7 || d > 10 || s.bad[v]) continue;
                auto tri = slow_tri_at(g, v);
                for (FaceId f1 : tri) {
                    if (!s.f2s[f1]) continue;
                    int others = 0;
                    for (FaceId f : tri)
                        if (f != f1 && (s.terrible[f] || s.f2s[f])) ++others;
                    if (others >= d - 6) return true;
                }
            }
            return false;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Witness re-validation: the bound roles must satisfy the defining predicate.

inline bool revalidate(const PlaneGraph& g, const fp45::ConfigWitness& w) {
    const SlowSets s = slow_sets(g);
    auto deg = [&](Vertex v) { return g.degree(v); };
    auto on = [&](Vertex v, FaceId f) { return g.on_face(v, f); };
    auto del_is = [&](Vertex v) {
        return w.delete_vertex.has_value() && *w.delete_vertex == v;
    };
    // Terrible-face role block i: x_i, y_i 3-vertices on face, x'_i a
    // 4--vertex pendent neighbor of x_i, y'_i the pendent neighbor of y_i.
    auto terrible_roles_ok = [&](FaceId f, int i) {
        const std::string n = std::to_string(i);
        if (!s.terrible[f]) return false;
        if (!w.has_role("x" + n) || !w.has_role("y" + n) || !w.has_role("x'" + n) ||
            !w.has_role("y'" + n))
            return false;
        Vertex x = w.role("x" + n), y = w.role("y" + n);
        Vertex xo = w.role("x'" + n), yo = w.role("y'" + n);
        return x != y && on(x, f) && on(y, f) && deg(x) == 3 && deg(y) == 3 &&
               slow_owner(g, x, f) == xo && slow_owner(g, y, f) == yo &&
               deg(xo) <= 4;
    };

    switch (w.kind) {
        case fp45::ConfigKind::C1: {
            if (w.faces.size() != 1 || w.delete_vertex) return false;
            FaceId f = w.faces[0];
            if (g.face_degree(f) < 7) return false;
            auto us = w.indexed_roles("u");
            std::set<Vertex> uniq(us.begin(), us.end());
            if (uniq.size() != us.size() ||
                static_cast<int>(us.size()) < g.face_degree(f) - 5)
                return false;
            for (Vertex u : us)
                if (deg(u) != 2 || slow_tri_at(g, u).empty() || !on(u, f))
                    return false;
            return true;
        }
        case fp45::ConfigKind::C2: {
            Vertex v = w.role("v");
            return deg(v) <= 1 && del_is(v);
        }
        case fp45::ConfigKind::C3: {
            Vertex v = w.role("v"), u = w.role("u");
            return deg(v) == 2 && g.adjacent(u, v) && deg(u) <= 4 && del_is(v);
        }
        case fp45::ConfigKind::C4: {
            if (w.faces.size() != 1 || g.face_degree(w.faces[0]) != 3) return false;
            Vertex x = w.role("x"), y = w.role("y"), z = w.role("z");
            return x != y && y != z && x != z && on(x, w.faces[0]) &&
                   on(y, w.faces[0]) && on(z, w.faces[0]) && deg(x) == 2 &&
                   deg(y) == 5 && deg(z) <= 6 && del_is(x);
        }
        case fp45::ConfigKind::C5: {
            if (w.faces.size() != 1 || g.face_degree(w.faces[0]) != 3) return false;
            FaceId f = w.faces[0];
            for (Vertex u : g.face_vertices(f))
                if (deg(u) > 5) return false;
            Vertex x = w.role("x"), xo = w.role("x'");
            Vertex y = w.role("y"), z = w.role("z");
            return on(x, f) && on(y, f) && on(z, f) && y != x && z != x && y != z &&
                   deg(x) == 3 && slow_owner(g, x, f) == xo && deg(xo) <= 4 &&
                   del_is(x);
        }
        case fp45::ConfigKind::C6: {
            Vertex v = w.role("v"), x1 = w.role("x1"), y1 = w.role("y1");
            if (deg(v) != 5) return false;
            for (Vertex u : g.sorted_neighbors(v))
                if (deg(u) > 3) return false;
            return g.adjacent(v, x1) && s.w2[x1] && deg(x1) == 2 &&
                   g.adjacent(x1, y1) && y1 != v && del_is(x1);
        }
        case fp45::ConfigKind::C7: {
            Vertex v = w.role("v");
            if (deg(v) != 5 || w.faces.size() != 5 || !del_is(v)) return false;
            std::set<FaceId> uniq(w.faces.begin(), w.faces.end());
            if (uniq.size() != 5) return false;
            int good = 0;
            for (int i = 1; i <= 5; ++i) {
                FaceId f = w.faces[i - 1];
                if (g.face_degree(f) != 3) return false;
                Vertex x = w.role("x" + std::to_string(i));
                if (!on(x, f) || deg(x) != 3 || slow_owner(g, x, f) != v)
                    return false;
                const auto& vs = g.face_vertices(f);
                if (std::all_of(vs.begin(), vs.end(),
                                [&](Vertex u) { return deg(u) <= 5; }))
                    ++good;
            }
            return good >= 4;
        }
        case fp45::ConfigKind::C8: {
            Vertex v = w.role("v");
            if (!s.bad[v]) return false;
            for (Vertex u : g.sorted_neighbors(v))
                if (deg(u) > 6) return false;
            if (w.faces.size() != 2) return false;
            FaceId tf = w.faces[0], nf2 = w.faces[1];
            if (!on(v, tf) || !on(v, nf2)) return false;
            if (s.terrible[nf2] || !(s.f2[nf2] || s.f3[nf2])) return false;
            Vertex u = w.role("u"), ww = w.role("w");
            if (u == ww || !on(u, nf2) || !on(ww, nf2) || u == v || ww == v)
                return false;
            return terrible_roles_ok(tf, 1) && del_is(w.role("x1"));
        }
        case fp45::ConfigKind::C9: {
            Vertex v = w.role("v"), ww = w.role("w");
            if (v == ww || !s.bad[v] || !s.bad[ww]) return false;
            if (w.faces.size() != 2) return false;
            FaceId f = w.faces[0], tf = w.faces[1];
            if (g.face_degree(f) != 3 || !(s.f2[f] || s.f3[f])) return false;
            if (!on(v, f) || !on(ww, f) || !on(v, tf)) return false;
            return terrible_roles_ok(tf, 1) && del_is(w.role("x1"));
        }
        case fp45::ConfigKind::C10: {
            Vertex v = w.role("v");
            if (deg(v) != 6 || w.faces.size() < 3) return false;
            std::set<FaceId> uniq(w.faces.begin(), w.faces.end());
            if (uniq.size() != w.faces.size()) return false;
            for (FaceId f : w.faces)
                if (g.face_degree(f) != 3 || !on(v, f)) return false;
            return terrible_roles_ok(w.faces[0], 1) && del_is(w.role("x1"));
        }
        case fp45::ConfigKind::C11:
        case fp45::ConfigKind::C12: {
            Vertex v = w.role("v");
            const int d = deg(v);
            if (d < 6 || d > 10) return false;
            const int need = (w.kind == fp45::ConfigKind::C11) ? d - 4 : d - 5;
            if (static_cast<int>(w.faces.size()) != need) return false;
            std::set<FaceId> uniq(w.faces.begin(), w.faces.end());
            if (static_cast<int>(uniq.size()) != need) return false;
            if (w.kind == fp45::ConfigKind::C12)
                for (Vertex u : g.sorted_neighbors(v))
                    if (deg(u) > 3) return false;
            for (int i = 1; i <= need; ++i)
                if (!on(v, w.faces[i - 1]) || !terrible_roles_ok(w.faces[i - 1], i))
                    return false;
            return del_is(w.role("x1"));
        }
        case fp45::ConfigKind::C13: {
            Vertex v = w.role("v");
            const int d = deg(v);
            if (d < 7 || d > 10 || s.bad[v]) return false;
            if (static_cast<int>(w.faces.size()) != d - 5) return false;
            std::set<FaceId> uniq(w.faces.begin(), w.faces.end());
            if (uniq.size() != w.faces.size()) return false;
            if (!s.f2s[w.faces[0]]) return false;
            for (std::size_t j = 0; j < w.faces.size(); ++j) {
                FaceId f = w.faces[j];
                const std::string n = std::to_string(j + 1);
                if (!on(v, f) || g.face_degree(f) != 3) return false;
                if (w.has_role("x'" + n)) {  // terrible block
                    if (!terrible_roles_ok(f, static_cast<int>(j + 1))) return false;
                } else {
                    if (!s.f2s[f]) return false;
                    Vertex x = w.role("x" + n), y = w.role("y" + n);
                    if (!on(x, f) || !on(y, f) || deg(x) != 2 ||
                        !(deg(y) == 5 || s.bad[y]))
                        return false;
                }
            }
            return del_is(w.role("x1"));
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Discharging replay: the expected transfer multiset, straight from the rule
// text over the slow sets (per-record pendent accounting).

struct FlatTransfer {
    std::string from, to, rule;
    int halves;
    auto operator<=>(const FlatTransfer&) const = default;
};

inline std::vector<FlatTransfer> expected_transfers(const PlaneGraph& g) {
    const SlowSets s = slow_sets(g);
    std::vector<FlatTransfer> out;
    auto vname = [](Vertex v) { return "v" + std::to_string(v); };
    auto fname = [](FaceId f) { return "f" + std::to_string(f); };
    const int n = g.num_vertices(), nf = g.num_faces();

    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 4 || g.degree(v) == 5)
            for (FaceId f : slow_tri_at(g, v))
                out.push_back({vname(v), fname(f), "R1", 2});

    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) >= 5)
            for (Vertex u : g.sorted_neighbors(v))
                if (s.w2[u]) out.push_back({vname(v), vname(u), "R2", 2});

    for (auto& [anchor, owner, f] : s.pendent) {
        if (g.degree(owner) >= 6) {
            out.push_back({vname(owner), fname(f), "R3c", 2});
        } else if (g.degree(owner) == 5) {
            const auto& vs = g.face_vertices(f);
            bool all5 = std::all_of(vs.begin(), vs.end(),
                                    [&](Vertex u) { return g.degree(u) <= 5; });
            out.push_back({vname(owner), fname(f), all5 ? "R3a" : "R3b", all5 ? 2 : 1});
        }
    }

    for (Vertex v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d < 6 || d > 10) continue;
        for (FaceId f : slow_tri_at(g, v)) {
            if (!s.f2[f] && !s.f3[f])
                out.push_back({vname(v), fname(f), "R4a", 2});
            else if (s.terrible[f])
                out.push_back({vname(v), fname(f), "R4c", 6});
            else if (s.f2s[f])
                out.push_back({vname(v), fname(f), s.bad[v] ? "R4d" : "R4e",
                               s.bad[v] ? 4 : 6});
            else
                out.push_back({vname(v), fname(f), "R4b", 4});
        }
    }

    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) >= 11)
            for (FaceId f : slow_tri_at(g, v))
                out.push_back({vname(v), fname(f), "R5", 6});

    for (FaceId f = 0; f < nf; ++f) {
        if (!(s.f2[f] || s.f3[f]) || s.terrible[f]) continue;
        for (Vertex u : g.face_vertices(f))
            if (g.degree(u) == 2 || s.bad[u])
                out.push_back({fname(f), vname(u), "R6", 2});
    }

    for (FaceId f = 0; f < nf; ++f) {
        if (g.face_degree(f) < 7) continue;
        for (Vertex u : g.face_walk(f))
            if (g.degree(u) == 2 && !slow_tri_at(g, u).empty())
                out.push_back({fname(f), vname(u), "R7", 2});
    }

    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<FlatTransfer> flatten(const fp45::ChargeLedger& led) {
    std::vector<FlatTransfer> out;
    for (const auto& t : led.transfers)
        out.push_back({t.from.name(), t.to.name(), t.rule, t.half_amount});
    std::sort(out.begin(), out.end());
    return out;
}

// Replays initial + transfers and compares against the stored finals.
inline bool ledger_replays(const fp45::ChargeLedger& led) {
    std::vector<long long> v(led.vertex_initial.begin(), led.vertex_initial.end());
    std::vector<long long> f(led.face_initial.begin(), led.face_initial.end());
    auto cell = [&](const fp45::Element& e) -> long long& {
        return e.kind == fp45::Element::Kind::Vertex ? v[e.id] : f[e.id];
    };
    for (const auto& t : led.transfers) {
        cell(t.from) -= t.half_amount;
        cell(t.to) += t.half_amount;
    }
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != led.vertex_final[i]) return false;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != led.face_final[i]) return false;
    return true;
}

}  // namespace oracle
