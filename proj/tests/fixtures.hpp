#pragma once

// Shared graph fixtures for the test suite. Rotations are hand-written so the
// triangle faces the tests rely on are faces by construction (an embedder is
// free to route pendant edges inside a triangle, which would silently destroy
// the structure under test). Every fixture still passes the Euler check.

#include <utility>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "fp45/corpus.hpp"
#include "fp45/errors.hpp"
#include "fp45/planegraph.hpp"

namespace fx {

using fp45::PlaneGraph;

struct ErrorKindIs : Catch::Matchers::MatcherGenericBase {
    explicit ErrorKindIs(fp45::ErrorKind k) : kind(k) {}
    bool match(const fp45::Error& e) const { return e.kind() == kind; }
    std::string describe() const override {
        return std::string("has kind ") + fp45::to_string(kind);
    }
    fp45::ErrorKind kind;
};

inline PlaneGraph from_el(int n, std::vector<std::pair<int, int>> edges) {
    return PlaneGraph::from_edges(n, std::move(edges));
}

inline PlaneGraph path(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return from_el(k, std::move(e));
}

inline PlaneGraph cycle(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return from_el(k, std::move(e));
}

inline PlaneGraph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return from_el(n, std::move(e));
}

inline PlaneGraph star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return from_el(leaves + 1, std::move(e));
}

// 3-cube (six 4-faces).
inline PlaneGraph cube() {
    return from_el(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                       {4, 5}, {5, 6}, {6, 7}, {7, 4},
                       {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

// Dodecahedron from its LCF description [10,7,4,-4,-7,10,-4,7,-7,4] repeated
// twice: Hamiltonian cycle 0..19 plus chords i -> i + shift(i).
inline PlaneGraph dodecahedron() {
    const int shift[] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4,
                         10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 20; ++i) e.emplace_back(i, (i + 1) % 20);
    for (int i = 0; i < 20; ++i) {
        int j = ((i + shift[i]) % 20 + 20) % 20;
        if (i < j) e.emplace_back(i, j);
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return from_el(20, std::move(e));
}

// Two triangles joined by a bridge; the outer face has degree 8 and carries
// four 2-vertices that lie on triangles.
inline PlaneGraph bridged_triangles() {
    return from_el(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
}

// Triangle with a pendant 2-edge path hanging off one corner.
inline PlaneGraph triangle_tail() {
    return from_el(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
}

// (2,6,6)-face: triangle {0,1,2} where 0 is a 2-vertex and 1, 2 are
// 6-vertices padded with leaves.
inline PlaneGraph two_six_six() {
    return PlaneGraph::from_rotation({
        {1, 2},                    // 0
        {0, 2, 3, 4, 5, 6},        // 1
        {1, 0, 7, 8, 9, 10},       // 2
        {1}, {1}, {1}, {1},        // 3..6
        {2}, {2}, {2}, {2},        // 7..10
    });
}

// (2,5,3)-face: triangle {0,1,2}, deg 0 = 2, deg 1 = 5, deg 2 = 3.
inline PlaneGraph two_five_face() {
    return PlaneGraph::from_rotation({
        {1, 2},              // 0
        {0, 2, 3, 4, 5},     // 1
        {1, 0, 6},           // 2
        {1}, {1}, {1},       // 3..5
        {2},                 // 6
    });
}

// 5-vertex 0 whose neighbors are all 3--vertices, one of them (vertex 1) a
// 2-vertex on no triangle.
inline PlaneGraph low_nbr_hub() {
    return PlaneGraph::from_rotation({
        {1, 2, 3, 4, 5},  // 0
        {0, 6},           // 1
        {0}, {0}, {0}, {0},
        {1},              // 6
    });
}

// 5-vertex 0 with five pendent triangles, each a (3,2,2)-face.
inline PlaneGraph five_pendent_hub() {
    std::vector<std::vector<int>> rot(16);
    rot[0] = {1, 2, 3, 4, 5};
    for (int i = 1; i <= 5; ++i) {
        int a = 4 + 2 * i, b = 5 + 2 * i;  // partners of anchor i: 6..15
        rot[i] = {0, b, a};
        rot[a] = {i, b};
        rot[b] = {a, i};
    }
    return PlaneGraph::from_rotation(std::move(rot));
}

// Triangle face {v,w,u} whose two 6-vertices v=1, w=2 each carry their own
// terrible triangle plus two leaves; u=0 is a 2-vertex.
inline PlaneGraph two_bad_face() {
    return PlaneGraph::from_rotation({
        {1, 2},                  // 0 = u
        {0, 2, 4, 3, 7, 8},      // 1 = v
        {1, 0, 10, 9, 13, 14},   // 2 = w
        {1, 4, 5},               // 3
        {3, 1, 6},               // 4
        {3}, {4},                // 5, 6
        {1}, {1},                // 7, 8
        {2, 10, 11},             // 9
        {9, 2, 12},              // 10
        {9}, {10},               // 11, 12
        {2}, {2},                // 13, 14
    });
}

// 6-vertex 0 on three triangles, exactly one terrible.
inline PlaneGraph three_face_hub() {
    return PlaneGraph::from_rotation({
        {2, 1, 4, 3, 6, 5},  // 0
        {0, 2, 7},           // 1
        {1, 0, 8},           // 2
        {0, 4},              // 3
        {3, 0},              // 4
        {0, 6},              // 5
        {5, 0},              // 6
        {1},                 // 7
        {2},                 // 8
    });
}

// 6-vertex 0 on two terrible triangles plus two leaf edges.
inline PlaneGraph double_terrible_hub() {
    return PlaneGraph::from_rotation({
        {2, 1, 4, 3, 9, 10},  // 0
        {0, 2, 5},            // 1
        {1, 0, 6},            // 2
        {0, 4, 7},            // 3
        {3, 0, 8},            // 4
        {1}, {2}, {3}, {4},   // 5..8
        {0}, {0},             // 9, 10
    });
}

// 6-vertex 0 on one terrible triangle with only 3--neighbors.
inline PlaneGraph leafy_terrible_hub() {
    return PlaneGraph::from_rotation({
        {2, 1, 5, 6, 7, 8},  // 0
        {0, 2, 3},           // 1
        {1, 0, 4},           // 2
        {1}, {2},            // 3, 4
        {0}, {0}, {0}, {0},  // 5..8
    });
}

// Non-bad 7-vertex 0 on a (2,5)-carrying triangle {0,1,2} plus a terrible
// triangle {0,3,4} plus three leaves.
inline PlaneGraph fstar_hub() {
    return PlaneGraph::from_rotation({
        {2, 1, 4, 3, 10, 11, 12},  // 0
        {0, 2},                    // 1: the 2-vertex
        {1, 0, 7, 8, 9},           // 2: the 5-vertex
        {0, 4, 5},                 // 3
        {3, 0, 6},                 // 4
        {3}, {4},                  // 5, 6
        {2}, {2}, {2},             // 7..9
        {0}, {0}, {0},             // 10..12
    });
}

// Bad-6 hub block merged onto a plain triangle at a cut vertex: the block hub
// becomes global vertex 3 and stays bad inside the larger graph.
inline PlaneGraph composed_bad6() {
    fp45::GadgetAssembly a(fp45::triangle_block());
    a.attach(fp45::bad6_block(), 0, 0, false);
    return PlaneGraph::from_rotation(a.rotation);
}

}  // namespace fx
