#pragma once

// Test-corpus production: exhaustive enumeration of the small class members,
// seeded random gadget assembly (class membership by construction), and file
// ingestion.
//
// Gadget blocks are given by explicit rotation systems with designated port
// vertices. Blocks are glued at ports only, either by merging a port with an
// existing port (cut vertex) or by adding a bridge edge; both operations keep
// every cycle inside a single block, so no 4- or 5-cycle can ever appear.
// Splices always append at the end of a port's rotation list; each block's
// ports are chosen so that the corner between the last and first rotation
// entries lies on a sacrificial face (never on a decorated triangle), hence
// decorations survive composition.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "fp45/errors.hpp"
#include "fp45/io.hpp"
#include "fp45/planegraph.hpp"

namespace fp45 {

struct BlockMix {
    double edge = 1.0;
    double triangle = 2.0;
    double c6 = 1.0;
    double c7 = 1.0;
    double hex_patch = 1.0;
};

struct CorpusSpec {
    enum class Mode { Exhaustive, Gadget, Ingest };
    Mode mode = Mode::Gadget;
    int n_max = 40;
    std::uint64_t seed = 0;
    BlockMix block_mix;
    int count = 100;
    double decoration = 0.35;  // chance a triangle block carries pendants
};

namespace detail {

// Rejection-sampled uniform integer in [0, n); avoids the library
// distributions so streams are identical across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % n;
}

// ---- exhaustive enumeration over adjacency bitmasks (n <= 7) ----

inline bool mask_connected(const std::vector<unsigned>& adj, int n) {
    unsigned seen = 1u, frontier = 1u;
    while (frontier) {
        unsigned next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier & (1u << v)) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << n) - 1u;
}

inline bool mask_has_c4(const std::vector<unsigned>& adj, int n) {
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            unsigned common = adj[u] & adj[v] & ~(1u << u) & ~(1u << v);
            if (std::popcount(common) >= 2) return true;
        }
    return false;
}

inline bool mask_has_c5(const std::vector<unsigned>& adj, int n) {
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!(adj[u] & (1u << v))) continue;
            const unsigned uv = (1u << u) | (1u << v);
            for (int a = 0; a < n; ++a) {
                if (!(adj[u] & (1u << a)) || (uv & (1u << a))) continue;
                for (int c = 0; c < n; ++c) {
                    if (c == a || !(adj[v] & (1u << c)) || (uv & (1u << c))) continue;
                    if (adj[a] & adj[c] & ~uv & ~(1u << a) & ~(1u << c)) return true;
                }
            }
        }
    return false;
}

// Minimum upper-triangle bitstring over all vertex relabelings; exact
// isomorphism certificate for n <= 7.
inline std::uint32_t iso_certificate(const std::vector<unsigned>& adj, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::uint32_t best = UINT32_MAX;
    do {
        std::uint32_t code = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (adj[perm[i]] & (1u << perm[j])) code |= (1u << bit);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline int mask_triangles(const std::vector<unsigned>& adj, int n) {
    int t = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!(adj[u] & (1u << v))) continue;
            unsigned common = adj[u] & adj[v];
            for (int w = v + 1; w < n; ++w)
                if (common & (1u << w)) ++t;
        }
    return t;
}

}  // namespace detail

// All connected simple planar graphs without 4-/5-cycles on up to n_max
// vertices, one representative per isomorphism class, each with an embedding.
// Deterministic order: by vertex count, then by first-found adjacency mask.
inline std::vector<PlaneGraph> enumerate_exhaustive(int n_max) {
    if (n_max > 7)
        throw Error(ErrorKind::TooLarge,
                    "exhaustive enumeration is capped at 7 vertices");
    std::vector<PlaneGraph> out;
    for (int n = 1; n <= n_max; ++n) {
        const int pairs = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> pair_of(pairs);
        {
            int e = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) pair_of[e++] = {i, j};
        }
        // bucket key -> certificates already emitted
        std::map<std::tuple<int, std::string, int, std::string>,
                 std::vector<std::uint32_t>>
            buckets;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            std::vector<unsigned> adj(n, 0);
            std::vector<std::pair<int, int>> edges;
            for (int e = 0; e < pairs; ++e)
                if (mask & (1u << e)) {
                    auto [i, j] = pair_of[e];
                    adj[i] |= (1u << j);
                    adj[j] |= (1u << i);
                    edges.push_back(pair_of[e]);
                }
            if (!detail::mask_connected(adj, n)) continue;
            if (detail::mask_has_c4(adj, n) || detail::mask_has_c5(adj, n)) continue;

            std::vector<int> deg(n);
            for (int v = 0; v < n; ++v) deg[v] = std::popcount(adj[v]);
            std::string degseq, nbrdeg;
            {
                std::vector<int> ds = deg;
                std::sort(ds.begin(), ds.end());
                for (int d : ds) degseq += static_cast<char>('0' + d);
                std::vector<std::string> nd(n);
                for (int v = 0; v < n; ++v) {
                    std::vector<int> local;
                    for (int u = 0; u < n; ++u)
                        if (adj[v] & (1u << u)) local.push_back(deg[u]);
                    std::sort(local.begin(), local.end());
                    for (int d : local) nd[v] += static_cast<char>('0' + d);
                }
                std::sort(nd.begin(), nd.end());
                for (auto& s : nd) nbrdeg += s + '|';
            }
            auto key = std::make_tuple(static_cast<int>(edges.size()), degseq,
                                       detail::mask_triangles(adj, n), nbrdeg);
            auto cert = detail::iso_certificate(adj, n);
            auto& seen = buckets[key];
            if (std::find(seen.begin(), seen.end(), cert) != seen.end()) continue;

            try {
                out.push_back(PlaneGraph::from_edges(n, edges));
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NonPlanar) throw;
                continue;  // planarity is the last filter
            }
            seen.push_back(cert);
        }
    }
    return out;
}

// ---- gadget blocks ----

struct GadgetBlock {
    std::vector<std::vector<int>> rotation;
    std::vector<int> ports;  // attachment vertices (end corner sacrificial)
};

inline GadgetBlock edge_block() { return {{{1}, {0}}, {0, 1}}; }

inline GadgetBlock triangle_block() {
    return {{{1, 2}, {2, 0}, {0, 1}}, {0, 1, 2}};
}

inline GadgetBlock cycle_block(int k) {
    GadgetBlock b;
    b.rotation.resize(k);
    for (int i = 0; i < k; ++i) {
        b.rotation[i] = {(i + k - 1) % k, (i + 1) % k};
        b.ports.push_back(i);
    }
    return b;
}

// Two hexagons sharing the edge 0-5.
inline GadgetBlock hex_patch_block() {
    GadgetBlock b;
    b.rotation = {{9, 5, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5},
                  {4, 0, 6}, {5, 7}, {6, 8}, {7, 9}, {8, 0}};
    for (int i = 0; i < 10; ++i) b.ports.push_back(i);
    return b;
}

// Triangle {0,1,2} whose 3-vertices 0 and 1 carry pendent leaves: the
// triangle face is terrible. Only vertex 2 may be glued at.
inline GadgetBlock terrible_triangle_block() {
    return {{{1, 2, 3}, {2, 0, 4}, {0, 1}, {0}, {1}}, {2}};
}

// 6-vertex 0 on one terrible triangle {0,1,2} (pendants 3,4), one small
// triangle {0,5,6}, and two leaves 7,8: vertex 0 is bad. Port: 6.
inline GadgetBlock bad6_block() {
    return {{{1, 2, 5, 6, 7, 8}, {2, 0, 3}, {0, 1, 4}, {1}, {2},
             {6, 0}, {0, 5}, {0}, {0}},
            {6}};
}

// 7-vertex 0 on two terrible triangles {0,1,2}, {0,3,4} (pendants 5-8), one
// small triangle {0,9,10}, and a leaf 11: vertex 0 is bad. Port: 10.
inline GadgetBlock bad7_block() {
    return {{{1, 2, 3, 4, 9, 10, 11}, {2, 0, 5}, {0, 1, 6}, {4, 0, 7},
             {0, 3, 8}, {1}, {2}, {3}, {4}, {10, 0}, {0, 9}, {0}},
            {10}};
}

// 8-vertex 0 on three terrible triangles {0,1,2}, {0,3,4}, {0,5,6}
// (pendants 7-12) and one small triangle {0,13,14}: vertex 0 is bad.
// Port: 14.
inline GadgetBlock bad8_block() {
    return {{{1, 2, 3, 4, 5, 6, 13, 14}, {2, 0, 7}, {0, 1, 8}, {4, 0, 9},
             {0, 3, 10}, {6, 0, 11}, {0, 5, 12}, {1}, {2}, {3}, {4}, {5}, {6},
             {14, 0}, {0, 13}},
            {14}};
}

// A growing splice of blocks; rotation lists use global ids.
struct GadgetAssembly {
    std::vector<std::vector<int>> rotation;
    std::vector<int> ports;

    explicit GadgetAssembly(const GadgetBlock& first)
        : rotation(first.rotation), ports(first.ports) {}

    int size() const { return static_cast<int>(rotation.size()); }

    // Attach `b` at global vertex `ports[at]`. Bridge mode adds one edge to a
    // fresh copy of b; cut-vertex mode merges b's chosen port into the
    // attachment vertex (appending its rotation, which keeps both blocks'
    // protected corners intact).
    void attach(const GadgetBlock& b, std::size_t at, std::size_t b_port,
                bool bridge) {
        const int a = ports[at];
        const int bp = b.ports[b_port];
        const int base = size();
        std::vector<int> map(b.rotation.size());
        if (bridge) {
            for (std::size_t v = 0; v < b.rotation.size(); ++v)
                map[v] = base + static_cast<int>(v);
        } else {
            int next = base;
            for (std::size_t v = 0; v < b.rotation.size(); ++v)
                map[v] = (static_cast<int>(v) == bp) ? a : next++;
        }
        for (std::size_t v = 0; v < b.rotation.size(); ++v) {
            if (!bridge && static_cast<int>(v) == bp) {
                for (int u : b.rotation[v]) rotation[a].push_back(map[u]);
                continue;
            }
            std::vector<int> row;
            for (int u : b.rotation[v]) row.push_back(map[u]);
            rotation.push_back(std::move(row));
        }
        if (bridge) {
            rotation[a].push_back(map[bp]);
            rotation[map[bp]].push_back(a);
        }
        for (int p : b.ports)
            if (bridge || p != bp) ports.push_back(map[p]);
    }
};

namespace detail {

enum class BlockKind { Edge, Triangle, C6, C7, HexPatch };

inline BlockKind pick_block(std::mt19937_64& rng, const BlockMix& mix) {
    auto scale = [](double w) {
        return static_cast<std::uint64_t>(w > 0 ? w * 1e6 : 0);
    };
    const std::uint64_t w[5] = {scale(mix.edge), scale(mix.triangle), scale(mix.c6),
                                scale(mix.c7), scale(mix.hex_patch)};
    std::uint64_t total = w[0] + w[1] + w[2] + w[3] + w[4];
    if (total == 0) return BlockKind::Triangle;
    std::uint64_t r = uniform_below(rng, total);
    for (int i = 0; i < 5; ++i) {
        if (r < w[i]) return static_cast<BlockKind>(i);
        r -= w[i];
    }
    return BlockKind::HexPatch;
}

inline GadgetBlock block_of(BlockKind k) {
    switch (k) {
        case BlockKind::Edge: return edge_block();
        case BlockKind::Triangle: return triangle_block();
        case BlockKind::C6: return cycle_block(6);
        case BlockKind::C7: return cycle_block(7);
        case BlockKind::HexPatch: return hex_patch_block();
    }
    return triangle_block();
}

inline GadgetBlock decorated_block(std::mt19937_64& rng) {
    switch (uniform_below(rng, 4)) {
        case 0: return terrible_triangle_block();
        case 1: return bad6_block();
        case 2: return bad7_block();
        default: return bad8_block();
    }
}

inline PlaneGraph one_gadget(std::mt19937_64& rng, const CorpusSpec& spec) {
    const int n_max = std::max(2, spec.n_max);
    const int target = 2 + static_cast<int>(uniform_below(
                               rng, static_cast<std::uint64_t>(n_max - 1)));
    auto draw = [&]() {
        GadgetBlock b = block_of(pick_block(rng, spec.block_mix));
        if (b.rotation.size() == 3 && spec.decoration > 0) {
            const auto thresh =
                static_cast<std::uint64_t>(std::min(spec.decoration, 1.0) * 1e6);
            if (uniform_below(rng, 1000000) < thresh) {
                GadgetBlock d = decorated_block(rng);
                return d;
            }
        }
        return b;
    };

    GadgetBlock first = draw();
    while (static_cast<int>(first.rotation.size()) > target &&
           first.rotation.size() > 2)
        first = (uniform_below(rng, 2) == 0) ? edge_block() : triangle_block();
    GadgetAssembly a(first);

    while (a.size() < target) {
        GadgetBlock b = draw();
        const bool bridge = uniform_below(rng, 2) == 0;
        int grow = static_cast<int>(b.rotation.size()) - (bridge ? 0 : 1);
        if (a.size() + grow > n_max) {
            b = edge_block();
            grow = bridge ? 2 : 1;
            if (a.size() + grow > n_max) break;
        }
        a.attach(b, uniform_below(rng, a.ports.size()),
                 uniform_below(rng, b.ports.size()), bridge);
    }
    return PlaneGraph::from_rotation(a.rotation);
}

}  // namespace detail

// Seeded stream of random block assemblies; every output is connected,
// planar-embedded, and free of 4-/5-cycles by construction.
inline std::vector<PlaneGraph> generate_gadget(const CorpusSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::vector<PlaneGraph> out;
    out.reserve(spec.count);
    for (int i = 0; i < spec.count; ++i)
        out.push_back(detail::one_gadget(rng, spec));
    return out;
}

// Reads planar_code (sniffed via its header or a non-text first byte) or
// rotgraph text. Graphs outside the class are passed through untouched.
inline std::vector<PlaneGraph> ingest(std::istream& in) {
    const int first = in.peek();
    if (first == std::char_traits<char>::eof()) return {};
    if (first == '>') return read_planar_code(in);
    if (first == '#' || (first >= '0' && first <= '9') || first == '\n' ||
        first == ' ')
        return read_rotgraph(in);
    return read_planar_code(in);
}

inline std::vector<PlaneGraph> ingest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    return ingest(in);
}

}  // namespace fp45
