#pragma once

// Two-part vertex partitions where each part must induce either a forest
// with bounded maximum degree (F_d) or just a bounded-degree graph (D_d).
// Three independent pieces:
//   verify              linear checker (degree counts + union-find acyclicity)
//   solve               exact backtracking search (degeneracy order, pruned)
//   count_or_enumerate  exhaustive assignment enumeration; the deliberately
//                       dumb oracle the solver is tested against
//
// Part indices: partition.assignment[v] is 0 or 1 (-1 = unassigned, only
// meaningful for partial partitions inside the reducer).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fp45/errors.hpp"
#include "fp45/planegraph.hpp"

namespace fp45 {

struct PartSpec {
    enum class Kind { Forest, BoundedDegree };
    Kind kind = Kind::Forest;
    int max_degree = -1;  // -1 = unbounded

    bool operator==(const PartSpec&) const = default;

    bool bounded() const { return max_degree >= 0; }

    std::string name() const {
        std::string s = (kind == Kind::Forest) ? "F" : "D";
        return s + (bounded() ? std::to_string(max_degree) : "inf");
    }

    // "F3", "D4", "Finf", "Dinf"; "I" = F0 (independent set).
    static PartSpec parse(std::string_view s) {
        if (s == "I") return {Kind::Forest, 0};
        if (s.size() < 2 || (s[0] != 'F' && s[0] != 'D'))
            throw Error(ErrorKind::ParseError,
                        "part spec must look like F3/D4/Finf, got '" + std::string(s) +
                            "'");
        PartSpec p;
        p.kind = (s[0] == 'F') ? Kind::Forest : Kind::BoundedDegree;
        std::string_view rest = s.substr(1);
        if (rest == "inf") {
            p.max_degree = -1;
            return p;
        }
        int d = 0;
        for (char ch : rest) {
            if (ch < '0' || ch > '9')
                throw Error(ErrorKind::ParseError,
                            "bad degree bound in part spec '" + std::string(s) + "'");
            d = d * 10 + (ch - '0');
        }
        p.max_degree = d;
        return p;
    }
};

using SpecPair = std::array<PartSpec, 2>;

inline SpecPair make_specs(std::string_view a, std::string_view b) {
    return {PartSpec::parse(a), PartSpec::parse(b)};
}

struct Partition {
    std::vector<std::int8_t> assignment;  // 0 / 1 / -1 (unassigned)
    SpecPair specs;
};

struct Violation {
    enum class Type { DegreeExceeded, CycleClosed };
    Type type;
    int part;
    Vertex vertex;  // offending vertex (for cycles: lower endpoint of the
                    // closing edge)
};

namespace detail {

// Union-find without path compression so that unions can be undone in LIFO
// order (the solver backtracks through them).
class UndoableDsu {
public:
    explicit UndoableDsu(int n) : parent_(n), size_(n, 1) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    // False if x and y were already connected (a union would close a cycle).
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        if (size_[rx] < size_[ry] || (size_[rx] == size_[ry] && ry < rx))
            std::swap(rx, ry);
        parent_[ry] = rx;
        size_[rx] += size_[ry];
        undo_.push_back(ry);
        return true;
    }

    std::size_t mark() const { return undo_.size(); }

    void rollback(std::size_t mark) {
        while (undo_.size() > mark) {
            int child = undo_.back();
            undo_.pop_back();
            size_[parent_[child]] -= size_[child];
            parent_[child] = child;
        }
    }

private:
    std::vector<int> parent_, size_;
    std::vector<int> undo_;
};

inline std::optional<Violation> check_partition(const PlaneGraph& g,
                                                const Partition& p,
                                                bool allow_partial) {
    if (static_cast<int>(p.assignment.size()) != g.num_vertices())
        throw Error(ErrorKind::PartialAssignment,
                    "assignment has " + std::to_string(p.assignment.size()) +
                        " entries for " + std::to_string(g.num_vertices()) +
                        " vertices");
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const int pv = p.assignment[v];
        if (pv < 0) {
            if (allow_partial) continue;
            throw Error(ErrorKind::PartialAssignment,
                        "vertex " + std::to_string(v) + " is unassigned");
        }
        if (pv > 1)
            throw Error(ErrorKind::PartialAssignment,
                        "vertex " + std::to_string(v) + " has part index " +
                            std::to_string(pv));
    }

    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const int pv = p.assignment[v];
        if (pv < 0 || !p.specs[pv].bounded()) continue;
        int same = 0;
        for (Vertex u : g.sorted_neighbors(v))
            if (p.assignment[u] == pv) ++same;
        if (same > p.specs[pv].max_degree)
            return Violation{Violation::Type::DegreeExceeded, pv, v};
    }

    UndoableDsu dsu(g.num_vertices());
    for (const auto& [u, v] : g.edges()) {
        const int pu = p.assignment[u];
        if (pu < 0 || pu != p.assignment[v]) continue;
        if (p.specs[pu].kind != PartSpec::Kind::Forest) continue;
        if (!dsu.unite(u, v)) return Violation{Violation::Type::CycleClosed, pu, u};
    }
    return std::nullopt;
}

}  // namespace detail

// Total-assignment check. PartialAssignment is a caller bug, not a Violation.
inline std::optional<Violation> verify(const PlaneGraph& g, const Partition& p) {
    return detail::check_partition(g, p, false);
}

// Same checks restricted to assigned vertices; used on partial partitions.
inline std::optional<Violation> verify_partial(const PlaneGraph& g,
                                               const Partition& p) {
    return detail::check_partition(g, p, true);
}

// Min-degree elimination order (ties: lowest id). The solver assigns
// vertices in this order.
inline std::vector<Vertex> degeneracy_order(const PlaneGraph& g) {
    const int n = g.num_vertices();
    std::vector<int> deg(n);
    std::vector<char> gone(n, 0);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<Vertex> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!gone[v] && (best < 0 || deg[v] < deg[best])) best = v;
        gone[best] = 1;
        order.push_back(best);
        for (Vertex u : g.sorted_neighbors(best))
            if (!gone[u]) --deg[u];
    }
    return order;
}

struct SolveOptions {
    int cap = 26;  // refuse instances with more free vertices than this
};

// Exact backtracking solver. `fixed` (optional) pre-assigns some vertices
// (entries 0/1; -1 = free); the cap applies to the number of free vertices.
// Returns nullopt iff no valid total assignment extends `fixed`.
inline std::optional<Partition> solve(const PlaneGraph& g, const SpecPair& specs,
                                      const SolveOptions& options = {},
                                      const std::vector<std::int8_t>* fixed = nullptr) {
    const int n = g.num_vertices();
    if (fixed && static_cast<int>(fixed->size()) != n)
        throw Error(ErrorKind::PartialAssignment, "fixed assignment has wrong size");
    int free_count = 0;
    for (Vertex v = 0; v < n; ++v)
        if (!fixed || (*fixed)[v] < 0) ++free_count;
    if (free_count > options.cap)
        throw Error(ErrorKind::TooLarge,
                    std::to_string(free_count) + " free vertices exceed the solver cap of " +
                        std::to_string(options.cap));

    std::vector<std::int8_t> part(n, -1);
    std::vector<std::array<int, 2>> cnt(n, {0, 0});
    std::array<detail::UndoableDsu, 2> dsu{detail::UndoableDsu(n),
                                           detail::UndoableDsu(n)};

    // Try to place v in part p on top of the current state; on failure the
    // state is left untouched.
    auto try_assign = [&](Vertex v, int p) -> bool {
        if (specs[p].bounded() && cnt[v][p] > specs[p].max_degree) return false;
        for (Vertex u : g.sorted_neighbors(v))
            if (part[u] == p && specs[p].bounded() &&
                cnt[u][p] + 1 > specs[p].max_degree)
                return false;
        if (specs[p].kind == PartSpec::Kind::Forest) {
            const std::size_t m = dsu[p].mark();
            for (Vertex u : g.sorted_neighbors(v))
                if (part[u] == p && !dsu[p].unite(v, u)) {
                    dsu[p].rollback(m);
                    return false;
                }
        }
        part[v] = static_cast<std::int8_t>(p);
        for (Vertex u : g.sorted_neighbors(v)) ++cnt[u][p];
        return true;
    };
    auto unassign = [&](Vertex v, int p, std::size_t dsu_mark) {
        for (Vertex u : g.sorted_neighbors(v)) --cnt[u][p];
        part[v] = -1;
        if (specs[p].kind == PartSpec::Kind::Forest) dsu[p].rollback(dsu_mark);
    };

    // Seed the fixed vertices; a conflicting seed means no extension exists.
    if (fixed)
        for (Vertex v = 0; v < n; ++v) {
            if ((*fixed)[v] < 0) continue;
            if (!try_assign(v, (*fixed)[v])) return std::nullopt;
        }

    std::vector<Vertex> order;
    for (Vertex v : degeneracy_order(g))
        if (part[v] < 0) order.push_back(v);

    // Swapping part names maps solutions to solutions when both specs agree,
    // so vertex 0's part can be pinned (only without external pins).
    const bool pin_v0 = (specs[0] == specs[1]) && !fixed;

    auto search = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == order.size()) return true;
        const Vertex v = order[idx];
        for (int p = 0; p < 2; ++p) {
            if (pin_v0 && v == 0 && p == 1) continue;
            const std::size_t m =
                specs[p].kind == PartSpec::Kind::Forest ? dsu[p].mark() : 0;
            if (!try_assign(v, p)) continue;
            if (self(self, idx + 1)) return true;
            unassign(v, p, m);
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;

    Partition result{std::move(part), specs};
    return result;
}

struct EnumerationResult {
    unsigned long long count = 0;
    std::vector<Partition> partitions;  // up to the caller's limit
};

// Exhaustive oracle: tries all 2^n assignments and keeps the ones verify
// accepts. Independent of solve by construction.
inline EnumerationResult count_or_enumerate(const PlaneGraph& g, const SpecPair& specs,
                                            std::size_t limit = 0) {
    const int n = g.num_vertices();
    if (n > 20)
        throw Error(ErrorKind::TooLarge,
                    "enumeration oracle is capped at 20 vertices, got " +
                        std::to_string(n));
    EnumerationResult res;
    Partition p{std::vector<std::int8_t>(n, 0), specs};
    const unsigned long long end = 1ull << n;
    for (unsigned long long mask = 0; mask < end; ++mask) {
        for (int v = 0; v < n; ++v)
            p.assignment[v] = static_cast<std::int8_t>((mask >> v) & 1);
        if (!verify(g, p)) {
            ++res.count;
            if (res.partitions.size() < limit) res.partitions.push_back(p);
        }
    }
    return res;
}

}  // namespace fp45
