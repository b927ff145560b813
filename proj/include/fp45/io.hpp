#pragma once

// Serialization of plane graphs.
//
// Text format "rotgraph v1": one or more records, '#' starts a comment.
//   n m
//   v: u1 u2 ...     (n rotation lines, any vertex order, each vertex once)
// or
//   u v              (m edge lines; the embedding is then computed)
// A record must use one layout or the other, not a mix.
//
// Binary format "planar_code": the classic header ">>planar_code<<" followed
// by records; each record is a vertex-count byte n (1..255), then for each
// vertex its 1-based neighbors in rotation order terminated by a 0 byte.

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fp45/errors.hpp"
#include "fp45/planegraph.hpp"

namespace fp45 {

// ---------------------------------------------------------------- rotgraph

inline void write_rotgraph(std::ostream& out, const PlaneGraph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        out << v << ':';
        for (Vertex u : g.neighbors(v)) out << ' ' << u;
        out << '\n';
    }
}

namespace detail {

// Line reader that tracks the byte offset of the line it just returned.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-blank, non-comment line (with comments/trailing space removed);
    // false at end of input.
    bool next(std::string& line) {
        std::string raw;
        while (std::getline(in_, raw)) {
            line_offset_ = consumed_;
            consumed_ += raw.size() + 1;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t' ||
                                    raw.back() == '\r'))
                raw.pop_back();
            std::size_t i = 0;
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
            if (i == raw.size()) continue;
            line = raw.substr(i);
            return true;
        }
        return false;
    }

    std::size_t line_offset() const { return line_offset_; }

private:
    std::istream& in_;
    std::size_t consumed_ = 0;
    std::size_t line_offset_ = 0;
};

inline std::vector<long> parse_ints(const std::string& s, std::size_t offset) {
    std::istringstream iss(s);
    std::vector<long> out;
    long x;
    while (iss >> x) out.push_back(x);
    if (!iss.eof())
        throw Error(ErrorKind::ParseError, "non-numeric token in '" + s + "'", offset);
    return out;
}

}  // namespace detail

// Reads every record in the stream.
inline std::vector<PlaneGraph> read_rotgraph(std::istream& in) {
    detail::LineReader reader(in);
    std::vector<PlaneGraph> graphs;
    std::string line;
    while (reader.next(line)) {
        const std::size_t rec_off = reader.line_offset();
        auto header = detail::parse_ints(line, rec_off);
        if (header.size() != 2 || header[0] < 0 || header[1] < 0)
            throw Error(ErrorKind::ParseError, "expected record header 'n m'", rec_off);
        const int n = static_cast<int>(header[0]);
        const int m = static_cast<int>(header[1]);

        // Peek at the first body line to pick the layout.
        bool rotation_layout = false;
        std::vector<std::pair<std::string, std::size_t>> body;
        const int body_lines = (n == 0) ? 0 : n;  // rotation layout line count
        if (n > 0 || m > 0) {
            if (!reader.next(line))
                throw Error(ErrorKind::ParseError, "record truncated", rec_off);
            rotation_layout = line.find(':') != std::string::npos;
            body.emplace_back(line, reader.line_offset());
        }
        const int want = rotation_layout ? body_lines : m;
        while (static_cast<int>(body.size()) < want) {
            if (!reader.next(line))
                throw Error(ErrorKind::ParseError, "record truncated", rec_off);
            body.emplace_back(line, reader.line_offset());
        }

        if (rotation_layout) {
            std::vector<std::vector<int>> rotation(n);
            std::vector<char> seen(n, 0);
            for (auto& [text, off] : body) {
                auto colon = text.find(':');
                if (colon == std::string::npos)
                    throw Error(ErrorKind::ParseError,
                                "mixed edge/rotation lines in one record", off);
                auto head = detail::parse_ints(text.substr(0, colon), off);
                if (head.size() != 1 || head[0] < 0 || head[0] >= n)
                    throw Error(ErrorKind::ParseError, "bad rotation line vertex", off);
                const int v = static_cast<int>(head[0]);
                if (seen[v])
                    throw Error(ErrorKind::ParseError,
                                "vertex " + std::to_string(v) + " listed twice", off);
                seen[v] = 1;
                auto nbrs = detail::parse_ints(text.substr(colon + 1), off);
                for (long u : nbrs)
                    if (u < 0 || u >= n)
                        throw Error(ErrorKind::ParseError, "neighbor out of range", off);
                rotation[v].assign(nbrs.begin(), nbrs.end());
            }
            PlaneGraph g = PlaneGraph::from_rotation(std::move(rotation));
            if (g.num_edges() != m)
                throw Error(ErrorKind::ParseError,
                            "header claims " + std::to_string(m) + " edges, rotation has " +
                                std::to_string(g.num_edges()),
                            rec_off);
            graphs.push_back(std::move(g));
        } else {
            std::vector<std::pair<int, int>> edges;
            for (auto& [text, off] : body) {
                auto nums = detail::parse_ints(text, off);
                if (nums.size() != 2)
                    throw Error(ErrorKind::ParseError, "expected edge line 'u v'", off);
                if (nums[0] < 0 || nums[0] >= n || nums[1] < 0 || nums[1] >= n)
                    throw Error(ErrorKind::ParseError, "edge endpoint out of range", off);
                edges.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
            }
            graphs.push_back(PlaneGraph::from_edges(n, std::move(edges)));
        }
    }
    return graphs;
}

// ------------------------------------------------------------- planar_code

inline constexpr const char* kPlanarCodeHeader = ">>planar_code<<";

inline void write_planar_code(std::ostream& out, const std::vector<PlaneGraph>& graphs,
                              bool with_header = true) {
    if (with_header) out.write(kPlanarCodeHeader, 15);
    for (const auto& g : graphs) {
        if (g.num_vertices() < 1 || g.num_vertices() > 255)
            throw Error(ErrorKind::TooLarge,
                        "planar_code records hold 1..255 vertices, got " +
                            std::to_string(g.num_vertices()));
        out.put(static_cast<char>(g.num_vertices()));
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            for (Vertex u : g.neighbors(v)) out.put(static_cast<char>(u + 1));
            out.put('\0');
        }
    }
}

inline std::vector<PlaneGraph> read_planar_code(std::istream& in) {
    std::size_t offset = 0;
    auto get = [&](const char* what) -> int {
        int c = in.get();
        if (c == std::istream::traits_type::eof())
            throw Error(ErrorKind::ParseError,
                        std::string("unexpected end of input (") + what + ")", offset);
        ++offset;
        return c;
    };

    // Optional header.
    {
        int first = in.peek();
        if (first == '>') {
            char header[15];
            in.read(header, 15);
            if (in.gcount() != 15 || std::string(header, 15) != kPlanarCodeHeader)
                throw Error(ErrorKind::ParseError, "malformed planar_code header", 0);
            offset = 15;
        }
    }

    std::vector<PlaneGraph> graphs;
    while (in.peek() != std::istream::traits_type::eof()) {
        const std::size_t rec_off = offset;
        const int n = get("vertex count");
        if (n == 0)
            throw Error(ErrorKind::ParseError, "record with 0 vertices", rec_off);
        std::vector<std::vector<int>> rotation(n);
        for (int v = 0; v < n; ++v) {
            for (;;) {
                const std::size_t byte_off = offset;
                int u = get("neighbor byte");
                if (u == 0) break;
                if (u > n)
                    throw Error(ErrorKind::ParseError,
                                "neighbor " + std::to_string(u) + " exceeds vertex count " +
                                    std::to_string(n),
                                byte_off);
                rotation[v].push_back(u - 1);
            }
        }
        try {
            graphs.push_back(PlaneGraph::from_rotation(std::move(rotation)));
        } catch (const Error& e) {
            throw Error(ErrorKind::ParseError,
                        std::string("record does not encode a plane graph: ") + e.what(),
                        rec_off);
        }
    }
    return graphs;
}

}  // namespace fp45
