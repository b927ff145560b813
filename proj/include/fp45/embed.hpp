#pragma once

// Planar embedding of an abstract graph: returns a rotation system (cyclic
// neighbor order per vertex) realizing a genus-0 drawing, or throws NonPlanar.
// Backed by Boost's Boyer-Myrvold implementation; the result is re-validated
// downstream by the face trace + Euler check in PlaneGraph.

#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>

#include "fp45/errors.hpp"

namespace fp45 {

inline std::vector<std::vector<int>> embed_planar(
    int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw Error(ErrorKind::ParseError, "negative vertex count");
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS,
                                        boost::undirectedS,
                                        boost::property<boost::vertex_index_t, int>,
                                        boost::property<boost::edge_index_t, int>>;
    Graph g(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::ParseError, "edge endpoint out of range");
        boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), g);
    }
    int ei = 0;
    for (auto [it, end] = boost::edges(g); it != end; ++it)
        boost::put(boost::edge_index, g, *it, ei++);

    using EmbeddingStorage =
        std::vector<std::vector<boost::graph_traits<Graph>::edge_descriptor>>;
    EmbeddingStorage storage(boost::num_vertices(g));
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = g,
        boost::boyer_myrvold_params::embedding = storage.data());
    if (!planar)
        throw Error(ErrorKind::NonPlanar, "graph admits no planar embedding");

    std::vector<std::vector<int>> rotation(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        rotation[v].reserve(storage[v].size());
        for (const auto& e : storage[v]) {
            int a = static_cast<int>(boost::source(e, g));
            int b = static_cast<int>(boost::target(e, g));
            rotation[v].push_back(a == v ? b : a);
        }
    }
    return rotation;
}

}  // namespace fp45
