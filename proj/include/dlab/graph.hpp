#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dlab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

enum class GraphErrorKind {
    empty,
    out_of_range,
    self_loop,
    duplicate_edge,
    disconnected,
    malformed,
};

class GraphError : public std::invalid_argument {
public:
    GraphError(GraphErrorKind kind, const std::string & what);

    GraphErrorKind kind() const noexcept { return _kind; }

private:
    GraphErrorKind _kind;
};

// Finite simple undirected connected graph on vertices 0..order-1.
// Edges are stored normalised (u < v) and sorted lexicographically.
class Graph {
public:
    int order() const noexcept { return _order; }
    std::size_t size() const noexcept { return _edges.size(); }

    const std::vector<Edge> & edges() const noexcept { return _edges; }
    std::span<const Vertex> neighbours(Vertex v) const { return _adjacency.at(v); }
    int degree(Vertex v) const { return static_cast<int>(_adjacency.at(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    friend bool operator==(const Graph & a, const Graph & b)
    {
        return a._order == b._order && a._edges == b._edges;
    }

    friend Graph build_graph(int order, std::span<const Edge> edges);

private:
    Graph(int order, std::vector<Edge> edges);

    int _order;
    std::vector<Edge> _edges;
    std::vector<std::vector<Vertex>> _adjacency;
};

// Validates and builds. Throws GraphError naming which invariant failed.
Graph build_graph(int order, std::span<const Edge> edges);

inline Graph build_graph(int order, std::initializer_list<Edge> edges)
{
    return build_graph(order, std::span<const Edge>(edges.begin(), edges.size()));
}

// Hop distances from one source.
std::vector<int> bfs_distances(const Graph & g, Vertex source);

class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph & g);
    // Row-major n*n hop counts, taken as given.
    DistanceMatrix(int n, std::vector<int> distances);

    int order() const noexcept { return _n; }
    int operator()(Vertex u, Vertex v) const { return _d[static_cast<std::size_t>(u) * _n + v]; }
    std::span<const int> row(Vertex u) const
    {
        return {_d.data() + static_cast<std::size_t>(u) * _n, static_cast<std::size_t>(_n)};
    }
    int eccentricity(Vertex v) const;
    int diameter() const noexcept { return _diameter; }

private:
    int _n;
    std::vector<int> _d;
    int _diameter = 0;
};

DistanceMatrix all_pairs_distances(const Graph & g);

// True iff every DistanceMatrix invariant holds against the graph it was computed from.
bool distance_invariants_hold(const Graph & g, const DistanceMatrix & d);

}
