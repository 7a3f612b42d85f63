#include <dlab/graph.hpp>

#include <algorithm>
#include <deque>

namespace dlab {

GraphError::GraphError(GraphErrorKind kind, const std::string & what) :
    std::invalid_argument(what),
    _kind(kind)
{
}

Graph::Graph(int order, std::vector<Edge> edges) :
    _order(order),
    _edges(std::move(edges)),
    _adjacency(static_cast<std::size_t>(order))
{
    for (auto [u, v] : _edges) {
        _adjacency[u].push_back(v);
        _adjacency[v].push_back(u);
    }
    for (auto & a : _adjacency)
        std::sort(a.begin(), a.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto & a = _adjacency.at(u);
    return std::binary_search(a.begin(), a.end(), v);
}

Graph build_graph(int order, std::span<const Edge> edges)
{
    if (order < 1)
        throw GraphError(GraphErrorKind::empty, "graph order must be at least 1");

    std::vector<Edge> normalised;
    normalised.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw GraphError(GraphErrorKind::out_of_range,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside [0,"
                    + std::to_string(order - 1) + "]");
        if (u == v)
            throw GraphError(GraphErrorKind::self_loop, "self-loop at vertex " + std::to_string(u));
        normalised.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalised.begin(), normalised.end());
    auto dup = std::adjacent_find(normalised.begin(), normalised.end());
    if (dup != normalised.end())
        throw GraphError(GraphErrorKind::duplicate_edge,
            "duplicate edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");

    Graph g(order, std::move(normalised));
    auto reach = bfs_distances(g, 0);
    auto missing = std::find(reach.begin(), reach.end(), -1);
    if (missing != reach.end())
        throw GraphError(GraphErrorKind::disconnected,
            "graph is disconnected: vertex " + std::to_string(missing - reach.begin()) + " unreachable from 0");
    return g;
}

std::vector<int> bfs_distances(const Graph & g, Vertex source)
{
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (! queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (auto w : g.neighbours(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

DistanceMatrix::DistanceMatrix(const Graph & g) :
    _n(g.order()),
    _d(static_cast<std::size_t>(g.order()) * g.order())
{
    for (Vertex s = 0; s < _n; ++s) {
        auto dist = bfs_distances(g, s);
        std::copy(dist.begin(), dist.end(), _d.begin() + static_cast<std::ptrdiff_t>(s) * _n);
    }
    _diameter = _d.empty() ? 0 : *std::max_element(_d.begin(), _d.end());
}

DistanceMatrix::DistanceMatrix(int n, std::vector<int> distances) :
    _n(n),
    _d(std::move(distances))
{
    if (_d.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("distance matrix must have n*n entries");
    _diameter = _d.empty() ? 0 : *std::max_element(_d.begin(), _d.end());
}

int DistanceMatrix::eccentricity(Vertex v) const
{
    auto r = row(v);
    return *std::max_element(r.begin(), r.end());
}

DistanceMatrix all_pairs_distances(const Graph & g)
{
    return DistanceMatrix(g);
}

bool distance_invariants_hold(const Graph & g, const DistanceMatrix & d)
{
    const int n = g.order();
    if (d.order() != n)
        return false;
    for (Vertex i = 0; i < n; ++i) {
        if (d(i, i) != 0)
            return false;
        for (Vertex j = 0; j < n; ++j) {
            if (d(i, j) != d(j, i))
                return false;
            if ((d(i, j) == 1) != g.adjacent(i, j))
                return false;
            for (Vertex k = 0; k < n; ++k)
                if (d(i, k) > d(i, j) + d(j, k))
                    return false;
        }
    }
    return true;
}

}
