#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "packlab/bitset.hpp"

namespace packlab {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;  // always sorted ascending

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Keeps both sorted adjacency lists and adjacency bitsets; the lists serve
/// traversal, the bitsets serve the clique and neighborhood tests.
class Graph {
public:
    Graph() = default;

    /// Validating constructor: rejects loops, duplicates and out-of-range endpoints.
    Graph(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Edges in lexicographic order.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const VertexSet& neighbors(Vertex u) const { return adjacency_[u]; }
    const Bitset& neighbor_bits(Vertex u) const { return rows_[u]; }
    std::size_t degree(Vertex u) const { return adjacency_[u].size(); }
    bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }

    /// N[u] as a bitset.
    Bitset closed_neighborhood(Vertex u) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

private:
    std::vector<VertexSet> adjacency_;
    std::vector<Bitset> rows_;
    std::vector<Edge> edges_;
};

/// Builds a graph from unordered pairs. Throws InputError on loops,
/// duplicate edges (in either orientation) and out-of-range endpoints.
Graph build_graph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);
Graph build_graph(std::size_t vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges);

/// BFS distance; std::nullopt means the vertices lie in different components.
using Distance = std::optional<std::uint32_t>;

/// Distances from one source, or from every vertex.
class DistanceTable {
public:
    DistanceTable(std::optional<Vertex> source, std::size_t vertex_count, std::vector<std::vector<Distance>> rows)
        : source_(source), vertex_count_(vertex_count), rows_(std::move(rows)) {}

    /// Source vertex, or nullopt for an all-pairs table.
    std::optional<Vertex> source() const noexcept { return source_; }
    std::size_t vertex_count() const noexcept { return vertex_count_; }

    /// Distance between `from` and `to`; for a single-source table `from` must be the source.
    Distance at(Vertex from, Vertex to) const;
    /// Row of distances from the source of a single-source table.
    const std::vector<Distance>& row() const { return rows_.front(); }

private:
    std::optional<Vertex> source_;
    std::size_t vertex_count_;
    std::vector<std::vector<Distance>> rows_;
};

std::vector<Distance> bfs_distances(const Graph& g, Vertex source);
/// BFS from a set of sources at once (distance to the nearest one).
std::vector<Distance> bfs_distances(const Graph& g, std::span<const Vertex> sources);
DistanceTable shortest_path_distances(const Graph& g, std::optional<Vertex> source = std::nullopt);

bool is_connected(const Graph& g);
/// Largest finite distance; nullopt for a disconnected graph.
Distance diameter(const Graph& g);

/// G^k: u ~ v iff 0 < d(u, v) <= k. Vertices in different components stay non-adjacent.
Graph graph_power(const Graph& g, unsigned k);

struct LineGraph {
    Graph graph;
    /// Line-graph vertex i corresponds to edge_map[i] of the source graph (lexicographic order).
    std::vector<Edge> edge_map;
};
LineGraph line_graph(const Graph& g);

/// Vertices whose closed neighborhood is a clique (isolated vertices included).
VertexSet simplicial_vertices(const Graph& g);

/// Partition of the simplicial vertices into closed-twin classes.
struct TwinClassPartition {
    /// Each class sorted; classes sorted by their smallest member.
    std::vector<VertexSet> classes;
};
TwinClassPartition twin_classes(const Graph& g);

enum class TieBreak { LowestId, HighestId };
/// One representative per class.
VertexSet transversal(const TwinClassPartition& p, TieBreak tie_break = TieBreak::LowestId);

/// Erdős–Rényi G(n, p) sample, identical for identical seeds on every platform.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// Subgraph induced by `vertices`, relabelled 0.. in the order given.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

bool is_independent(const Graph& g, std::span<const Vertex> vertices);
bool is_clique(const Graph& g, std::span<const Vertex> vertices);

}  // namespace packlab
