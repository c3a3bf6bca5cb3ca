#include "packlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <string>

#include "packlab/errors.hpp"

namespace packlab {

namespace {

std::string edge_text(Vertex u, Vertex v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

}  // namespace

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges)
    : adjacency_(vertex_count), rows_(vertex_count, Bitset(vertex_count)) {
    edges_.reserve(edges.size());
    for (Edge e : edges) {
        if (e.u >= vertex_count || e.v >= vertex_count)
            throw InputError("edge " + edge_text(e.u, e.v) + " has an endpoint outside 0.." +
                             std::to_string(vertex_count) + "-1");
        if (e.u == e.v) throw InputError("loop edge " + edge_text(e.u, e.v));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (rows_[e.u].test(e.v)) throw InputError("duplicate edge " + edge_text(e.u, e.v));
        rows_[e.u].set(e.v);
        rows_[e.v].set(e.u);
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t u = 0; u < vertex_count; ++u) adjacency_[u] = rows_[u].to_vector();
}

Bitset Graph::closed_neighborhood(Vertex u) const {
    Bitset b = rows_[u];
    b.set(u);
    return b;
}

Graph build_graph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges) es.push_back({u, v});
    return Graph(vertex_count, es);
}

Graph build_graph(std::size_t vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    return build_graph(vertex_count, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

Distance DistanceTable::at(Vertex from, Vertex to) const {
    if (source_) {
        if (from != *source_) throw InputError("single-source distance table queried from a different vertex");
        return rows_.front().at(to);
    }
    return rows_.at(from).at(to);
}

std::vector<Distance> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
    std::vector<Distance> dist(g.vertex_count());
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
        if (s >= g.vertex_count()) throw InputError("BFS source " + std::to_string(s) + " out of range");
        if (!dist[s]) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (!dist[w]) {
                dist[w] = *dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
    return bfs_distances(g, std::span<const Vertex>(&source, 1));
}

DistanceTable shortest_path_distances(const Graph& g, std::optional<Vertex> source) {
    std::vector<std::vector<Distance>> rows;
    if (source) {
        rows.push_back(bfs_distances(g, *source));
    } else {
        rows.reserve(g.vertex_count());
        for (Vertex u = 0; u < g.vertex_count(); ++u) rows.push_back(bfs_distances(g, u));
    }
    return DistanceTable(source, g.vertex_count(), std::move(rows));
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    auto d = bfs_distances(g, Vertex{0});
    return std::all_of(d.begin(), d.end(), [](const Distance& x) { return x.has_value(); });
}

Distance diameter(const Graph& g) {
    std::uint32_t best = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (const Distance& d : bfs_distances(g, u)) {
            if (!d) return std::nullopt;
            best = std::max(best, *d);
        }
    }
    return best;
}

Graph graph_power(const Graph& g, unsigned k) {
    if (k == 0) throw InputError("graph power exponent must be at least 1");
    if (k == 1) return g;
    const std::size_t n = g.vertex_count();
    std::vector<Edge> edges;
    std::vector<std::uint32_t> depth(n);
    std::vector<Vertex> frontier, next;
    Bitset seen(n);
    for (Vertex s = 0; s < n; ++s) {
        // Truncated BFS from s up to depth k.
        seen.clear();
        seen.set(s);
        frontier.assign(1, s);
        for (unsigned level = 1; level <= k && !frontier.empty(); ++level) {
            next.clear();
            for (Vertex u : frontier)
                for (Vertex w : g.neighbors(u))
                    if (!seen.test(w)) {
                        seen.set(w);
                        next.push_back(w);
                        if (s < w) edges.push_back({s, w});
                    }
            frontier.swap(next);
        }
    }
    return Graph(n, edges);
}

LineGraph line_graph(const Graph& g) {
    LineGraph out;
    out.edge_map = g.edges();
    const std::size_t m = out.edge_map.size();
    // Incidence lists: for each vertex, the line-graph ids of incident edges.
    std::vector<std::vector<Vertex>> incident(g.vertex_count());
    for (Vertex i = 0; i < m; ++i) {
        incident[out.edge_map[i].u].push_back(i);
        incident[out.edge_map[i].v].push_back(i);
    }
    std::vector<Edge> ledges;
    for (const auto& inc : incident)
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b) ledges.push_back({inc[a], inc[b]});
    // Two distinct edges of a simple graph share at most one endpoint, so no duplicates arise.
    out.graph = Graph(m, ledges);
    return out;
}

VertexSet simplicial_vertices(const Graph& g) {
    VertexSet out;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        const auto& nb = g.neighbors(u);
        bool clique = true;
        for (std::size_t a = 0; a < nb.size() && clique; ++a) {
            // Every other neighbor must lie in N(nb[a]).
            Bitset need = g.neighbor_bits(u);
            need.reset(nb[a]);
            clique = need.is_subset_of(g.neighbor_bits(nb[a]));
        }
        if (clique) out.push_back(u);
    }
    return out;
}

TwinClassPartition twin_classes(const Graph& g) {
    const VertexSet simp = simplicial_vertices(g);
    std::vector<std::pair<Bitset, Vertex>> sig;
    sig.reserve(simp.size());
    for (Vertex u : simp) sig.emplace_back(g.closed_neighborhood(u), u);
    std::sort(sig.begin(), sig.end());

    TwinClassPartition p;
    for (std::size_t i = 0; i < sig.size();) {
        std::size_t j = i;
        VertexSet cls;
        while (j < sig.size() && sig[j].first == sig[i].first) cls.push_back(sig[j++].second);
        std::sort(cls.begin(), cls.end());
        p.classes.push_back(std::move(cls));
        i = j;
    }
    std::sort(p.classes.begin(), p.classes.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    return p;
}

VertexSet transversal(const TwinClassPartition& p, TieBreak tie_break) {
    VertexSet out;
    out.reserve(p.classes.size());
    for (const auto& cls : p.classes) out.push_back(tie_break == TieBreak::LowestId ? cls.front() : cls.back());
    std::sort(out.begin(), out.end());
    return out;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
    // mt19937_64 output is fully specified by the standard; the distributions are not,
    // so the uniform draw is done by hand.
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (r < p) edges.push_back({u, v});
        }
    return Graph(n, edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<std::int64_t> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local.at(vertices[i]) = static_cast<std::int64_t>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (local[e.u] >= 0 && local[e.v] >= 0)
            edges.push_back({static_cast<Vertex>(local[e.u]), static_cast<Vertex>(local[e.v])});
    return Graph(vertices.size(), edges);
}

bool is_independent(const Graph& g, std::span<const Vertex> vertices) {
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (g.adjacent(vertices[a], vertices[b])) return false;
    return true;
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (vertices[a] == vertices[b] || !g.adjacent(vertices[a], vertices[b])) return false;
    return true;
}

}  // namespace packlab
