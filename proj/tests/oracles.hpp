#pragma once

// Test-only brute-force oracles. They share nothing with the library's
// search code: distances come from Floyd-Warshall, packings from plain
// subset enumeration.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "packlab/graph.hpp"

namespace oracle {

using packlab::Edge;
using packlab::Graph;
using packlab::Vertex;

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline std::vector<std::vector<int>> floyd(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][m] + d[m][j] < d[i][j]) d[i][j] = d[i][m] + d[m][j];
    return d;
}

/// Distance between two distinct edges in the line graph: 1 + the smallest
/// vertex distance between their endpoints.
inline int edge_distance(const std::vector<std::vector<int>>& d, Edge a, Edge b) {
    if (a == b) return 0;
    const int m = std::min({d[a.u][b.u], d[a.u][b.v], d[a.v][b.u], d[a.v][b.v]});
    return m >= kInf ? kInf : m + 1;
}

/// All subsets (as bitmasks over `count` items) whose members are pairwise "far".
template <typename Far>
std::vector<std::uint32_t> far_subsets(std::size_t count, Far far) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << count); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < count && ok; ++i) {
            if (!((mask >> i) & 1U)) continue;
            for (std::size_t j = i + 1; j < count && ok; ++j)
                if ((mask >> j) & 1U) ok = far(i, j);
        }
        if (ok) out.push_back(mask);
    }
    return out;
}

inline std::vector<std::vector<Vertex>> maximum_packings(const Graph& g, unsigned k) {
    const auto d = floyd(g);
    const auto sets = far_subsets(g.vertex_count(), [&](std::size_t i, std::size_t j) { return d[i][j] > static_cast<int>(k); });
    int best = 0;
    for (auto m : sets) best = std::max(best, std::popcount(m));
    std::vector<std::vector<Vertex>> out;
    for (auto m : sets) {
        if (std::popcount(m) != best) continue;
        std::vector<Vertex> s;
        for (Vertex i = 0; i < g.vertex_count(); ++i)
            if ((m >> i) & 1U) s.push_back(i);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t rho(const Graph& g, unsigned k) { return maximum_packings(g, k).front().size(); }

inline std::size_t nu(const Graph& g, unsigned k) {
    const auto d = floyd(g);
    const auto& es = g.edges();
    const auto sets = far_subsets(es.size(), [&](std::size_t i, std::size_t j) {
        return edge_distance(d, es[i], es[j]) > static_cast<int>(k);
    });
    int best = 0;
    for (auto m : sets) best = std::max(best, std::popcount(m));
    return static_cast<std::size_t>(best);
}

/// Every labelled graph on n vertices for bit pattern `mask` over the pairs (i<j) in lexicographic order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<std::pair<Vertex, Vertex>> es;
    std::size_t bit = 0;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1U) es.emplace_back(i, j);
    return packlab::build_graph(n, es);
}

}  // namespace oracle
