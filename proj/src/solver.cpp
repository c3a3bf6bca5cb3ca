#include "packlab/solver.hpp"

#include <algorithm>
#include <string>

#include "packlab/errors.hpp"

namespace packlab {

namespace {

/// Number of cliques in a greedy clique partition of `p`, stopping early
/// once the count exceeds `limit`. Each clique holds at most one vertex of
/// an independent set, so the count bounds α(G[p]).
std::size_t greedy_clique_cover(const Graph& g, const Bitset& p, std::size_t limit, Bitset& rest, Bitset& cand) {
    rest = p;
    std::size_t cliques = 0;
    for (std::size_t v = rest.find_first(); v != Bitset::npos; v = rest.find_first()) {
        if (++cliques > limit) return cliques;
        rest.reset(v);
        cand = rest;
        cand &= g.neighbor_bits(static_cast<Vertex>(v));
        for (std::size_t w = cand.find_first(); w != Bitset::npos; w = cand.find_next(w + 1)) {
            rest.reset(w);
            cand &= g.neighbor_bits(static_cast<Vertex>(w));
        }
    }
    return cliques;
}

class MisSearch {
public:
    MisSearch(const Graph& g, std::uint64_t budget)
        : g_(g), budget_(budget), levels_(g.vertex_count() + 2, Bitset(g.vertex_count())),
          scratch_rest_(g.vertex_count()), scratch_cand_(g.vertex_count()) {}

    PackingCertificate run() {
        levels_[0].set_all();
        expand(0);
        PackingCertificate cert;
        cert.vertices = best_;
        cert.optimal = true;
        cert.nodes = nodes_;
        return cert;
    }

private:
    void expand(std::size_t depth) {
        if (++nodes_ > budget_)
            throw BudgetError("search-node budget of " + std::to_string(budget_) + " exhausted", best_.size());
        Bitset& p = levels_[depth];
        const std::size_t pushed_before = current_.size();

        // Candidates without neighbors among the candidates always join; the
        // best branching vertex is the one of maximum remaining degree.
        std::size_t pick = Bitset::npos, pick_degree = 0;
        p.for_each([&](std::size_t v) {
            const std::size_t d = g_.neighbor_bits(static_cast<Vertex>(v)).intersection_count(p);
            if (d == 0) {
                current_.push_back(static_cast<Vertex>(v));
            } else if (d > pick_degree) {
                pick = v;
                pick_degree = d;
            }
        });
        for (std::size_t i = pushed_before; i < current_.size(); ++i) p.reset(current_[i]);

        if (pick == Bitset::npos) {
            if (current_.size() > best_.size()) {
                best_ = current_;
                std::sort(best_.begin(), best_.end());
            }
            current_.resize(pushed_before);
            return;
        }

        const std::size_t room = best_.size() >= current_.size() ? best_.size() - current_.size() : 0;
        if (p.count() <= room || greedy_clique_cover(g_, p, room, scratch_rest_, scratch_cand_) <= room) {
            current_.resize(pushed_before);
            return;
        }

        // Inclusion first, so ties resolve toward the branching vertex.
        Bitset& child = levels_[depth + 1];
        child = p;
        child -= g_.neighbor_bits(static_cast<Vertex>(pick));
        child.reset(pick);
        current_.push_back(static_cast<Vertex>(pick));
        expand(depth + 1);
        current_.pop_back();

        child = p;
        child.reset(pick);
        expand(depth + 1);

        current_.resize(pushed_before);
    }

    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Bitset> levels_;
    Bitset scratch_rest_, scratch_cand_;
    VertexSet current_;
    VertexSet best_;
};

class MaxPackingEnumerator {
public:
    MaxPackingEnumerator(const Graph& g, std::size_t target, std::size_t cap, std::uint64_t budget)
        : g_(g), target_(target), cap_(cap), budget_(budget), scratch_rest_(g.vertex_count()),
          scratch_cand_(g.vertex_count()) {}

    PackingEnumeration run() {
        Bitset all(g_.vertex_count());
        all.set_all();
        out_.cardinality = target_;
        if (target_ == 0) {
            out_.packings.push_back({});
        } else if (cap_ == 0) {
            out_.truncated = true;
        } else {
            expand(all);
        }
        return std::move(out_);
    }

private:
    // Returns false once enumeration must stop (cap reached).
    bool expand(Bitset cand) {
        if (++nodes_ > budget_)
            throw BudgetError("search-node budget of " + std::to_string(budget_) + " exhausted", target_);
        if (current_.size() == target_) {
            if (out_.packings.size() == cap_) {
                out_.truncated = true;
                return false;
            }
            out_.packings.push_back(current_);
            return true;
        }
        const std::size_t need = target_ - current_.size();
        while (cand.any()) {
            if (cand.count() < need) return true;
            // A greedy clique cover smaller than `need` rules out every extension.
            if (greedy_clique_cover(g_, cand, need - 1, scratch_rest_, scratch_cand_) < need) return true;
            const auto v = static_cast<Vertex>(cand.find_first());
            cand.reset(v);
            Bitset child = cand;
            child -= g_.neighbor_bits(v);
            current_.push_back(v);
            const bool go_on = expand(std::move(child));
            current_.pop_back();
            if (!go_on) return false;
        }
        return true;
    }

    const Graph& g_;
    std::size_t target_;
    std::size_t cap_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    Bitset scratch_rest_, scratch_cand_;
    VertexSet current_;
    PackingEnumeration out_;
};

void require_k(unsigned k) {
    if (k == 0) throw InputError("packing distance k must be at least 1");
}

}  // namespace

PackingCertificate maximum_independent_set(const Graph& g, std::uint64_t budget) {
    return MisSearch(g, budget).run();
}

PackingCertificate max_k_packing(const Graph& g, unsigned k, std::uint64_t budget) {
    require_k(k);
    PackingCertificate cert = maximum_independent_set(graph_power(g, k), budget);
    cert.k = k;
    return cert;
}

MatchingCertificate max_k_matching(const Graph& g, unsigned k, std::uint64_t budget) {
    require_k(k);
    const LineGraph lg = line_graph(g);
    const PackingCertificate p = max_k_packing(lg.graph, k, budget);
    MatchingCertificate cert;
    cert.k = k;
    cert.optimal = p.optimal;
    cert.nodes = p.nodes;
    for (Vertex e : p.vertices) cert.edges.push_back(lg.edge_map[e]);
    return cert;
}

PackingEnumeration enumerate_maximum_k_packings(const Graph& g, unsigned k, std::size_t cap, std::uint64_t budget) {
    require_k(k);
    const Graph h = graph_power(g, k);
    const std::size_t rho = maximum_independent_set(h, budget).cardinality();
    return MaxPackingEnumerator(h, rho, cap, budget).run();
}

bool is_k_packing(const Graph& g, unsigned k, std::span<const Vertex> s) {
    require_k(k);
    VertexSet set(s.begin(), s.end());
    for (Vertex v : set)
        if (v >= g.vertex_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (Vertex v : set) {
        const auto d = bfs_distances(g, v);
        for (Vertex w : set)
            if (w != v && d[w] && *d[w] <= k) return false;
    }
    return true;
}

bool is_k_matching(const Graph& g, unsigned k, std::span<const Edge> edges) {
    const LineGraph lg = line_graph(g);
    VertexSet ids;
    for (Edge e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        auto it = std::lower_bound(lg.edge_map.begin(), lg.edge_map.end(), e);
        if (it == lg.edge_map.end() || *it != e)
            throw InputError("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge of the graph");
        ids.push_back(static_cast<Vertex>(it - lg.edge_map.begin()));
    }
    return is_k_packing(lg.graph, k, ids);
}

}  // namespace packlab
