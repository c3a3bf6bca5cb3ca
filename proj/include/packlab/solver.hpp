#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "packlab/graph.hpp"

namespace packlab {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct PackingCertificate {
    unsigned k = 1;
    VertexSet vertices;
    bool optimal = false;
    /// Search nodes spent producing the certificate.
    std::uint64_t nodes = 0;

    std::size_t cardinality() const noexcept { return vertices.size(); }
};

struct MatchingCertificate {
    unsigned k = 1;
    std::vector<Edge> edges;
    bool optimal = false;
    std::uint64_t nodes = 0;

    std::size_t cardinality() const noexcept { return edges.size(); }
};

/// Maximum independent set by branch and bound with a greedy clique-cover bound.
///
/// Branches on the candidate of highest remaining degree (lowest id on ties),
/// exploring the inclusion branch first, and reports the first optimum found in
/// that order. The result depends only on the graph. Throws BudgetError once
/// more than `budget` search nodes have been expanded.
PackingCertificate maximum_independent_set(const Graph& g, std::uint64_t budget = kDefaultNodeBudget);

/// ρ_k(G) with a witness: a maximum independent set of G^k.
PackingCertificate max_k_packing(const Graph& g, unsigned k, std::uint64_t budget = kDefaultNodeBudget);

/// ν_k(G): a maximum k-packing of L(G), reported as edges of `g`.
MatchingCertificate max_k_matching(const Graph& g, unsigned k, std::uint64_t budget = kDefaultNodeBudget);

struct PackingEnumeration {
    std::size_t cardinality = 0;
    /// Lexicographically sorted maximum k-packings.
    std::vector<VertexSet> packings;
    bool truncated = false;
};

/// All maximum k-packings, stopping after `cap` of them (truncated is then set).
PackingEnumeration enumerate_maximum_k_packings(const Graph& g, unsigned k, std::size_t cap,
                                                std::uint64_t budget = kDefaultNodeBudget);

/// Pairwise distances all exceed k. Throws InputError for out-of-range vertices.
bool is_k_packing(const Graph& g, unsigned k, std::span<const Vertex> s);

/// Every two edges are at line-graph distance more than k.
bool is_k_matching(const Graph& g, unsigned k, std::span<const Edge> edges);

}  // namespace packlab
