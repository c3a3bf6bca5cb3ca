#pragma once

#include <optional>
#include <string>
#include <vector>

#include "packlab/graph.hpp"

namespace packlab {

/// Outcome of testing ρ_k(G) = ρ_{2k}(G) through the simplicial structure of G^k.
struct RecognitionReport {
    bool equal = false;
    unsigned k = 1;
    /// Lowest-id (by default) representative of every twin class of G^k.
    VertexSet transversal;
    /// Closed neighborhoods in G^k of the transversal vertices; filled when equal.
    std::vector<VertexSet> partition_witness;
    /// Why the neighborhoods fail to partition V(G); empty when equal.
    std::string violation;
    /// ρ_k = ρ_{2k} = |transversal| when equal.
    std::optional<std::size_t> common_value;
};

/// Polynomial test of ρ_k(G) = ρ_{2k}(G). It builds H = G^k, picks one vertex
/// from each class of simplicial closed twins of H, and accepts iff the closed
/// H-neighborhoods of those vertices partition V(G).
RecognitionReport recognize_packing_equality(const Graph& g, unsigned k, TieBreak tie_break = TieBreak::LowestId);

/// ν_k(G) = ν_{2k}(G), tested on the line graph. Vertex ids inside the report
/// are line-graph ids; `edge_map` resolves them to edges of `g`.
struct MatchingRecognitionReport {
    RecognitionReport packing;
    std::vector<Edge> edge_map;

    std::vector<Edge> transversal_edges() const;
    std::vector<std::vector<Edge>> partition_edges() const;
};
MatchingRecognitionReport recognize_matching_equality(const Graph& g, unsigned k);

struct GapRegimeReport {
    bool equal = false;
    /// Both packing numbers equal 1 when `equal`.
    std::optional<std::size_t> value;
    unsigned k1 = 1;
    unsigned k2 = 3;
};

/// For connected g and k2 > 2·k1: ρ_{k1}(g) = ρ_{k2}(g) iff both are 1, i.e.
/// iff diam(g) <= k1. InputError on a disconnected (or empty) graph or when k2 <= 2·k1.
GapRegimeReport check_gap_regime(const Graph& g, unsigned k1, unsigned k2);

}  // namespace packlab
