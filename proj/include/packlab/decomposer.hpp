#pragma once

#include <map>
#include <string>
#include <vector>

#include "packlab/graph.hpp"

namespace packlab {

/// A connected graph with a root edge such that every two of its edges are
/// within line-graph distance k (ν_k = 1).
struct KUnit {
    Graph graph;  // local ids
    Edge root_edge;
    /// Local vertices at distance exactly k from the root edge inside the unit.
    VertexSet boundary;
};

/// Vertices at distance exactly k from `root` (minimum over its endpoints) in `unit`.
VertexSet unit_boundary(const Graph& unit, Edge root, unsigned k);

struct Identification {
    std::size_t unit = 0;
    Vertex local = 0;
    Vertex global = 0;

    friend auto operator<=>(const Identification&, const Identification&) = default;
};

struct KUnitDecomposition {
    unsigned k = 1;
    /// Vertex count of the glued graph (isolated vertices belong to no unit).
    std::size_t vertex_count = 0;
    std::vector<KUnit> units;
    /// Embedding of every local vertex into the glued graph.
    std::vector<Identification> identification;
};

/// Splits a graph with ν_k = ν_{2k} into k-units glued at boundary vertices.
/// Throws PreconditionError (carrying the recognizer's violation) otherwise.
KUnitDecomposition decompose_into_k_units(const Graph& g, unsigned k);

/// Glues units back together. Throws InputError if a vertex shared by two
/// units is outside the boundary of one of them, or if the identification
/// is incomplete or not injective inside a unit.
Graph reassemble(const KUnitDecomposition& d);

/// Checks every KUnit invariant; returns a description of the first
/// failure, or an empty string. Uses the exact solver for ν_k = 1.
std::string check_unit(const KUnit& unit, unsigned k);

enum class CwShape { None, Star, Triangle, StarTriangle, Composite };
std::string to_string(CwShape shape);

struct PendantTriangle {
    Vertex apex = 0;
    /// The two degree-2 vertices; their edge is the triangle edge.
    Edge base;
};

struct CameronWalkerReport {
    bool is_cw = false;
    CwShape shape = CwShape::None;
    VertexSet v1, v2;
    std::map<Vertex, VertexSet> leaves;
    std::map<Vertex, std::vector<PendantTriangle>> triangles;
    std::string violation;
};

/// Structural test of ν_1(G) = ν_2(G) for a connected graph: a star, a
/// triangle, triangles sharing one vertex, or a connected bipartite core
/// (V1, V2) with leaves on every V1 vertex and pendant triangles on V2 only.
CameronWalkerReport recognize_cameron_walker(const Graph& g);

}  // namespace packlab
