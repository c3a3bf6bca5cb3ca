#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "packlab/cnf.hpp"
#include "packlab/graph.hpp"
#include "packlab/solver.hpp"

namespace packlab {

/// Graph produced from a 3-CNF formula such that, for admissible (k1, k2),
/// ρ_{k1} = n + 2m always and ρ_{k2} = n + 2m iff the formula is satisfiable.
///
/// Label scheme (variables i and clauses j are 1-based, literal slots t in 1..3):
///   variable cycle  x[i] xbar[i] x'[i] xbar'[i], arc interiors xarc[i][s], xbararc[i][s]
///   clause gadget   a[j] apath[j][s] b[j] lit[j][t] branch[j][t][s] oldlit[j][t]
///                   u[j] v[j] w[j] prime[j][t]
/// The x[i]..xbar'[i] path: x - xbar - x' - xbar' - x with the arcs x..xbar'
/// and xbar..x' subdivided. apath[j][s] is at distance s from a[j];
/// branch[j][t][s] and oldlit[j][t] sit at distances s and floor(k2/2) from b[j].
/// When floor(k2/2) = 1 the names lit[j][t] and oldlit[j][t] denote one vertex.
struct ReductionArtifact {
    Graph graph;
    unsigned k1 = 2;
    unsigned k2 = 3;
    CnfFormula formula;
    std::map<std::string, Vertex> labels;

    unsigned n() const noexcept { return formula.variable_count; }
    std::size_t m() const noexcept { return formula.clauses.size(); }
    std::size_t expected_packing() const noexcept { return n() + 2 * m(); }

    /// Vertex id of a label; InputError if absent.
    Vertex at(const std::string& name) const;
    /// All vertices of the cycle of variable i (1-based).
    VertexSet variable_gadget(unsigned i) const;
    /// All vertices of the gadget of clause j (1-based).
    VertexSet clause_gadget(std::size_t j) const;
};

std::string label(const std::string& base, std::size_t i);
std::string label(const std::string& base, std::size_t i, std::size_t t);
std::string label(const std::string& base, std::size_t i, std::size_t t, std::size_t s);

/// True iff k1 < k2 and ceil((3*k2 + 1) / 2) <= 2*k1 + 1.
bool admissible_parameters(unsigned k1, unsigned k2);

/// ParameterError (listing the admissible k1 for this k2) when the pair is not admissible.
ReductionArtifact build_reduction(const CnfFormula& f, unsigned k1 = 2, unsigned k2 = 3);

struct DistanceValidation {
    std::size_t checks = 0;
};

/// BFS re-derivation of every distance the correctness argument depends on.
/// Throws ValidationError naming the clause/literal on the first failure.
DistanceValidation validate_reduction_distances(const ReductionArtifact& r, std::uint64_t budget = kDefaultNodeBudget);

/// The k2-packing of size n + 2m read off a satisfying assignment: every a[j],
/// the lit vertex of the first true literal of each clause, and x[i] or xbar[i].
/// InputError when the assignment does not satisfy the formula.
VertexSet assignment_to_packing(const ReductionArtifact& r, const Assignment& a);

/// x_i is true iff the packing meets the cycle of x_i exactly in x[i].
/// InputError unless p is a k2-packing of size n + 2m; ExtractionError if the
/// decoded assignment does not satisfy the formula.
Assignment packing_to_assignment(const ReductionArtifact& r, const VertexSet& p);

struct VerificationReport {
    std::size_t rho_k1 = 0;
    std::size_t rho_k2 = 0;
    std::size_t expected = 0;
    bool satisfiable = false;
    bool biconditional_holds = false;
    /// Lexicographically first satisfying assignment, if any.
    std::optional<Assignment> sat_assignment;
    /// assignment_to_packing(sat_assignment).
    std::optional<VertexSet> assignment_packing;
    /// Solver certificate for ρ_{k2}.
    VertexSet k2_certificate;
    /// packing_to_assignment(k2_certificate), when ρ_{k2} = n + 2m.
    std::optional<Assignment> extracted_assignment;
};

VerificationReport verify_artifact(const ReductionArtifact& r, std::uint64_t budget = kDefaultNodeBudget);
VerificationReport verify_reduction(const CnfFormula& f, unsigned k1, unsigned k2,
                                    std::uint64_t budget = kDefaultNodeBudget);

}  // namespace packlab
