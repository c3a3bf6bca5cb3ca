#include "packlab/recognizer.hpp"

#include <string>

#include "packlab/errors.hpp"

namespace packlab {

RecognitionReport recognize_packing_equality(const Graph& g, unsigned k, TieBreak tie_break) {
    if (k == 0) throw InputError("packing distance k must be at least 1");
    const Graph h = graph_power(g, k);
    RecognitionReport report;
    report.k = k;
    report.transversal = transversal(twin_classes(h), tie_break);

    // Vertex -> representative whose closed neighborhood first claimed it.
    std::vector<std::optional<Vertex>> owner(g.vertex_count());
    std::vector<VertexSet> witness;
    witness.reserve(report.transversal.size());
    for (Vertex u : report.transversal) {
        VertexSet nb = h.closed_neighborhood(u).to_vector();
        for (Vertex w : nb) {
            if (owner[w]) {
                report.violation = "closed neighborhoods of " + std::to_string(*owner[w]) + " and " +
                                   std::to_string(u) + " in G^" + std::to_string(k) + " overlap at vertex " +
                                   std::to_string(w);
                return report;
            }
            owner[w] = u;
        }
        witness.push_back(std::move(nb));
    }
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
        if (!owner[w]) {
            report.violation = "vertex " + std::to_string(w) + " lies in no closed neighborhood of the transversal in G^" +
                               std::to_string(k);
            return report;
        }
    }
    report.equal = true;
    report.partition_witness = std::move(witness);
    report.common_value = report.transversal.size();
    return report;
}

std::vector<Edge> MatchingRecognitionReport::transversal_edges() const {
    std::vector<Edge> out;
    for (Vertex e : packing.transversal) out.push_back(edge_map[e]);
    return out;
}

std::vector<std::vector<Edge>> MatchingRecognitionReport::partition_edges() const {
    std::vector<std::vector<Edge>> out;
    for (const auto& part : packing.partition_witness) {
        auto& dst = out.emplace_back();
        for (Vertex e : part) dst.push_back(edge_map[e]);
    }
    return out;
}

MatchingRecognitionReport recognize_matching_equality(const Graph& g, unsigned k) {
    LineGraph lg = line_graph(g);
    MatchingRecognitionReport report;
    report.packing = recognize_packing_equality(lg.graph, k);
    report.edge_map = std::move(lg.edge_map);
    return report;
}

GapRegimeReport check_gap_regime(const Graph& g, unsigned k1, unsigned k2) {
    if (k1 == 0) throw InputError("k1 must be at least 1");
    if (k2 <= 2 * k1) throw InputError("gap regime requires k2 > 2*k1");
    const Distance diam = diameter(g);
    if (g.vertex_count() == 0 || !diam) throw InputError("gap regime check requires a connected graph");
    GapRegimeReport report;
    report.k1 = k1;
    report.k2 = k2;
    report.equal = *diam <= k1;
    if (report.equal) report.value = 1;
    return report;
}

}  // namespace packlab
