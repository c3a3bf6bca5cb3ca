#include "packlab/json_io.hpp"

#include "packlab/errors.hpp"

namespace packlab {

using nlohmann::json;

json edges_to_json(std::span<const Edge> edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

std::vector<Edge> edges_from_json(const json& j) {
    std::vector<Edge> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw InputError("edge must be a [u, v] pair");
        out.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
    }
    return out;
}

json decomposition_to_json(const KUnitDecomposition& d) {
    json units = json::array();
    for (const KUnit& u : d.units) {
        units.push_back({{"vertex_count", u.graph.vertex_count()},
                         {"edges", edges_to_json(u.graph.edges())},
                         {"root", {u.root_edge.u, u.root_edge.v}},
                         {"boundary", u.boundary}});
    }
    json ident = json::array();
    for (const Identification& id : d.identification) ident.push_back({id.unit, id.local, id.global});
    return {{"k", d.k}, {"vertex_count", d.vertex_count}, {"units", units}, {"identification", ident}};
}

KUnitDecomposition decomposition_from_json(const json& j) {
    try {
        KUnitDecomposition d;
        d.k = j.at("k").get<unsigned>();
        d.vertex_count = j.at("vertex_count").get<std::size_t>();
        for (const auto& u : j.at("units")) {
            KUnit unit;
            const auto edges = edges_from_json(u.at("edges"));
            unit.graph = Graph(u.at("vertex_count").get<std::size_t>(), edges);
            unit.root_edge = {u.at("root").at(0).get<Vertex>(), u.at("root").at(1).get<Vertex>()};
            unit.boundary = u.at("boundary").get<VertexSet>();
            d.units.push_back(std::move(unit));
        }
        for (const auto& id : j.at("identification"))
            d.identification.push_back({id.at(0).get<std::size_t>(), id.at(1).get<Vertex>(), id.at(2).get<Vertex>()});
        return d;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed decomposition JSON: ") + e.what());
    }
}

json reduction_sidecar(const ReductionArtifact& r) {
    return {{"k1", r.k1},
            {"k2", r.k2},
            {"n", r.n()},
            {"m", r.m()},
            {"labels", r.labels},
            {"expected_packing", r.expected_packing()}};
}

ReductionArtifact load_reduction(Graph graph, const json& sidecar, const CnfFormula& f) {
    ReductionArtifact r;
    try {
        r.k1 = sidecar.at("k1").get<unsigned>();
        r.k2 = sidecar.at("k2").get<unsigned>();
        r.labels = sidecar.at("labels").get<std::map<std::string, Vertex>>();
        if (sidecar.at("n").get<unsigned>() != f.variable_count || sidecar.at("m").get<std::size_t>() != f.clauses.size())
            throw InputError("sidecar n/m do not match the formula");
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed reduction sidecar: ") + e.what());
    }
    for (const auto& [name, id] : r.labels)
        if (id >= graph.vertex_count()) throw InputError("label '" + name + "' points outside the graph");
    r.graph = std::move(graph);
    r.formula = f;
    return r;
}

json recognition_to_json(const RecognitionReport& r) {
    json j = {{"equal", r.equal}, {"k", r.k}, {"transversal", r.transversal}, {"partition_witness", r.partition_witness}};
    j["violation"] = r.equal ? json(nullptr) : json(r.violation);
    j["common_value"] = r.common_value ? json(*r.common_value) : json(nullptr);
    return j;
}

}  // namespace packlab
