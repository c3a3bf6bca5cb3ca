#include "packlab/decomposer.hpp"

#include <algorithm>
#include <set>

#include "packlab/errors.hpp"
#include "packlab/recognizer.hpp"
#include "packlab/solver.hpp"

namespace packlab {

VertexSet unit_boundary(const Graph& unit, Edge root, unsigned k) {
    const Vertex ends[] = {root.u, root.v};
    const auto dist = bfs_distances(unit, ends);
    VertexSet out;
    for (Vertex w = 0; w < unit.vertex_count(); ++w)
        if (dist[w] && *dist[w] == k) out.push_back(w);
    return out;
}

KUnitDecomposition decompose_into_k_units(const Graph& g, unsigned k) {
    const MatchingRecognitionReport rec = recognize_matching_equality(g, k);
    if (!rec.packing.equal)
        throw PreconditionError("nu_" + std::to_string(k) + " != nu_" + std::to_string(2 * k) + ": " +
                                rec.packing.violation);

    KUnitDecomposition d;
    d.k = k;
    d.vertex_count = g.vertex_count();
    const auto roots = rec.transversal_edges();
    const auto parts = rec.partition_edges();
    std::vector<Vertex> local(g.vertex_count());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        VertexSet verts;
        for (const Edge& e : parts[i]) {
            verts.push_back(e.u);
            verts.push_back(e.v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (std::size_t j = 0; j < verts.size(); ++j) local[verts[j]] = static_cast<Vertex>(j);

        std::vector<Edge> edges;
        edges.reserve(parts[i].size());
        for (const Edge& e : parts[i]) edges.push_back({local[e.u], local[e.v]});

        KUnit unit{Graph(verts.size(), edges), Edge{local[roots[i].u], local[roots[i].v]}, {}};
        unit.boundary = unit_boundary(unit.graph, unit.root_edge, k);
        d.units.push_back(std::move(unit));
        for (std::size_t j = 0; j < verts.size(); ++j) d.identification.push_back({i, static_cast<Vertex>(j), verts[j]});
    }
    return d;
}

Graph reassemble(const KUnitDecomposition& d) {
    std::vector<std::vector<std::optional<Vertex>>> to_global(d.units.size());
    for (std::size_t i = 0; i < d.units.size(); ++i) to_global[i].resize(d.units[i].graph.vertex_count());
    std::vector<std::vector<std::size_t>> owners(d.vertex_count);

    for (const Identification& id : d.identification) {
        if (id.unit >= d.units.size()) throw InputError("identification names unit " + std::to_string(id.unit));
        if (id.local >= to_global[id.unit].size())
            throw InputError("identification names local vertex " + std::to_string(id.local) + " of unit " +
                             std::to_string(id.unit));
        if (id.global >= d.vertex_count)
            throw InputError("identification targets vertex " + std::to_string(id.global) + " beyond vertex count");
        if (to_global[id.unit][id.local])
            throw InputError("local vertex " + std::to_string(id.local) + " of unit " + std::to_string(id.unit) +
                             " identified twice");
        auto& own = owners[id.global];
        if (std::find(own.begin(), own.end(), id.unit) != own.end())
            throw InputError("two vertices of unit " + std::to_string(id.unit) + " identified with global vertex " +
                             std::to_string(id.global));
        to_global[id.unit][id.local] = id.global;
        own.push_back(id.unit);
    }
    for (std::size_t i = 0; i < d.units.size(); ++i)
        for (Vertex v = 0; v < to_global[i].size(); ++v)
            if (!to_global[i][v])
                throw InputError("local vertex " + std::to_string(v) + " of unit " + std::to_string(i) +
                                 " has no global vertex");

    for (const Identification& id : d.identification) {
        if (owners[id.global].size() < 2) continue;
        const auto& b = d.units[id.unit].boundary;
        if (!std::binary_search(b.begin(), b.end(), id.local))
            throw InputError("global vertex " + std::to_string(id.global) + " is shared but local vertex " +
                             std::to_string(id.local) + " is not on the boundary of unit " + std::to_string(id.unit));
    }

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < d.units.size(); ++i)
        for (const Edge& e : d.units[i].graph.edges()) edges.push_back({*to_global[i][e.u], *to_global[i][e.v]});
    return Graph(d.vertex_count, edges);
}

std::string check_unit(const KUnit& unit, unsigned k) {
    const Graph& g = unit.graph;
    if (!is_connected(g)) return "unit graph is not connected";
    if (unit.root_edge.u >= g.vertex_count() || unit.root_edge.v >= g.vertex_count() ||
        !g.adjacent(unit.root_edge.u, unit.root_edge.v))
        return "root is not an edge of the unit";
    if (max_k_matching(g, k).cardinality() != 1) return "unit has nu_k != 1";
    if (unit.boundary != unit_boundary(g, unit.root_edge, k)) return "boundary differs from the distance-k vertex set";
    if (!is_independent(g, unit.boundary)) return "boundary is not independent";
    const Vertex ends[] = {unit.root_edge.u, unit.root_edge.v};
    for (const Distance& d : bfs_distances(g, ends))
        if (!d || *d > k) return "a vertex lies farther than k from the root edge";
    return {};
}

std::string to_string(CwShape shape) {
    switch (shape) {
        case CwShape::None: return "none";
        case CwShape::Star: return "star";
        case CwShape::Triangle: return "triangle";
        case CwShape::StarTriangle: return "star-triangle";
        case CwShape::Composite: return "composite";
    }
    return "none";
}

CameronWalkerReport recognize_cameron_walker(const Graph& g) {
    if (!is_connected(g)) throw InputError("Cameron-Walker recognition requires a connected graph");
    const std::size_t n = g.vertex_count();
    CameronWalkerReport r;

    for (Vertex c = 0; c < n; ++c) {
        if (g.degree(c) + 1 != n) continue;
        bool star = true;
        for (Vertex w = 0; w < n && star; ++w) star = w == c || g.degree(w) == 1;
        if (star || n <= 2) {
            r.is_cw = true;
            r.shape = CwShape::Star;
            r.v1 = {c};
            VertexSet rest;
            for (Vertex w = 0; w < n; ++w)
                if (w != c) rest.push_back(w);
            r.leaves[c] = rest;
            return r;
        }
    }
    if (n == 3 && g.edge_count() == 3) {
        r.is_cw = true;
        r.shape = CwShape::Triangle;
        return r;
    }

    // Pendant triangles: adjacent degree-2 pairs with a common third neighbor.
    std::vector<bool> stripped(n, false);
    std::size_t triangle_count = 0;
    for (const Edge& e : g.edges()) {
        if (g.degree(e.u) != 2 || g.degree(e.v) != 2) continue;
        const Vertex a = g.neighbors(e.u)[0] == e.v ? g.neighbors(e.u)[1] : g.neighbors(e.u)[0];
        const Vertex b = g.neighbors(e.v)[0] == e.u ? g.neighbors(e.v)[1] : g.neighbors(e.v)[0];
        if (a != b) continue;
        r.triangles[a].push_back({a, e});
        stripped[e.u] = stripped[e.v] = true;
        ++triangle_count;
    }
    if (r.triangles.size() == 1 && 2 * triangle_count + 1 == n) {
        r.is_cw = true;
        r.shape = CwShape::StarTriangle;
        r.v2 = {r.triangles.begin()->first};
        return r;
    }
    for (Vertex w = 0; w < n; ++w) {
        if (g.degree(w) != 1) continue;
        const Vertex parent = g.neighbors(w)[0];
        r.leaves[parent].push_back(w);
        stripped[w] = true;
    }

    VertexSet core;
    for (Vertex w = 0; w < n; ++w)
        if (!stripped[w]) core.push_back(w);
    for (Vertex w : core) (r.leaves.contains(w) ? r.v1 : r.v2).push_back(w);

    auto fail = [&](std::string why) {
        r.is_cw = false;
        r.shape = CwShape::None;
        r.violation = std::move(why);
        return r;
    };
    for (const auto& [anchor, ts] : r.triangles)
        if (r.leaves.contains(anchor))
            return fail("vertex " + std::to_string(anchor) + " carries both leaves and pendant triangles");
    if (r.v1.empty()) return fail("no core vertex carries a leaf");
    if (r.v2.empty()) return fail("every core vertex carries a leaf, so the core has no second part");
    for (const Edge& e : g.edges()) {
        if (stripped[e.u] || stripped[e.v]) continue;
        if (r.leaves.contains(e.u) == r.leaves.contains(e.v))
            return fail("core edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        ") does not join a leaf-carrying vertex to a leafless one");
    }
    if (!is_connected(induced_subgraph(g, core))) return fail("core is not connected");
    r.is_cw = true;
    r.shape = CwShape::Composite;
    return r;
}

}  // namespace packlab
