#include "packlab/reduction.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "packlab/errors.hpp"

namespace packlab {

namespace {

const std::set<std::string> kVariableBases = {"x", "xbar", "x'", "xbar'", "xarc", "xbararc"};
const std::set<std::string> kClauseBases = {"a",      "apath", "b", "lit", "branch", "oldlit",
                                            "u",      "v",     "w", "prime"};

/// Splits "base[i]..." into base and first index.
std::optional<std::pair<std::string, std::size_t>> split_label(const std::string& name) {
    const auto open = name.find('[');
    const auto close = name.find(']', open);
    if (open == std::string::npos || close == std::string::npos) return std::nullopt;
    try {
        return std::make_pair(name.substr(0, open), std::stoul(name.substr(open + 1, close - open - 1)));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

VertexSet gadget(const ReductionArtifact& r, const std::set<std::string>& bases, std::size_t index) {
    VertexSet out;
    for (const auto& [name, id] : r.labels) {
        const auto parts = split_label(name);
        if (parts && parts->second == index && bases.contains(parts->first)) out.push_back(id);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

unsigned ceil_half(unsigned x) { return (x + 1) / 2; }

class Builder {
public:
    Vertex add(const std::string& name) {
        const auto id = static_cast<Vertex>(count_++);
        labels_[name] = id;
        return id;
    }
    void alias(const std::string& name, Vertex id) { labels_[name] = id; }
    void edge(Vertex a, Vertex b) { edges_.push_back({a, b}); }
    /// Path a - (interior...) - b with `interior` new vertices named by `name(s)`, s = 1..interior.
    template <typename Name>
    void path(Vertex from, Vertex to, unsigned interior, Name name) {
        Vertex prev = from;
        for (unsigned s = 1; s <= interior; ++s) {
            const Vertex cur = add(name(s));
            edge(prev, cur);
            prev = cur;
        }
        edge(prev, to);
    }

    std::size_t count_ = 0;
    std::map<std::string, Vertex> labels_;
    std::vector<Edge> edges_;
};

}  // namespace

std::string label(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }
std::string label(const std::string& base, std::size_t i, std::size_t t) { return label(base, i) + "[" + std::to_string(t) + "]"; }
std::string label(const std::string& base, std::size_t i, std::size_t t, std::size_t s) {
    return label(base, i, t) + "[" + std::to_string(s) + "]";
}

Vertex ReductionArtifact::at(const std::string& name) const {
    const auto it = labels.find(name);
    if (it == labels.end()) throw InputError("reduction artifact has no vertex labelled '" + name + "'");
    return it->second;
}

VertexSet ReductionArtifact::variable_gadget(unsigned i) const { return gadget(*this, kVariableBases, i); }
VertexSet ReductionArtifact::clause_gadget(std::size_t j) const { return gadget(*this, kClauseBases, j); }

bool admissible_parameters(unsigned k1, unsigned k2) {
    return k1 >= 1 && k1 < k2 && ceil_half(3 * k2 + 1) <= 2 * k1 + 1;
}

ReductionArtifact build_reduction(const CnfFormula& f, unsigned k1, unsigned k2) {
    if (!admissible_parameters(k1, k2)) {
        std::ostringstream msg;
        msg << "(k1, k2) = (" << k1 << ", " << k2 << ") violates k1 < k2 and ceil((3*k2+1)/2) <= 2*k1+1";
        std::vector<unsigned> ok;
        for (unsigned c = 1; c < k2; ++c)
            if (admissible_parameters(c, k2)) ok.push_back(c);
        if (ok.empty()) {
            msg << "; no k1 is admissible for k2 = " << k2;
        } else {
            msg << "; admissible k1 for k2 = " << k2 << ": " << ok.front() << ".." << ok.back();
        }
        throw ParameterError(msg.str());
    }
    for (const Clause& c : f.clauses)
        for (const Literal& l : c)
            if (l.variable == 0 || l.variable > f.variable_count)
                throw InputError("literal refers to variable " + std::to_string(l.variable) + " outside 1.." +
                                 std::to_string(f.variable_count));

    const unsigned arc_interior = ceil_half(k2) - 2;  // subdivisions of x-xbar' and xbar-x'
    const unsigned a_interior = k2 - 1;              // a - p - q - b with a-p subdivided k2 - 3 times
    const unsigned branch_len = k2 / 2;              // b-x, b-y, b-z subdivided floor(k2/2) - 1 times

    Builder B;
    for (unsigned i = 1; i <= f.variable_count; ++i) {
        const Vertex x = B.add(label("x", i));
        const Vertex xb = B.add(label("xbar", i));
        const Vertex xp = B.add(label("x'", i));
        const Vertex xbp = B.add(label("xbar'", i));
        B.edge(x, xb);
        B.edge(xp, xbp);
        B.path(x, xbp, arc_interior, [&](unsigned s) { return label("xarc", i, s); });
        B.path(xb, xp, arc_interior, [&](unsigned s) { return label("xbararc", i, s); });
    }
    for (std::size_t j = 1; j <= f.clauses.size(); ++j) {
        const Clause& c = f.clauses[j - 1];
        const Vertex a = B.add(label("a", j));
        std::vector<Vertex> apath;
        for (unsigned s = 1; s <= a_interior; ++s) apath.push_back(B.add(label("apath", j, s)));
        const Vertex b = B.add(label("b", j));
        B.edge(a, apath.front());
        for (std::size_t s = 0; s + 1 < apath.size(); ++s) B.edge(apath[s], apath[s + 1]);
        B.edge(apath.back(), b);

        std::array<Vertex, 3> old{};
        for (std::size_t t = 1; t <= 3; ++t) {
            const Vertex lit = B.add(label("lit", j, t));
            B.edge(b, lit);
            Vertex prev = lit;
            for (unsigned s = 2; s < branch_len; ++s) {
                const Vertex cur = B.add(label("branch", j, t, s));
                B.edge(prev, cur);
                prev = cur;
            }
            if (branch_len >= 2) {
                old[t - 1] = B.add(label("oldlit", j, t));
                B.edge(prev, old[t - 1]);
            } else {
                old[t - 1] = lit;
                B.alias(label("oldlit", j, t), lit);
            }
        }
        const Vertex u = B.add(label("u", j));
        const Vertex v = B.add(label("v", j));
        const Vertex w = B.add(label("w", j));
        std::array<Vertex, 3> prime{};
        for (std::size_t t = 1; t <= 3; ++t) prime[t - 1] = B.add(label("prime", j, t));
        for (std::size_t t = 0; t < 3; ++t) B.edge(old[t], prime[t]);
        // Hub vertices: each sees all three primes and two of the three literal vertices.
        B.edge(u, old[0]);
        B.edge(u, old[1]);
        B.edge(v, old[0]);
        B.edge(v, old[2]);
        B.edge(w, old[1]);
        B.edge(w, old[2]);
        for (Vertex hub : {u, v, w})
            for (Vertex p : prime) B.edge(hub, p);
        for (std::size_t t = 0; t < 3; ++t) {
            const Literal& l = c[t];
            B.edge(prime[t], B.labels_.at(label(l.positive ? "x'" : "xbar'", l.variable)));
        }
    }

    ReductionArtifact r;
    r.graph = Graph(B.count_, B.edges_);
    r.k1 = k1;
    r.k2 = k2;
    r.formula = f;
    r.labels = std::move(B.labels_);
    return r;
}

DistanceValidation validate_reduction_distances(const ReductionArtifact& r, std::uint64_t budget) {
    DistanceValidation out;
    const Graph& g = r.graph;
    const unsigned k2 = r.k2;
    auto expect = [&](Vertex from, Vertex to, std::uint32_t want, const std::string& what) {
        const Distance d = bfs_distances(g, from)[to];
        ++out.checks;
        if (!d || *d != want) {
            std::ostringstream msg;
            msg << what << ": expected distance " << want << ", found "
                << (d ? std::to_string(*d) : std::string("unreachable"));
            throw ValidationError(msg.str());
        }
    };

    for (unsigned i = 1; i <= r.n(); ++i) {
        const std::string tag = "variable " + std::to_string(i);
        expect(r.at(label("x", i)), r.at(label("xbar'", i)), ceil_half(k2) - 1, tag + " arc x-xbar'");
        expect(r.at(label("xbar", i)), r.at(label("x'", i)), ceil_half(k2) - 1, tag + " arc xbar-x'");
        const VertexSet cyc = r.variable_gadget(i);
        ++out.checks;
        if (max_k_packing(induced_subgraph(g, cyc), k2, budget).cardinality() != 1)
            throw ValidationError(tag + ": cycle alone does not have k2-packing number 1");
    }
    for (std::size_t j = 1; j <= r.m(); ++j) {
        const std::string tag = "clause " + std::to_string(j);
        expect(r.at(label("a", j)), r.at(label("b", j)), k2, tag + " a-b");
        for (std::size_t t = 1; t <= 3; ++t) {
            const Literal& l = r.formula.clauses[j - 1][t - 1];
            const std::string ltag = tag + " literal " + std::to_string(t);
            const Vertex lit = r.at(label("lit", j, t));
            expect(r.at(label("b", j)), lit, 1, ltag + " b-lit");
            expect(r.at(label("b", j)), r.at(label("oldlit", j, t)), k2 / 2, ltag + " b-oldlit");
            const Vertex true_side = r.at(label(l.positive ? "x" : "xbar", l.variable));
            const Vertex false_side = r.at(label(l.positive ? "xbar" : "x", l.variable));
            expect(lit, false_side, k2, ltag + " lit to false-setting cycle vertex");
            expect(lit, true_side, k2 + 1, ltag + " lit to true-setting cycle vertex");
        }
        ++out.checks;
        if (max_k_packing(induced_subgraph(g, r.clause_gadget(j)), r.k1, budget).cardinality() != 2)
            throw ValidationError(tag + ": gadget alone does not have k1-packing number 2");
    }
    return out;
}

VertexSet assignment_to_packing(const ReductionArtifact& r, const Assignment& a) {
    if (!satisfies(r.formula, a)) throw InputError("assignment does not satisfy the formula");
    VertexSet p;
    for (std::size_t j = 1; j <= r.m(); ++j) {
        p.push_back(r.at(label("a", j)));
        const Clause& c = r.formula.clauses[j - 1];
        for (std::size_t t = 1; t <= 3; ++t)
            if (a[c[t - 1].variable - 1] == c[t - 1].positive) {
                p.push_back(r.at(label("lit", j, t)));
                break;
            }
    }
    for (unsigned i = 1; i <= r.n(); ++i) p.push_back(r.at(label(a[i - 1] ? "x" : "xbar", i)));
    std::sort(p.begin(), p.end());
    if (p.size() != r.expected_packing() || !is_k_packing(r.graph, r.k2, p))
        throw ValidationError("assignment packing is not a k2-packing of size n+2m");
    return p;
}

Assignment packing_to_assignment(const ReductionArtifact& r, const VertexSet& p) {
    VertexSet sorted = p;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != r.expected_packing())
        throw InputError("packing has " + std::to_string(sorted.size()) + " vertices, expected n+2m = " +
                         std::to_string(r.expected_packing()));
    if (!is_k_packing(r.graph, r.k2, sorted)) throw InputError("vertex set is not a k2-packing");
    Assignment a(r.n());
    for (unsigned i = 1; i <= r.n(); ++i) {
        const VertexSet cyc = r.variable_gadget(i);
        VertexSet hit;
        std::set_intersection(cyc.begin(), cyc.end(), sorted.begin(), sorted.end(), std::back_inserter(hit));
        a[i - 1] = hit.size() == 1 && hit.front() == r.at(label("x", i));
    }
    if (!satisfies(r.formula, a)) throw ExtractionError("assignment decoded from the packing does not satisfy the formula");
    return a;
}

VerificationReport verify_artifact(const ReductionArtifact& r, std::uint64_t budget) {
    VerificationReport rep;
    rep.expected = r.expected_packing();
    rep.rho_k1 = max_k_packing(r.graph, r.k1, budget).cardinality();
    const PackingCertificate k2cert = max_k_packing(r.graph, r.k2, budget);
    rep.rho_k2 = k2cert.cardinality();
    rep.k2_certificate = k2cert.vertices;
    rep.sat_assignment = brute_force_sat(r.formula);
    rep.satisfiable = rep.sat_assignment.has_value();
    if (rep.satisfiable) rep.assignment_packing = assignment_to_packing(r, *rep.sat_assignment);
    if (rep.rho_k2 == rep.expected) rep.extracted_assignment = packing_to_assignment(r, k2cert.vertices);
    rep.biconditional_holds = rep.rho_k1 == rep.expected && (rep.satisfiable == (rep.rho_k2 == rep.expected));
    return rep;
}

VerificationReport verify_reduction(const CnfFormula& f, unsigned k1, unsigned k2, std::uint64_t budget) {
    return verify_artifact(build_reduction(f, k1, k2), budget);
}

}  // namespace packlab
