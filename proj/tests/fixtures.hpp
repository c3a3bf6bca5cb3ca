#pragma once

#include "packlab/graph.hpp"

namespace fixtures {

using packlab::build_graph;
using packlab::Graph;

inline Graph k3() { return build_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Graph star13() { return build_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }
inline Graph c4() { return build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
inline Graph c5() { return build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }
inline Graph c6() { return build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}); }
inline Graph p4() { return build_graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
/// Triangles {0,1,2} and {2,3,4} sharing vertex 2.
inline Graph bowtie() { return build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }
/// Triangles a,b,c = 0,1,2 and d,e,f = 3,4,5 plus the edge c-d.
inline Graph two_triangles_bridged() { return build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}); }

/// Base clause gadget, written out by hand: a=0 p=1 q=2 b=3 x=4 y=5 z=6 x'=7 y'=8 z'=9, hubs 10 11 12.
namespace gadget {
enum : packlab::Vertex { a, p, q, b, x, y, z, xp, yp, zp, u, v, w };
}
inline Graph clause_gadget() {
    using namespace gadget;
    return build_graph(13, {{a, p}, {p, q}, {q, b}, {b, x}, {b, y}, {b, z}, {x, xp}, {y, yp}, {z, zp},
                            {u, x}, {u, y}, {u, xp}, {u, yp}, {u, zp},
                            {v, x}, {v, z}, {v, xp}, {v, yp}, {v, zp},
                            {w, y}, {w, z}, {w, xp}, {w, yp}, {w, zp}});
}

}  // namespace fixtures
