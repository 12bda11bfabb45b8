#pragma once

// Named graphs shared by the test suites. Vertex numbering is fixed so test
// expectations can refer to concrete vertices and edges.

#include "twocycle/graph.hpp"

namespace twocycle::fixtures {

// 3-cube: vertices are 3-bit strings, edges join strings differing in one bit.
inline Graph cube_graph() {
    return Graph(8, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3}, {2, 6}, {3, 7},
                     {4, 5}, {4, 6}, {5, 7}, {6, 7}});
}

// Triangular prism: triangles 0-1-2 and 3-4-5 joined by a matching.
inline Graph prism_graph() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// Octahedron: K6 minus the perfect matching {0-1, 2-3, 4-5}.
inline Graph octahedron_graph() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (!(j == i + 1 && i % 2 == 0)) es.push_back({i, j});
    return Graph(6, es);
}

// Petersen graph: outer 5-cycle 0..4, spokes to 5..9, inner pentagram.
inline Graph petersen_graph() {
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

// Two triangles sharing the single vertex 0.
inline Graph two_triangles_shared_vertex() {
    return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

// Two vertex-disjoint triangles.
inline Graph two_disjoint_triangles() {
    return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
}

// Two triangles joined by a 2-edge matching; smallest 2-separable example.
inline Graph two_triangles_two_links() {
    return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}});
}

// Two complete graphs K5 on 0..4 and 5..9 joined by the bridge matching
// 2-5, 3-6, 4-7.
inline Graph composite_graph() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) es.push_back({i, j});
    for (int i = 5; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) es.push_back({i, j});
    es.push_back({2, 5});
    es.push_back({3, 6});
    es.push_back({4, 7});
    return Graph(10, es);
}

// Axles 0,1 and 2,3; three 0-1 paths through 4,5,6; three 2-3 paths through
// 7,8,9; connector edges 4-7, 5-8, 6-9. Hosts one quad with three
// positive-length connectors.
inline Graph quad_wide_graph() {
    return Graph(10, {{0, 4}, {4, 1}, {0, 5}, {5, 1}, {0, 6}, {6, 1},
                      {2, 7}, {7, 3}, {2, 8}, {8, 3}, {2, 9}, {9, 3},
                      {4, 7}, {5, 8}, {6, 9}});
}

// Axles 0,1 and 2,3; interior vertices 4 and 5 are shared touch points of
// the path systems, 6-7 is the one positive-length connector.
inline Graph quad_mixed_graph() {
    return Graph(8, {{0, 4}, {4, 1}, {0, 5}, {5, 1}, {0, 6}, {6, 1},
                     {2, 4}, {4, 3}, {2, 5}, {5, 3}, {2, 7}, {7, 3},
                     {6, 7}});
}

// K4 with the edge 2-3 removed (the diamond).
inline Graph diamond_graph() {
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

// Theta graph 0-1 through 2, 3, 4 with pendant legs 2-5, 3-6, 4-7.
inline Graph theta_with_legs_graph() {
    return Graph(8, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}, {2, 5}, {3, 6}, {4, 7}});
}

// Two parallel edges between the same endpoints plus a pendant triangle.
inline Graph digon_triangle_graph() {
    return Graph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}});
}

// Two triangles joined by the single bridge edge 2-3: the smallest graph with
// an order-1 separation whose separation module is nontrivial.
inline Graph two_triangles_bridge() {
    return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
}

// Triangle 0-1-2 and K4 on 3,4,5,6 joined by the two links 0-3 and 1-4. The
// K4 side carries disjoint crossing linkages between {5,6} and the separator,
// giving a genuine sided separation for R = {5,6}, S = {2}.
inline Graph triangle_k4_two_links() {
    return Graph(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {3, 5}, {3, 6},
                     {4, 5}, {4, 6}, {5, 6}, {0, 3}, {1, 4}});
}

}  // namespace twocycle::fixtures
