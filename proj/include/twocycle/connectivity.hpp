#pragma once

#include <vector>

#include "twocycle/graph.hpp"

namespace twocycle {

// Standard vertex connectivity of the simplified graph (parallel edges and
// loops are irrelevant to connectivity). Returns n-1 for complete graphs,
// 0 for disconnected graphs and for graphs with fewer than two vertices.
int vertex_connectivity(const Graph& g);

// A proper separation (G1, G2) of order |shared|: the sides overlap exactly
// in `shared`, every edge belongs to exactly one side, no edge joins the two
// private vertex sets, and both private sets are nonempty. Edges with both
// ends inside `shared` are canonically assigned to side 1.
struct Separation {
    std::vector<int> shared;          // sorted separator vertices
    std::vector<int> side1_vertices;  // sorted, includes shared
    std::vector<int> side2_vertices;  // sorted, includes shared
    std::vector<int> side1_edges;     // ascending edge indices
    std::vector<int> side2_edges;     // ascending edge indices

    int order() const { return static_cast<int>(shared.size()); }
    bool operator==(const Separation&) const = default;
};

// All proper separations of order exactly k, in a deterministic canonical
// order: separators are enumerated as ascending k-subsets, the components of
// g - separator are grouped into two nonempty sides (the component containing
// the smallest private vertex always lies on side 1), and separator-internal
// edges go to side 1.
std::vector<Separation> enumerate_separations(const Graph& g, int k);

// One side of a separation as a standalone graph, with index maps back into
// the host graph.
struct SideGraph {
    Graph graph;
    std::vector<int> vertex_of;  // side vertex index -> host vertex
    std::vector<int> edge_of;    // side edge index -> host edge

    int local_vertex(int host_vertex) const;  // -1 if absent
};

SideGraph side_subgraph(const Graph& g, const Separation& sep, int side);

// True iff g is simple, 3-connected, has at least 5 vertices, and every
// separation of order 3 (over every assignment of separator-internal edges)
// has exactly one side isomorphic to the claw K_{1,3}.
bool is_internally_4_connected(const Graph& g);

// True iff no separation of order <= 3 "divides" two Kuratowski subgraphs:
// there is no separation with a Kuratowski subdivision inside each side
// (sides may use separator vertices, and separator-internal edges may be
// assigned to either side).
bool is_kuratowski_connected(const Graph& g);

}  // namespace twocycle
