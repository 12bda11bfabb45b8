#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twocycle/bigint.hpp"

namespace twocycle {

// An edge with a fixed reference orientation tail -> head. The orientation
// only fixes signs; the graph itself is undirected.
struct Edge {
    int tail = 0;
    int head = 0;
    bool operator==(const Edge&) const = default;
};

// Finite undirected multigraph on vertices 0..n-1 with ordered edge list.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;

    Graph() = default;
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list);

    int m() const { return static_cast<int>(edges.size()); }
    bool is_loop(int e) const { return edges[e].tail == edges[e].head; }
    bool incident(int v, int e) const { return edges[e].tail == v || edges[e].head == v; }
    // Do edges e and f share at least one endpoint (e == f counts)?
    bool edges_adjacent(int e, int f) const;
    bool has_parallel_edge(int e) const;  // another edge with the same endpoint set
    bool is_simple() const;               // no loops, no parallel edges

    std::vector<int> incident_edges(int v) const;  // ascending edge indices
    int degree(int v) const;                       // loops count twice
    std::vector<int> neighbors(int v) const;       // sorted distinct, v excluded

    std::vector<std::vector<int>> connected_components() const;  // sorted vertex sets
    bool is_connected() const;

    std::string edge_name(int e) const;  // "u-v"
};

// Standard families used throughout the test corpus.
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);

// Signed incidence [v,e]: +1 if e points toward v, -1 if away, 0 if v is not
// an endpoint. Loops contribute 0.
int incidence_sign(const Graph& g, int v, int e);

// Integer edge weightings x: E -> Z.
using EdgeVector = std::vector<Z>;

EdgeVector zero_edge_vector(const Graph& g);
// Net signed flow into each vertex: (boundary x)(v) = sum_e [v,e] x_e.
std::vector<Z> vertex_boundary(const Graph& g, const EdgeVector& x);
bool is_circulation(const Graph& g, const EdgeVector& x);

// Contraction of edge e with deletion of the loops this creates: the two
// endpoints merge into min(tail, head), edges parallel to e vanish with it,
// every other edge survives with its orientation. Pre-existing loops at other
// vertices are kept. Contracting a loop just deletes it.
struct ContractionResult {
    Graph minor;
    std::vector<int> vertex_map;  // old vertex -> new vertex
    std::vector<int> edge_map;    // old edge -> new edge, -1 when deleted
    int merged_vertex = 0;        // common image of the contracted endpoints
};
ContractionResult contract_edge(const Graph& g, int e);

// Replace each edge e by a path with interior_points[e] new internal vertices.
// Original vertices keep their labels; interior vertices are appended in edge
// order. Edges of the result are grouped by parent edge, each arc listed in
// path order and oriented along the parent (tail -> head), so a weighting that
// is constant on each arc pushes forward with all signs +1.
struct SubdivisionResult {
    Graph subdivided;
    std::vector<std::vector<int>> arcs;  // parent edge -> its path, in order
    std::vector<int> parent_edge;        // new edge -> parent edge
    std::vector<int> parent_vertex;      // new vertex -> old vertex, -1 interior
};
SubdivisionResult subdivide_edges(const Graph& g, const std::vector<int>& interior_points);
SubdivisionResult subdivide_edge(const Graph& g, int e);  // one interior point

// Coordinate system for 2-forms: all ordered pairs (e, f) of edges with no
// common endpoint, in lexicographic order. Every lattice of 2-forms in this
// project lives in Z^dim() over exactly these coordinates, which makes
// lattices produced by independent routes directly comparable.
struct PairSpace {
    int edge_count = 0;
    std::vector<std::pair<int, int>> pairs;  // lexicographically sorted
    std::vector<int> lookup;                 // flat edge_count^2 table, -1 absent

    int dim() const { return static_cast<int>(pairs.size()); }
    int index_of(int e, int f) const { return lookup[e * edge_count + f]; }
    std::vector<std::string> index_key() const;  // "(e3,e7)" per coordinate
};
PairSpace nonadjacent_pair_space(const Graph& g);

}  // namespace twocycle
