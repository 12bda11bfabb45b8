#include "twocycle/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace twocycle {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list)
    : n(vertex_count) {
    edges.reserve(edge_list.size());
    for (const auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        edges.push_back(Edge{u, v});
    }
}

bool Graph::edges_adjacent(int e, int f) const {
    const Edge& a = edges[e];
    const Edge& b = edges[f];
    return a.tail == b.tail || a.tail == b.head || a.head == b.tail || a.head == b.head;
}

bool Graph::has_parallel_edge(int e) const {
    const int u = std::min(edges[e].tail, edges[e].head);
    const int v = std::max(edges[e].tail, edges[e].head);
    for (int f = 0; f < m(); ++f) {
        if (f == e) continue;
        if (std::min(edges[f].tail, edges[f].head) == u &&
            std::max(edges[f].tail, edges[f].head) == v)
            return true;
    }
    return false;
}

bool Graph::is_simple() const {
    for (int e = 0; e < m(); ++e)
        if (is_loop(e) || has_parallel_edge(e)) return false;
    return true;
}

std::vector<int> Graph::incident_edges(int v) const {
    std::vector<int> out;
    for (int e = 0; e < m(); ++e)
        if (incident(v, e)) out.push_back(e);
    return out;
}

int Graph::degree(int v) const {
    int d = 0;
    for (const Edge& e : edges) {
        if (e.tail == v) ++d;
        if (e.head == v) ++d;
    }
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::set<int> out;
    for (const Edge& e : edges) {
        if (e.tail == v && e.head != v) out.insert(e.head);
        if (e.head == v && e.tail != v) out.insert(e.tail);
    }
    return {out.begin(), out.end()};
}

std::vector<std::vector<int>> Graph::connected_components() const {
    std::vector<int> comp(n, -1);
    int count = 0;
    for (int start = 0; start < n; ++start) {
        if (comp[start] != -1) continue;
        comp[start] = count;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const Edge& e : edges) {
                int w = -1;
                if (e.tail == v) w = e.head;
                else if (e.head == v) w = e.tail;
                if (w >= 0 && comp[w] == -1) {
                    comp[w] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    std::vector<std::vector<int>> out(count);
    for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
    return out;
}

bool Graph::is_connected() const { return n <= 1 || connected_components().size() == 1; }

std::string Graph::edge_name(int e) const {
    return std::to_string(edges[e].tail) + "-" + std::to_string(edges[e].head);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, e);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

int incidence_sign(const Graph& g, int v, int e) {
    const Edge& ed = g.edges[e];
    if (ed.tail == ed.head) return 0;
    if (ed.head == v) return 1;
    if (ed.tail == v) return -1;
    return 0;
}

EdgeVector zero_edge_vector(const Graph& g) { return EdgeVector(g.m()); }

std::vector<Z> vertex_boundary(const Graph& g, const EdgeVector& x) {
    if (static_cast<int>(x.size()) != g.m())
        throw std::invalid_argument("vertex_boundary: edge vector size mismatch");
    std::vector<Z> b(g.n);
    for (int e = 0; e < g.m(); ++e) {
        if (x[e] == 0 || g.is_loop(e)) continue;
        b[g.edges[e].head] += x[e];
        b[g.edges[e].tail] -= x[e];
    }
    return b;
}

bool is_circulation(const Graph& g, const EdgeVector& x) {
    for (const Z& v : vertex_boundary(g, x))
        if (v != 0) return false;
    return true;
}

ContractionResult contract_edge(const Graph& g, int e) {
    if (e < 0 || e >= g.m()) throw std::invalid_argument("contract_edge: no such edge");
    ContractionResult res;
    const int u = g.edges[e].tail;
    const int v = g.edges[e].head;

    if (u == v) {  // contracting a loop = deleting it
        res.minor.n = g.n;
        res.vertex_map.resize(g.n);
        for (int w = 0; w < g.n; ++w) res.vertex_map[w] = w;
        res.edge_map.assign(g.m(), -1);
        for (int f = 0; f < g.m(); ++f) {
            if (f == e) continue;
            res.edge_map[f] = res.minor.m();
            res.minor.edges.push_back(g.edges[f]);
        }
        res.merged_vertex = u;
        return res;
    }

    const int vmin = std::min(u, v);
    const int vmax = std::max(u, v);
    res.vertex_map.resize(g.n);
    for (int w = 0; w < g.n; ++w)
        res.vertex_map[w] = (w == vmax) ? vmin : (w > vmax ? w - 1 : w);
    res.merged_vertex = vmin;
    res.minor.n = g.n - 1;
    res.edge_map.assign(g.m(), -1);
    for (int f = 0; f < g.m(); ++f) {
        if (f == e) continue;
        const int a = g.edges[f].tail;
        const int b = g.edges[f].head;
        const bool becomes_loop =
            a != b && (a == u || a == v) && (b == u || b == v);
        if (becomes_loop) continue;  // a parallel of e: drop it with e
        res.edge_map[f] = res.minor.m();
        res.minor.edges.push_back(Edge{res.vertex_map[a], res.vertex_map[b]});
    }
    return res;
}

SubdivisionResult subdivide_edges(const Graph& g, const std::vector<int>& interior_points) {
    if (static_cast<int>(interior_points.size()) != g.m())
        throw std::invalid_argument("subdivide_edges: need one count per edge");
    SubdivisionResult res;
    res.subdivided.n = g.n;
    res.arcs.resize(g.m());
    res.parent_vertex.resize(g.n);
    for (int v = 0; v < g.n; ++v) res.parent_vertex[v] = v;
    for (int e = 0; e < g.m(); ++e) {
        const int k = interior_points[e];
        if (k < 0) throw std::invalid_argument("subdivide_edges: negative count");
        if (k > 0 && g.is_loop(e))
            throw std::invalid_argument("subdivide_edges: refusing to subdivide a loop");
        int prev = g.edges[e].tail;
        for (int i = 0; i < k; ++i) {
            const int w = res.subdivided.n++;
            res.parent_vertex.push_back(-1);
            res.arcs[e].push_back(res.subdivided.m());
            res.parent_edge.push_back(e);
            res.subdivided.edges.push_back(Edge{prev, w});
            prev = w;
        }
        res.arcs[e].push_back(res.subdivided.m());
        res.parent_edge.push_back(e);
        res.subdivided.edges.push_back(Edge{prev, g.edges[e].head});
    }
    return res;
}

SubdivisionResult subdivide_edge(const Graph& g, int e) {
    std::vector<int> counts(g.m(), 0);
    counts.at(e) = 1;
    return subdivide_edges(g, counts);
}

std::vector<std::string> PairSpace::index_key() const {
    std::vector<std::string> key;
    key.reserve(pairs.size());
    for (const auto& [e, f] : pairs)
        key.push_back("(e" + std::to_string(e) + ",e" + std::to_string(f) + ")");
    return key;
}

PairSpace nonadjacent_pair_space(const Graph& g) {
    PairSpace ps;
    ps.edge_count = g.m();
    ps.lookup.assign(static_cast<size_t>(g.m()) * g.m(), -1);
    for (int e = 0; e < g.m(); ++e)
        for (int f = 0; f < g.m(); ++f) {
            if (e == f || g.edges_adjacent(e, f)) continue;
            ps.lookup[e * g.m() + f] = ps.dim();
            ps.pairs.emplace_back(e, f);
        }
    return ps;
}

}  // namespace twocycle
