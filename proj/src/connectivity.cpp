#include "twocycle/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

#include "twocycle/patterns.hpp"
#include "twocycle/subsets.hpp"

namespace twocycle {

namespace {

// Connected components of the subgraph induced on the unblocked vertices,
// ordered by smallest vertex; each component sorted.
std::vector<std::vector<int>> components_avoiding(const Graph& g, const std::vector<char>& blocked) {
    std::vector<std::vector<int>> adj(g.n);
    for (const Edge& e : g.edges) {
        if (e.tail == e.head) continue;
        if (blocked[e.tail] || blocked[e.head]) continue;
        adj[e.tail].push_back(e.head);
        adj[e.head].push_back(e.tail);
    }
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (blocked[s] || seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool subset_disconnects(const Graph& g, const std::vector<int>& x) {
    std::vector<char> blocked(g.n, 0);
    for (int v : x) blocked[v] = 1;
    return components_avoiding(g, blocked).size() >= 2;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    if (g.n <= 1) return 0;
    for (int k = 0; k + 2 <= g.n; ++k)
        for (const auto& x : ascending_subsets(g.n, k))
            if (subset_disconnects(g, x)) return k;
    return g.n - 1;
}

std::vector<Separation> enumerate_separations(const Graph& g, int k) {
    std::vector<Separation> out;
    if (k < 0 || k > g.n) return out;
    for (const auto& x : ascending_subsets(g.n, k)) {
        std::vector<char> blocked(g.n, 0);
        for (int v : x) blocked[v] = 1;
        const auto comps = components_avoiding(g, blocked);
        const int r = static_cast<int>(comps.size());
        if (r < 2) continue;

        // side_of_vertex: 0 = separator, otherwise component index + 1.
        std::vector<int> comp_of(g.n, -1);
        for (int c = 0; c < r; ++c)
            for (int v : comps[c]) comp_of[v] = c;

        // Component 0 holds the smallest private vertex and stays on side 1;
        // every other component is assigned by the mask bits.
        for (unsigned mask = 1; mask < (1u << (r - 1)); ++mask) {
            Separation sep;
            sep.shared = x;
            std::vector<char> on_side2_comp(r, 0);
            for (int c = 1; c < r; ++c)
                if (mask & (1u << (c - 1))) on_side2_comp[c] = 1;

            sep.side1_vertices = x;
            sep.side2_vertices = x;
            for (int c = 0; c < r; ++c) {
                auto& side = on_side2_comp[c] ? sep.side2_vertices : sep.side1_vertices;
                side.insert(side.end(), comps[c].begin(), comps[c].end());
            }
            std::sort(sep.side1_vertices.begin(), sep.side1_vertices.end());
            std::sort(sep.side2_vertices.begin(), sep.side2_vertices.end());

            for (int e = 0; e < g.m(); ++e) {
                const Edge ed = g.edges[e];
                const int cu = comp_of[ed.tail], cv = comp_of[ed.head];
                const int c = (cu >= 0) ? cu : cv;  // -1,-1 means separator-internal
                if (c < 0 || !on_side2_comp[c])
                    sep.side1_edges.push_back(e);
                else
                    sep.side2_edges.push_back(e);
            }
            out.push_back(std::move(sep));
        }
    }
    return out;
}

int SideGraph::local_vertex(int host_vertex) const {
    const auto it = std::lower_bound(vertex_of.begin(), vertex_of.end(), host_vertex);
    if (it == vertex_of.end() || *it != host_vertex) return -1;
    return static_cast<int>(it - vertex_of.begin());
}

SideGraph side_subgraph(const Graph& g, const Separation& sep, int side) {
    if (side != 1 && side != 2) throw std::invalid_argument("side_subgraph: side must be 1 or 2");
    SideGraph out;
    out.vertex_of = (side == 1) ? sep.side1_vertices : sep.side2_vertices;
    out.edge_of = (side == 1) ? sep.side1_edges : sep.side2_edges;
    std::vector<std::pair<int, int>> edge_list;
    for (int e : out.edge_of) {
        const int u = out.local_vertex(g.edges[e].tail);
        const int v = out.local_vertex(g.edges[e].head);
        if (u < 0 || v < 0) throw std::invalid_argument("side_subgraph: edge endpoint outside side");
        edge_list.emplace_back(u, v);
    }
    out.graph = Graph(static_cast<int>(out.vertex_of.size()), edge_list);
    return out;
}

bool is_internally_4_connected(const Graph& g) {
    if (g.n < 5 || !g.is_simple()) return false;
    if (vertex_connectivity(g) < 3) return false;
    for (const auto& x : ascending_subsets(g.n, 3)) {
        std::vector<char> blocked(g.n, 0);
        for (int v : x) blocked[v] = 1;
        const auto comps = components_avoiding(g, blocked);
        const int r = static_cast<int>(comps.size());
        if (r < 2) continue;

        // A separator-internal edge can always be assigned so that neither
        // side is a bare claw: in a 3-connected graph some split then has no
        // claw side at all.
        for (const Edge& e : g.edges)
            if (blocked[e.tail] && blocked[e.head]) return false;

        // With no separator-internal edges, a side is the claw K_{1,3}
        // exactly when its private part is one vertex of degree 3.
        std::vector<char> claw_comp(r, 0);
        for (int c = 0; c < r; ++c)
            claw_comp[c] = comps[c].size() == 1 && g.degree(comps[c][0]) == 3;
        for (unsigned mask = 1; mask < (1u << (r - 1)); ++mask) {
            int side1_comps = 1, side2_comps = 0;
            bool claw1 = claw_comp[0], claw2 = true;
            for (int c = 1; c < r; ++c) {
                if (mask & (1u << (c - 1))) {
                    ++side2_comps;
                    claw2 = claw2 && claw_comp[c];
                } else {
                    ++side1_comps;
                    claw1 = claw1 && claw_comp[c];
                }
            }
            claw1 = claw1 && side1_comps == 1;
            claw2 = claw2 && side2_comps == 1;
            if (claw1 == claw2) return false;
        }
    }
    return true;
}

bool is_kuratowski_connected(const Graph& g) {
    for (int k = 0; k <= 3 && k + 2 <= g.n; ++k) {
        for (const auto& x : ascending_subsets(g.n, k)) {
            std::vector<char> blocked(g.n, 0);
            for (int v : x) blocked[v] = 1;
            const auto comps = components_avoiding(g, blocked);
            const int r = static_cast<int>(comps.size());
            if (r < 2) continue;

            std::vector<int> comp_of(g.n, -1);
            for (int c = 0; c < r; ++c)
                for (int v : comps[c]) comp_of[v] = c;
            std::vector<int> internal_edges;
            for (int e = 0; e < g.m(); ++e)
                if (blocked[g.edges[e].tail] && blocked[g.edges[e].head]) internal_edges.push_back(e);
            if (internal_edges.size() > 16)
                throw std::runtime_error("is_kuratowski_connected: too many separator-internal edges");

            auto side_with = [&](const std::vector<char>& on_side2_comp, int side,
                                 unsigned internal_mask) {
                std::vector<int> verts = x;
                for (int c = 0; c < r; ++c)
                    if ((side == 2) == static_cast<bool>(on_side2_comp[c]))
                        verts.insert(verts.end(), comps[c].begin(), comps[c].end());
                std::sort(verts.begin(), verts.end());
                std::vector<int> local(g.n, -1);
                for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;
                std::vector<std::pair<int, int>> edge_list;
                for (int e = 0; e < g.m(); ++e) {
                    const Edge ed = g.edges[e];
                    const int cu = comp_of[ed.tail], cv = comp_of[ed.head];
                    const int c = (cu >= 0) ? cu : cv;
                    if (c < 0) {
                        const auto it = std::find(internal_edges.begin(), internal_edges.end(), e);
                        const unsigned bit = 1u << (it - internal_edges.begin());
                        const bool to_side2 = (internal_mask & bit) != 0;
                        if ((side == 2) != to_side2) continue;
                    } else if ((side == 2) != static_cast<bool>(on_side2_comp[c])) {
                        continue;
                    }
                    edge_list.emplace_back(local[ed.tail], local[ed.head]);
                }
                return Graph(static_cast<int>(verts.size()), edge_list);
            };

            for (unsigned mask = 1; mask < (1u << (r - 1)); ++mask) {
                std::vector<char> on_side2_comp(r, 0);
                for (int c = 1; c < r; ++c)
                    if (mask & (1u << (c - 1))) on_side2_comp[c] = 1;

                // Monotone pre-check: give each side every internal edge. If a
                // side has no Kuratowski subdivision even then, no assignment
                // of internal edges can make this split divide two of them.
                const unsigned all = (1u << internal_edges.size()) - 1;
                if (!has_kuratowski_subdivision(side_with(on_side2_comp, 1, 0)))       // side1 gets all
                    continue;                                                           // (mask=0: none to side2)
                if (!has_kuratowski_subdivision(side_with(on_side2_comp, 2, all)))
                    continue;
                for (unsigned im = 0; im <= all; ++im) {
                    if (has_kuratowski_subdivision(side_with(on_side2_comp, 1, im)) &&
                        has_kuratowski_subdivision(side_with(on_side2_comp, 2, im)))
                        return false;
                }
            }
        }
    }
    return true;
}

}  // namespace twocycle
