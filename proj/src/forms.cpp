#include "twocycle/forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace twocycle {

namespace {

std::string pair_name(int e, int f) {
    return "(e" + std::to_string(e) + ",e" + std::to_string(f) + ")";
}

void require_edge_index(const Graph& g, int e, const char* where) {
    if (e < 0 || e >= g.m())
        throw std::invalid_argument(std::string(where) + ": edge index " + std::to_string(e) +
                                    " out of range for a graph with " + std::to_string(g.m()) +
                                    " edges");
}

int shared_vertex(const Graph& g, int e, int f) {
    const Edge& a = g.edges[e];
    const Edge& b = g.edges[f];
    if (a.tail == b.tail || a.tail == b.head) return a.tail;
    if (a.head == b.tail || a.head == b.head) return a.head;
    return -1;
}

// Sign of a permutation of {0, .., n-1} by inversion count.
int perm_sign(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

Form2 indicator_product(const EdgeVector& x, const EdgeVector& y) {
    Form2 d;
    for (size_t e = 0; e < x.size(); ++e) {
        if (x[e] == 0) continue;
        for (size_t f = 0; f < y.size(); ++f) {
            if (y[f] == 0) continue;
            d.set(static_cast<int>(e), static_cast<int>(f), x[e] * y[f]);
        }
    }
    return d;
}

// Value of the generating K5 form between model edges {i,j} and {k,l}
// (indices of branch roles): 0 on overlapping pairs, otherwise the sign of
// the permutation (i, j, k, l, m) with m the remaining role.
int elem_k5_value(std::pair<int, int> e, std::pair<int, int> f) {
    const int i = e.first, j = e.second, k = f.first, l = f.second;
    if (i == k || i == l || j == k || j == l) return 0;
    const int m = 10 - i - j - k - l;
    return perm_sign({i, j, k, l, m});
}

// Value of the generating K33 form between model edges (a_i1, b_j1) and
// (a_i2, b_j2): 0 on pairs sharing a branch, otherwise
// sgn(i1 i2 i3) * sgn(j1 j2 j3).
int elem_k33_value(std::pair<int, int> e, std::pair<int, int> f) {
    const int i1 = e.first, j1 = e.second - 3, i2 = f.first, j2 = f.second - 3;
    if (i1 == i2 || j1 == j2) return 0;
    const int i3 = 3 - i1 - i2;
    const int j3 = 3 - j1 - j2;
    return perm_sign({i1, i2, i3}) * perm_sign({j1, j2, j3});
}

int model_value(KuratowskiKind kind, std::pair<int, int> e, std::pair<int, int> f) {
    return kind == KuratowskiKind::K5 ? elem_k5_value(e, f) : elem_k33_value(e, f);
}

// Orientation of host edge p.edges[pos] relative to the traversal of p:
// +1 when the reference orientation agrees with the walk.
int traversal_sign(const Graph& g, const PathSeq& p, int pos) {
    return g.edges[p.edges[pos]].tail == p.vertices[pos] ? 1 : -1;
}

// Join two internally disjoint paths with common endpoints into the cycle
// that runs along p and back along q.
OrientedCycle cycle_of_two_paths(const PathSeq& p, const PathSeq& q) {
    OrientedCycle c;
    c.vertices = p.vertices;
    c.edges = p.edges;
    const PathSeq back = reversed_path(q);
    for (size_t i = 1; i + 1 < back.vertices.size(); ++i)
        c.vertices.push_back(back.vertices[i]);
    for (int e : back.edges) c.edges.push_back(e);
    return c;
}

// Subpath of a quad's side path from axle x to the attachment vertex w.
// path runs from its first axle to its second; x must be one of them.
PathSeq half_toward(const PathSeq& path, int x, int w) {
    if (x == path.start()) return path_prefix_to(path, w);
    return reversed_path(path_suffix_from(path, w));
}

// Subpath from the attachment vertex w to axle y.
PathSeq half_from(const PathSeq& path, int w, int y) {
    if (y == path.end()) return path_suffix_from(path, w);
    return reversed_path(path_prefix_to(path, w));
}

}  // namespace

Z Form2::at(int e, int f) const {
    const auto it = entries.find({e, f});
    return it == entries.end() ? Z(0) : it->second;
}

void Form2::set(int e, int f, Z value) {
    if (value == 0)
        entries.erase({e, f});
    else
        entries[{e, f}] = std::move(value);
}

void Form2::add(int e, int f, const Z& delta) {
    if (delta == 0) return;
    const auto it = entries.find({e, f});
    if (it == entries.end()) {
        entries[{e, f}] = delta;
        return;
    }
    it->second += delta;
    if (it->second == 0) entries.erase(it);
}

Form2 form_sum(const Form2& x, const Form2& y) {
    Form2 r = x;
    for (const auto& [key, val] : y.entries) r.add(key.first, key.second, val);
    return r;
}

Form2 form_diff(const Form2& x, const Form2& y) {
    Form2 r = x;
    for (const auto& [key, val] : y.entries) r.add(key.first, key.second, -val);
    return r;
}

Form2 form_scale(const Z& c, const Form2& x) {
    Form2 r;
    if (c == 0) return r;
    for (const auto& [key, val] : x.entries) r.entries[key] = c * val;
    return r;
}

Form2 transpose(const Form2& d) {
    Form2 r;
    for (const auto& [key, val] : d.entries) r.entries[{key.second, key.first}] = val;
    return r;
}

Form2 sigma_apply(SigmaMode mode, const Form2& d) {
    switch (mode) {
        case SigmaMode::Plain: return d;
        case SigmaMode::Sym: return form_sum(d, transpose(d));
        case SigmaMode::Skew: return form_diff(d, transpose(d));
    }
    throw std::invalid_argument("sigma_apply: unknown mode");
}

Form2 sigma_complement_apply(SigmaMode mode, const Form2& d) {
    switch (mode) {
        case SigmaMode::Plain: return Form2{};
        case SigmaMode::Sym: return form_diff(d, transpose(d));
        case SigmaMode::Skew: return form_sum(d, transpose(d));
    }
    throw std::invalid_argument("sigma_complement_apply: unknown mode");
}

bool is_two_cycle(const Graph& g, const Form2& d, std::string* why) {
    const int m = g.m();
    for (const auto& [key, val] : d.entries) {
        require_edge_index(g, key.first, "is_two_cycle");
        require_edge_index(g, key.second, "is_two_cycle");
        if (val == 0) continue;
        if (g.edges_adjacent(key.first, key.second)) {
            if (why)
                *why = "nonzero entry at adjacent pair " + pair_name(key.first, key.second) +
                       ": edges " + std::to_string(key.first) + " and " +
                       std::to_string(key.second) + " share vertex " +
                       std::to_string(shared_vertex(g, key.first, key.second));
            return false;
        }
    }
    // Row slices d(e, -) must be circulations.
    for (int e = 0; e < m; ++e) {
        EdgeVector row = zero_edge_vector(g);
        bool nonzero = false;
        for (int f = 0; f < m; ++f) {
            row[f] = d.at(e, f);
            if (row[f] != 0) nonzero = true;
        }
        if (!nonzero) continue;
        const std::vector<Z> bd = vertex_boundary(g, row);
        for (int v = 0; v < g.n; ++v)
            if (bd[v] != 0) {
                if (why)
                    *why = "row slice of e" + std::to_string(e) +
                           " is not a circulation: net flow " + bd[v].str() + " at vertex " +
                           std::to_string(v);
                return false;
            }
    }
    // Column slices d(-, f) must be circulations.
    for (int f = 0; f < m; ++f) {
        EdgeVector col = zero_edge_vector(g);
        bool nonzero = false;
        for (int e = 0; e < m; ++e) {
            col[e] = d.at(e, f);
            if (col[e] != 0) nonzero = true;
        }
        if (!nonzero) continue;
        const std::vector<Z> bd = vertex_boundary(g, col);
        for (int v = 0; v < g.n; ++v)
            if (bd[v] != 0) {
                if (why)
                    *why = "column slice of e" + std::to_string(f) +
                           " is not a circulation: net flow " + bd[v].str() + " at vertex " +
                           std::to_string(v);
                return false;
            }
    }
    if (why) why->clear();
    return true;
}

SubLattice two_cycle_lattice(const Graph& g, SigmaMode mode) {
    const PairSpace ps = nonadjacent_pair_space(g);
    const int dim = ps.dim();
    IntMatrix cons(0, dim);
    auto push_row = [&](std::vector<Z>&& row) {
        for (const Z& x : row)
            if (x != 0) {
                cons.a.push_back(std::move(row));
                ++cons.rows;
                return;
            }
    };
    // Row slices are circulations: for every edge e and vertex v,
    // sum_f [v,f] x_(e,f) = 0.
    for (int e = 0; e < g.m(); ++e)
        for (int v = 0; v < g.n; ++v) {
            std::vector<Z> row(dim);
            for (int f = 0; f < g.m(); ++f) {
                const int idx = ps.index_of(e, f);
                if (idx >= 0) row[idx] = incidence_sign(g, v, f);
            }
            push_row(std::move(row));
        }
    // Column slices are circulations: for every edge f and vertex v,
    // sum_e [v,e] x_(e,f) = 0.
    for (int f = 0; f < g.m(); ++f)
        for (int v = 0; v < g.n; ++v) {
            std::vector<Z> row(dim);
            for (int e = 0; e < g.m(); ++e) {
                const int idx = ps.index_of(e, f);
                if (idx >= 0) row[idx] = incidence_sign(g, v, e);
            }
            push_row(std::move(row));
        }
    if (mode != SigmaMode::Plain) {
        const int sign = mode == SigmaMode::Sym ? -1 : 1;
        for (int i = 0; i < dim; ++i) {
            const auto [e, f] = ps.pairs[i];
            if (e > f) continue;
            const int j = ps.index_of(f, e);
            std::vector<Z> row(dim);
            row[i] = 1;
            row[j] += sign;  // += keeps e == f honest, though loops never pair
            push_row(std::move(row));
        }
    }
    const SubLattice ker = kernel_basis(cons);
    return make_sublattice(dim, ker.basis, ps.index_key());
}

std::vector<Z> form_coordinates(const PairSpace& ps, const Form2& d) {
    std::vector<Z> x(ps.dim());
    for (const auto& [key, val] : d.entries) {
        if (val == 0) continue;
        if (key.first < 0 || key.first >= ps.edge_count || key.second < 0 ||
            key.second >= ps.edge_count)
            throw std::invalid_argument("form_coordinates: edge index out of range at " +
                                        pair_name(key.first, key.second));
        const int idx = ps.index_of(key.first, key.second);
        if (idx < 0)
            throw std::invalid_argument("form_coordinates: nonzero value at " +
                                        pair_name(key.first, key.second) +
                                        ", which is outside the nonadjacent pair space");
        x[idx] = val;
    }
    return x;
}

Form2 form_from_coordinates(const PairSpace& ps, const std::vector<Z>& x) {
    if (static_cast<int>(x.size()) != ps.dim())
        throw std::invalid_argument("form_from_coordinates: expected " +
                                    std::to_string(ps.dim()) + " coordinates, got " +
                                    std::to_string(x.size()));
    Form2 d;
    for (int i = 0; i < ps.dim(); ++i)
        if (x[i] != 0) d.entries[ps.pairs[i]] = x[i];
    return d;
}

Form2 circuit_pair_form(const Graph& g, const OrientedCycle& c, const OrientedCycle& d) {
    std::string why;
    if (!certify_cycle(g, c, &why))
        throw std::invalid_argument("circuit_pair_form: first cycle invalid: " + why);
    if (!certify_cycle(g, d, &why))
        throw std::invalid_argument("circuit_pair_form: second cycle invalid: " + why);
    for (int v : c.vertices)
        for (int w : d.vertices)
            if (v == w)
                throw std::invalid_argument(
                    "circuit_pair_form: cycles are not vertex-disjoint, both visit vertex " +
                    std::to_string(v));
    return indicator_product(cycle_indicator(g, c), cycle_indicator(g, d));
}

Form2 elementary_k5_form(const std::array<int, 5>& labeling) {
    std::array<int, 5> role{-1, -1, -1, -1, -1};
    for (int i = 0; i < 5; ++i) {
        const int v = labeling[i];
        if (v < 0 || v >= 5 || role[v] != -1)
            throw std::invalid_argument(
                "elementary_k5_form: labeling must be a permutation of vertices 0..4");
        role[v] = i;
    }
    const Graph g = complete_graph(5);
    Form2 d;
    for (int e = 0; e < g.m(); ++e)
        for (int f = 0; f < g.m(); ++f) {
            if (g.edges_adjacent(e, f)) continue;
            const int val = elem_k5_value({role[g.edges[e].tail], role[g.edges[e].head]},
                                          {role[g.edges[f].tail], role[g.edges[f].head]});
            d.set(e, f, val);
        }
    return d;
}

Form2 elementary_k33_form(const std::array<int, 3>& a_labels, const std::array<int, 3>& b_labels) {
    std::array<int, 6> a_role;
    std::array<int, 6> b_role;
    a_role.fill(-1);
    b_role.fill(-1);
    std::array<bool, 6> seen{};
    for (int i = 0; i < 3; ++i)
        for (int v : {a_labels[i], b_labels[i]}) {
            if (v < 0 || v >= 6 || seen[v])
                throw std::invalid_argument(
                    "elementary_k33_form: labels must name six distinct vertices 0..5");
            seen[v] = true;
        }
    for (int i = 0; i < 3; ++i) {
        a_role[a_labels[i]] = i;
        b_role[b_labels[i]] = i;
    }
    const Graph g = complete_bipartite(3, 3);
    // Every a-vertex must be adjacent to every b-vertex, which pins each label
    // set to one side of the bipartition.
    for (int av : a_labels)
        for (int bv : b_labels) {
            bool found = false;
            for (const Edge& ed : g.edges)
                if ((ed.tail == av && ed.head == bv) || (ed.tail == bv && ed.head == av)) {
                    found = true;
                    break;
                }
            if (!found)
                throw std::invalid_argument(
                    "elementary_k33_form: label sets must be the two sides of the bipartition; "
                    "vertices " +
                    std::to_string(av) + " and " + std::to_string(bv) + " are not adjacent");
        }
    auto roles_of = [&](int e) -> std::pair<int, int> {
        const int x = g.edges[e].tail;
        const int y = g.edges[e].head;
        if (a_role[x] >= 0) return {a_role[x], b_role[y] + 3};
        return {a_role[y], b_role[x] + 3};
    };
    Form2 d;
    for (int e = 0; e < g.m(); ++e)
        for (int f = 0; f < g.m(); ++f) {
            if (g.edges_adjacent(e, f)) continue;
            d.set(e, f, elem_k33_value(roles_of(e), roles_of(f)));
        }
    return d;
}

Form2 subdivide_form(const SubdivisionResult& s, const Form2& d) {
    const int parents = static_cast<int>(s.arcs.size());
    Form2 r;
    for (const auto& [key, val] : d.entries) {
        if (val == 0) continue;
        if (key.first < 0 || key.first >= parents || key.second < 0 || key.second >= parents)
            throw std::invalid_argument("subdivide_form: entry " +
                                        pair_name(key.first, key.second) +
                                        " names an edge the subdivision does not have");
        for (int e : s.arcs[key.first])
            for (int f : s.arcs[key.second]) r.set(e, f, val);
    }
    return r;
}

Form2 kuratowski_form(const Graph& g, const KuratowskiSubdivision& h, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("kuratowski_form: sign must be +1 or -1");
    std::string why;
    if (!certify_kuratowski_subdivision(g, h, &why))
        throw std::invalid_argument("kuratowski_form: invalid subdivision: " + why);
    const auto model = kuratowski_model_edges(h.kind);
    const int arcs = static_cast<int>(model.size());
    Form2 d;
    for (int t1 = 0; t1 < arcs; ++t1)
        for (int t2 = 0; t2 < arcs; ++t2) {
            const int val = model_value(h.kind, model[t1], model[t2]);
            if (val == 0) continue;
            const PathSeq& p1 = h.arcs[t1];
            const PathSeq& p2 = h.arcs[t2];
            for (int i = 0; i < p1.length(); ++i)
                for (int j = 0; j < p2.length(); ++j) {
                    const int s1 = traversal_sign(g, p1, i);
                    const int s2 = traversal_sign(g, p2, j);
                    d.set(p1.edges[i], p2.edges[j], sign * s1 * s2 * val);
                }
        }
    return d;
}

Form2 quad_form(const Graph& g, const Quad& q, int s, int t) {
    std::string why;
    if (!certify_quad(g, q, &why)) throw std::invalid_argument("quad_form: invalid quad: " + why);
    if (s != q.a && s != q.b)
        throw std::invalid_argument("quad_form: left vertex " + std::to_string(s) +
                                    " is not an axle of {" + std::to_string(q.a) + "," +
                                    std::to_string(q.b) + "}");
    if (t != q.c && t != q.d)
        throw std::invalid_argument("quad_form: left vertex " + std::to_string(t) +
                                    " is not an axle of {" + std::to_string(q.c) + "," +
                                    std::to_string(q.d) + "}");
    const int sb = (s == q.a) ? q.b : q.a;
    const int tb = (t == q.c) ? q.d : q.c;
    std::array<PathSeq, 3> w;  // left spokes s -> t through connector i
    std::array<PathSeq, 3> x;  // right spokes sb -> tb
    for (int i = 0; i < 3; ++i) {
        const int u = q.attach_p(i);
        const int v = q.attach_r(i);
        w[i] = concat_paths(concat_paths(half_toward(q.p[i], s, u), q.q[i]),
                            half_from(q.r[i], v, t));
        x[i] = concat_paths(concat_paths(half_toward(q.p[i], sb, u), q.q[i]),
                            half_from(q.r[i], v, tb));
    }
    // The four derived cycles all traverse spoke 0 forward; the difference of
    // the two indicator products cancels every entry the shared spoke creates.
    const OrientedCycle c2 = cycle_of_two_paths(w[0], w[2]);
    const OrientedCycle c3 = cycle_of_two_paths(w[0], w[1]);
    const OrientedCycle d3 = cycle_of_two_paths(x[0], x[1]);
    const OrientedCycle d2 = cycle_of_two_paths(x[0], x[2]);
    return form_diff(indicator_product(cycle_indicator(g, c2), cycle_indicator(g, d3)),
                     indicator_product(cycle_indicator(g, c3), cycle_indicator(g, d2)));
}

PuvTensor puv(const Graph& g, const Form2& d, int u, int v) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n)
        throw std::invalid_argument("puv: vertex out of range");
    PuvTensor t;
    t.u = u;
    t.v = v;
    for (const auto& [key, val] : d.entries) {
        require_edge_index(g, key.first, "puv");
        require_edge_index(g, key.second, "puv");
        if (val == 0) continue;
        if (g.incident(u, key.first) && g.incident(v, key.second)) t.entries[key] = val;
    }
    return t;
}

Form2 contract_form(const Graph& g, const Form2& d, int e) {
    require_edge_index(g, e, "contract_form");
    const int u = g.edges[e].tail;
    const int v = g.edges[e].head;
    for (const PuvTensor& pre : {puv(g, d, u, v), puv(g, d, v, u)})
        if (!pre.is_zero()) {
            const auto& [key, val] = *pre.entries.begin();
            throw std::invalid_argument(
                "contract_form: contracting edge " + std::to_string(e) + " = " + g.edge_name(e) +
                " needs d to vanish between edges at its ends, but d" +
                pair_name(key.first, key.second) + " = " + val.str() + " with edge " +
                std::to_string(key.first) + " incident to " + std::to_string(pre.u) +
                " and edge " + std::to_string(key.second) + " incident to " +
                std::to_string(pre.v));
        }
    const ContractionResult cr = contract_edge(g, e);
    Form2 r;
    for (const auto& [key, val] : d.entries) {
        const int nf = cr.edge_map[key.first];
        const int ng = cr.edge_map[key.second];
        if (nf < 0 || ng < 0) continue;  // rows of e itself are restricted away
        r.set(nf, ng, val);
    }
    return r;
}

Form2 uncontract_form(const Graph& g, const Form2& d_minor, int e) {
    require_edge_index(g, e, "uncontract_form");
    if (g.is_loop(e))
        throw std::invalid_argument("uncontract_form: edge " + std::to_string(e) +
                                    " is a loop, whose row is not determined by the minor");
    if (g.has_parallel_edge(e))
        throw std::invalid_argument("uncontract_form: edge " + std::to_string(e) +
                                    " has a parallel edge, which contraction deletes; the lift "
                                    "is only defined without one");
    const ContractionResult cr = contract_edge(g, e);
    for (const auto& [key, val] : d_minor.entries) {
        require_edge_index(cr.minor, key.first, "uncontract_form");
        require_edge_index(cr.minor, key.second, "uncontract_form");
        (void)val;
    }
    std::vector<int> inv(cr.minor.m(), -1);
    for (int f = 0; f < g.m(); ++f)
        if (cr.edge_map[f] >= 0) inv[cr.edge_map[f]] = f;
    Form2 r;
    for (const auto& [key, val] : d_minor.entries)
        r.set(inv[key.first], inv[key.second], val);
    // Row and column e come from the circulation constraints at the end u:
    // summing [u,h] d(h, f) over all h must vanish, which solves for the
    // single unknown d(e, f); likewise for d(f, e) and d(e, e).
    const int u = g.edges[e].tail;
    const Z ue(incidence_sign(g, u, e));
    std::vector<int> at_u;
    for (int h : g.incident_edges(u))
        if (h != e && !g.is_loop(h)) at_u.push_back(h);
    for (int f = 0; f < g.m(); ++f) {
        if (f == e) continue;
        Z row_sum(0);
        Z col_sum(0);
        for (int h : at_u) {
            const Z uh(incidence_sign(g, u, h));
            row_sum += uh * d_minor.at(cr.edge_map[h], cr.edge_map[f]);
            col_sum += uh * d_minor.at(cr.edge_map[f], cr.edge_map[h]);
        }
        r.set(e, f, -ue * row_sum);
        r.set(f, e, -ue * col_sum);
    }
    Z diag(0);
    for (int h : at_u)
        for (int k : at_u)
            diag += Z(incidence_sign(g, u, h)) * Z(incidence_sign(g, u, k)) *
                    d_minor.at(cr.edge_map[h], cr.edge_map[k]);
    r.set(e, e, diag);  // ue * ue == 1
    return r;
}

}  // namespace twocycle
