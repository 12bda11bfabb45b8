#include "twocycle/patterns.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "twocycle/subsets.hpp"

namespace twocycle {

namespace {

using Mask = unsigned long long;

// Incidence lists without loops; entries at every vertex ascend by edge index.
std::vector<std::vector<std::pair<int, int>>> nonloop_incidence(const Graph& g) {
    std::vector<std::vector<std::pair<int, int>>> inc(g.n);
    for (int e = 0; e < g.m(); ++e) {
        if (g.is_loop(e)) continue;
        inc[g.edges[e].tail].emplace_back(e, g.edges[e].head);
        inc[g.edges[e].head].emplace_back(e, g.edges[e].tail);
    }
    return inc;
}

void require_mask_scale(const Graph& g, const char* who) {
    if (g.n >= 64) throw std::invalid_argument(std::string(who) + ": more than 63 vertices");
}

Mask vertex_mask(const std::vector<int>& vs) {
    Mask m = 0;
    for (int v : vs) m |= Mask{1} << v;
    return m;
}

bool fail(std::string* why, const std::string& message) {
    if (why) *why = message;
    return false;
}

// All simple x->y paths whose interiors avoid `banned` and have at least
// min_interior vertices, in lexicographic order of their edge sequences.
// The sink returns false to stop the search.
void all_paths(const Graph& g, const std::vector<std::vector<std::pair<int, int>>>& inc, int x,
               int y, const std::vector<char>& banned, int min_interior, CapGuard& guard,
               const std::function<bool(const PathSeq&)>& sink) {
    if (x == y) throw std::invalid_argument("all_paths: equal endpoints");
    std::vector<char> on_path(g.n, 0);
    PathSeq cur;
    cur.vertices = {x};
    on_path[x] = 1;
    bool stop = false;
    std::function<void()> dfs = [&]() {
        if (stop) return;
        guard.tick();
        const int v = cur.vertices.back();
        for (const auto& [e, w] : inc[v]) {
            if (stop) return;
            if (w == y) {
                if (static_cast<int>(cur.vertices.size()) - 1 >= min_interior) {
                    cur.vertices.push_back(w);
                    cur.edges.push_back(e);
                    if (!sink(cur)) stop = true;
                    cur.vertices.pop_back();
                    cur.edges.pop_back();
                }
            } else if (!banned[w] && !on_path[w]) {
                on_path[w] = 1;
                cur.vertices.push_back(w);
                cur.edges.push_back(e);
                dfs();
                on_path[w] = 0;
                cur.vertices.pop_back();
                cur.edges.pop_back();
            }
        }
    };
    dfs();
}

std::vector<PathSeq> collect_paths(const Graph& g,
                                   const std::vector<std::vector<std::pair<int, int>>>& inc, int x,
                                   int y, const std::vector<char>& banned, int min_interior,
                                   CapGuard& guard) {
    std::vector<PathSeq> out;
    all_paths(g, inc, x, y, banned, min_interior, guard, [&](const PathSeq& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Simple cycles
// ---------------------------------------------------------------------------

std::vector<OrientedCycle> enumerate_cycles(const Graph& g, const CapConfig& caps) {
    CapGuard guard(caps, "enumerate_cycles");
    const auto inc = nonloop_incidence(g);
    std::vector<OrientedCycle> out;
    std::vector<char> on_path(g.n, 0);
    OrientedCycle cur;
    int start = 0;
    std::function<void()> dfs = [&]() {
        guard.tick();
        const int v = cur.vertices.back();
        for (const auto& [e, w] : inc[v]) {
            if (w == start) {
                // Closing edge: require a canonical direction. Equality is
                // impossible, so this also rules out reusing the first edge
                // of a would-be 2-cycle.
                if (cur.vertices.size() >= 2 && cur.edges.front() < e) {
                    out.push_back(cur);
                    out.back().edges.push_back(e);
                }
            } else if (w > start && !on_path[w]) {
                on_path[w] = 1;
                cur.vertices.push_back(w);
                cur.edges.push_back(e);
                dfs();
                on_path[w] = 0;
                cur.vertices.pop_back();
                cur.edges.pop_back();
            }
        }
    };
    for (start = 0; start < g.n; ++start) {
        cur.vertices = {start};
        cur.edges.clear();
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[start] = 1;
        dfs();
    }
    return out;
}

bool certify_cycle(const Graph& g, const OrientedCycle& c, std::string* why) {
    const int n = static_cast<int>(c.vertices.size());
    if (n < 2 || c.edges.size() != c.vertices.size()) return fail(why, "cycle needs length >= 2 with one edge per vertex");
    std::vector<int> sorted_v = c.vertices;
    std::sort(sorted_v.begin(), sorted_v.end());
    if (std::adjacent_find(sorted_v.begin(), sorted_v.end()) != sorted_v.end())
        return fail(why, "repeated vertex");
    std::vector<int> sorted_e = c.edges;
    std::sort(sorted_e.begin(), sorted_e.end());
    if (std::adjacent_find(sorted_e.begin(), sorted_e.end()) != sorted_e.end())
        return fail(why, "repeated edge");
    for (int i = 0; i < n; ++i) {
        const int e = c.edges[i];
        if (e < 0 || e >= g.m()) return fail(why, "edge index out of range");
        const int u = c.vertices[i], v = c.vertices[(i + 1) % n];
        if (u < 0 || u >= g.n) return fail(why, "vertex index out of range");
        const Edge ed = g.edges[e];
        if (!((ed.tail == u && ed.head == v) || (ed.tail == v && ed.head == u)))
            return fail(why, "edge " + g.edge_name(e) + " does not join consecutive vertices");
    }
    return true;
}

EdgeVector cycle_indicator(const Graph& g, const OrientedCycle& c) {
    EdgeVector x = zero_edge_vector(g);
    const int n = static_cast<int>(c.vertices.size());
    for (int i = 0; i < n; ++i) {
        const int e = c.edges[i];
        const int from = c.vertices[i];
        x[e] = (g.edges[e].tail == from) ? 1 : -1;
    }
    return x;
}

bool cycles_vertex_disjoint(const OrientedCycle& c, const OrientedCycle& d) {
    std::vector<int> a = c.vertices, b = d.vertices;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<int> inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    return inter.empty();
}

std::vector<std::pair<OrientedCycle, OrientedCycle>> enumerate_disjoint_cycle_pairs(
    const Graph& g, const CapConfig& caps) {
    require_mask_scale(g, "enumerate_disjoint_cycle_pairs");
    const auto cycles = enumerate_cycles(g, caps);
    CapGuard guard(caps, "enumerate_disjoint_cycle_pairs");
    std::vector<Mask> masks(cycles.size());
    for (size_t i = 0; i < cycles.size(); ++i) masks[i] = vertex_mask(cycles[i].vertices);
    std::vector<std::pair<OrientedCycle, OrientedCycle>> out;
    for (size_t i = 0; i < cycles.size(); ++i)
        for (size_t j = 0; j < cycles.size(); ++j) {
            guard.tick();
            if (i != j && (masks[i] & masks[j]) == 0) out.emplace_back(cycles[i], cycles[j]);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Paths
// ---------------------------------------------------------------------------

bool PathSeq::visits(int v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool certify_path(const Graph& g, const PathSeq& p, std::string* why) {
    if (p.vertices.empty()) return fail(why, "empty path");
    if (p.edges.size() + 1 != p.vertices.size())
        return fail(why, "path needs exactly one edge between consecutive vertices");
    std::vector<int> sorted_v = p.vertices;
    std::sort(sorted_v.begin(), sorted_v.end());
    if (std::adjacent_find(sorted_v.begin(), sorted_v.end()) != sorted_v.end())
        return fail(why, "repeated vertex");
    for (size_t i = 0; i < p.edges.size(); ++i) {
        const int e = p.edges[i];
        if (e < 0 || e >= g.m()) return fail(why, "edge index out of range");
        const int u = p.vertices[i], v = p.vertices[i + 1];
        if (u < 0 || u >= g.n || v < 0 || v >= g.n) return fail(why, "vertex index out of range");
        const Edge ed = g.edges[e];
        if (!((ed.tail == u && ed.head == v) || (ed.tail == v && ed.head == u)))
            return fail(why, "edge " + g.edge_name(e) + " does not join consecutive vertices");
    }
    return true;
}

PathSeq reversed_path(const PathSeq& p) {
    PathSeq out = p;
    std::reverse(out.vertices.begin(), out.vertices.end());
    std::reverse(out.edges.begin(), out.edges.end());
    return out;
}

PathSeq path_prefix_to(const PathSeq& p, int v) {
    const auto it = std::find(p.vertices.begin(), p.vertices.end(), v);
    if (it == p.vertices.end()) throw std::invalid_argument("path_prefix_to: vertex not on path");
    const size_t k = it - p.vertices.begin();
    PathSeq out;
    out.vertices.assign(p.vertices.begin(), p.vertices.begin() + k + 1);
    out.edges.assign(p.edges.begin(), p.edges.begin() + k);
    return out;
}

PathSeq path_suffix_from(const PathSeq& p, int v) {
    const auto it = std::find(p.vertices.begin(), p.vertices.end(), v);
    if (it == p.vertices.end()) throw std::invalid_argument("path_suffix_from: vertex not on path");
    const size_t k = it - p.vertices.begin();
    PathSeq out;
    out.vertices.assign(p.vertices.begin() + k, p.vertices.end());
    out.edges.assign(p.edges.begin() + k, p.edges.end());
    return out;
}

PathSeq concat_paths(const PathSeq& p, const PathSeq& q) {
    if (p.vertices.back() != q.vertices.front())
        throw std::invalid_argument("concat_paths: paths do not meet");
    PathSeq out = p;
    out.vertices.insert(out.vertices.end(), q.vertices.begin() + 1, q.vertices.end());
    out.edges.insert(out.edges.end(), q.edges.begin(), q.edges.end());
    return out;
}

// ---------------------------------------------------------------------------
// Kuratowski subdivisions
// ---------------------------------------------------------------------------

std::vector<std::pair<int, int>> kuratowski_model_edges(KuratowskiKind kind) {
    std::vector<std::pair<int, int>> model;
    if (kind == KuratowskiKind::K5) {
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) model.emplace_back(i, j);
    } else {
        for (int i = 0; i < 3; ++i)
            for (int j = 3; j < 6; ++j) model.emplace_back(i, j);
    }
    return model;
}

namespace {

struct KuratowskiSearcher {
    const Graph& g;
    const KuratowskiKind kind;
    CapGuard guard;
    const std::vector<std::pair<int, int>> model;
    std::vector<std::vector<std::pair<int, int>>> inc;
    std::vector<char> used, is_branch;
    std::vector<int> branch;
    std::vector<PathSeq> arcs;
    bool stop = false;
    std::function<bool(const KuratowskiSubdivision&)> sink;

    KuratowskiSearcher(const Graph& g_, KuratowskiKind kind_, const CapConfig& caps)
        : g(g_),
          kind(kind_),
          guard(caps, "kuratowski_search"),
          model(kuratowski_model_edges(kind_)),
          inc(nonloop_incidence(g_)),
          used(g_.n, 0),
          is_branch(g_.n, 0) {}

    void run() {
        const int need = (kind == KuratowskiKind::K5) ? 4 : 3;
        std::vector<int> cand;
        for (int v = 0; v < g.n; ++v)
            if (static_cast<int>(inc[v].size()) >= need) cand.push_back(v);
        const int nc = static_cast<int>(cand.size());
        if (kind == KuratowskiKind::K5) {
            if (nc < 5) return;
            for (const auto& pick : ascending_subsets(nc, 5)) {
                start_branch(cand, pick, {});
                if (stop) return;
            }
        } else {
            if (nc < 6) return;
            for (const auto& xs : ascending_subsets(nc, 3)) {
                std::vector<int> rest;
                for (int i = 0; i < nc; ++i)
                    if (!std::binary_search(xs.begin(), xs.end(), i)) rest.push_back(i);
                for (const auto& yi : ascending_subsets(static_cast<int>(rest.size()), 3)) {
                    std::vector<int> ys = {rest[yi[0]], rest[yi[1]], rest[yi[2]]};
                    // Canonical part order: the smallest branch vertex sits
                    // in the first part.
                    if (cand[ys[0]] < cand[xs[0]]) continue;
                    start_branch(cand, xs, ys);
                    if (stop) return;
                }
            }
        }
    }

    void start_branch(const std::vector<int>& cand, const std::vector<int>& first,
                      const std::vector<int>& second) {
        branch.clear();
        for (int i : first) branch.push_back(cand[i]);
        for (int i : second) branch.push_back(cand[i]);
        for (int v : branch) is_branch[v] = 1;
        route(0);
        for (int v : branch) is_branch[v] = 0;
    }

    void route(int t) {
        if (stop) return;
        if (t == static_cast<int>(model.size())) {
            KuratowskiSubdivision h;
            h.kind = kind;
            h.branch_vertices = branch;
            h.arcs = arcs;
            if (!sink(h)) stop = true;
            return;
        }
        PathSeq cur;
        cur.vertices = {branch[model[t].first]};
        extend(t, cur, branch[model[t].second]);
    }

    void extend(int t, PathSeq& cur, int target) {
        if (stop) return;
        guard.tick();
        const int v = cur.vertices.back();
        for (const auto& [e, w] : inc[v]) {
            if (stop) return;
            if (w == target) {
                cur.vertices.push_back(w);
                cur.edges.push_back(e);
                arcs.push_back(cur);
                cur.vertices.pop_back();
                cur.edges.pop_back();
                route(t + 1);
                arcs.pop_back();
            } else if (!used[w] && !is_branch[w]) {
                used[w] = 1;
                cur.vertices.push_back(w);
                cur.edges.push_back(e);
                extend(t, cur, target);
                used[w] = 0;
                cur.vertices.pop_back();
                cur.edges.pop_back();
            }
        }
    }
};

}  // namespace

std::vector<KuratowskiSubdivision> enumerate_kuratowski_subdivisions(const Graph& g,
                                                                     KuratowskiKind kind,
                                                                     const CapConfig& caps) {
    KuratowskiSearcher s(g, kind, caps);
    std::vector<KuratowskiSubdivision> out;
    s.sink = [&](const KuratowskiSubdivision& h) {
        out.push_back(h);
        return true;
    };
    s.run();
    return out;
}

bool has_kuratowski_subdivision(const Graph& g, const CapConfig& caps) {
    for (const KuratowskiKind kind : {KuratowskiKind::K33, KuratowskiKind::K5}) {
        KuratowskiSearcher s(g, kind, caps);
        bool found = false;
        s.sink = [&](const KuratowskiSubdivision&) {
            found = true;
            return false;
        };
        s.run();
        if (found) return true;
    }
    return false;
}

bool certify_kuratowski_subdivision(const Graph& g, const KuratowskiSubdivision& h,
                                    std::string* why) {
    const int nb = (h.kind == KuratowskiKind::K5) ? 5 : 6;
    const auto model = kuratowski_model_edges(h.kind);
    if (static_cast<int>(h.branch_vertices.size()) != nb) return fail(why, "wrong branch count");
    for (int v : h.branch_vertices)
        if (v < 0 || v >= g.n) return fail(why, "branch vertex out of range");
    std::vector<int> sorted_b = h.branch_vertices;
    std::sort(sorted_b.begin(), sorted_b.end());
    if (std::adjacent_find(sorted_b.begin(), sorted_b.end()) != sorted_b.end())
        return fail(why, "repeated branch vertex");
    if (h.arcs.size() != model.size()) return fail(why, "wrong arc count");

    std::vector<char> is_branch(g.n, 0), interior_used(g.n, 0);
    for (int v : h.branch_vertices) is_branch[v] = 1;
    std::vector<char> edge_used(g.m(), 0);
    for (size_t t = 0; t < model.size(); ++t) {
        const PathSeq& arc = h.arcs[t];
        if (!certify_path(g, arc, why)) return false;
        if (arc.length() < 1) return fail(why, "arc with no edges");
        if (arc.vertices.front() != h.branch_vertices[model[t].first] ||
            arc.vertices.back() != h.branch_vertices[model[t].second])
            return fail(why, "arc endpoints disagree with model edge");
        for (size_t i = 1; i + 1 < arc.vertices.size(); ++i) {
            const int v = arc.vertices[i];
            if (is_branch[v]) return fail(why, "arc interior hits a branch vertex");
            if (interior_used[v]) return fail(why, "arc interiors overlap");
            interior_used[v] = 1;
        }
        for (int e : arc.edges) {
            if (edge_used[e]) return fail(why, "arcs share an edge");
            edge_used[e] = 1;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Quads
// ---------------------------------------------------------------------------

namespace {

// Interior vertices of a path (everything but the two ends).
std::vector<int> path_interiors(const PathSeq& p) {
    if (p.vertices.size() <= 2) return {};
    return std::vector<int>(p.vertices.begin() + 1, p.vertices.end() - 1);
}

std::vector<int> sorted_vertices(const PathSeq& p) {
    std::vector<int> v = p.vertices;
    std::sort(v.begin(), v.end());
    return v;
}

bool intersection_equals(const std::vector<int>& sorted_a, const std::vector<int>& sorted_b,
                         std::vector<int> expected_sorted) {
    std::vector<int> inter;
    std::set_intersection(sorted_a.begin(), sorted_a.end(), sorted_b.begin(), sorted_b.end(),
                          std::back_inserter(inter));
    return inter == expected_sorted;
}

struct QuadAssembler {
    const Graph& g;
    const std::vector<std::vector<std::pair<int, int>>>& inc;
    CapGuard& guard;
    std::vector<Quad>& out;
    int a, b, c, d;
    std::array<const PathSeq*, 3> pp{};  // chosen a-b paths, canonical order
    std::array<const PathSeq*, 3> rr{};  // r-path assigned to each p slot
    std::array<PathSeq, 3> legs{};
    std::vector<char> used;  // vertices of the chosen p/r paths and routed legs

    QuadAssembler(const Graph& g_, const std::vector<std::vector<std::pair<int, int>>>& inc_,
                  CapGuard& guard_, std::vector<Quad>& out_, int a_, int b_, int c_, int d_)
        : g(g_), inc(inc_), guard(guard_), out(out_), a(a_), b(b_), c(c_), d(d_), used(g_.n, 0) {}

    void emit() {
        Quad qd;
        qd.a = a;
        qd.b = b;
        qd.c = c;
        qd.d = d;
        for (int t = 0; t < 3; ++t) {
            qd.p[t] = *pp[t];
            qd.r[t] = *rr[t];
            qd.q[t] = legs[t];
        }
        if (certify_quad(g, qd, nullptr)) out.push_back(std::move(qd));
    }

    // Route connector legs for the unmatched slots, in slot order.
    void route(const std::vector<int>& slots, size_t idx) {
        if (idx == slots.size()) {
            emit();
            return;
        }
        const int t = slots[idx];
        for (int u : path_interiors(*pp[t])) {
            for (int v : path_interiors(*rr[t])) {
                PathSeq cur;
                cur.vertices = {u};
                extend_leg(slots, idx, cur, v);
            }
        }
    }

    void extend_leg(const std::vector<int>& slots, size_t idx, PathSeq& cur, int target) {
        guard.tick();
        const int v = cur.vertices.back();
        for (const auto& [e, w] : inc[v]) {
            if (w == target) {
                // Interior vertices stay marked by their own DFS frames, so
                // later legs cannot reuse them while this leg is in place.
                cur.vertices.push_back(w);
                cur.edges.push_back(e);
                legs[slots[idx]] = cur;
                route(slots, idx + 1);
                cur.vertices.pop_back();
                cur.edges.pop_back();
            } else if (!used[w]) {
                used[w] = 1;
                cur.vertices.push_back(w);
                cur.edges.push_back(e);
                extend_leg(slots, idx, cur, target);
                used[w] = 0;
                cur.vertices.pop_back();
                cur.edges.pop_back();
            }
        }
    }
};

void quads_for_axles(const Graph& g, const std::vector<std::vector<std::pair<int, int>>>& inc,
                     int a, int b, int c, int d, CapGuard& guard, std::vector<Quad>& out) {
    std::vector<char> banned_p(g.n, 0), banned_r(g.n, 0);
    banned_p[c] = banned_p[d] = 1;
    banned_r[a] = banned_r[b] = 1;
    const auto ps = collect_paths(g, inc, a, b, banned_p, 1, guard);
    if (ps.size() < 3) return;
    const auto rs = collect_paths(g, inc, c, d, banned_r, 1, guard);
    if (rs.size() < 3) return;

    const Mask ab = (Mask{1} << a) | (Mask{1} << b);
    const Mask cd = (Mask{1} << c) | (Mask{1} << d);
    std::vector<Mask> pm(ps.size()), rm(rs.size());
    for (size_t i = 0; i < ps.size(); ++i) pm[i] = vertex_mask(ps[i].vertices);
    for (size_t i = 0; i < rs.size(); ++i) rm[i] = vertex_mask(rs[i].vertices);

    const int np = static_cast<int>(ps.size()), nr = static_cast<int>(rs.size());
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j) {
            if ((pm[i] & pm[j]) != ab) continue;
            for (int k = j + 1; k < np; ++k) {
                if ((pm[i] & pm[k]) != ab || (pm[j] & pm[k]) != ab) continue;
                guard.tick();
                const std::array<int, 3> pidx = {i, j, k};
                const Mask pall = pm[i] | pm[j] | pm[k];

                // r candidates: internally disjoint from the family later;
                // here only the touch rule against the chosen p triple.
                std::vector<int> rc;
                std::vector<Mask> rtouch;
                for (int t = 0; t < nr; ++t) {
                    const Mask touch = rm[t] & pall;
                    if (std::popcount(touch) <= 1) {
                        rc.push_back(t);
                        rtouch.push_back(touch);
                    }
                }
                const int nc = static_cast<int>(rc.size());
                for (int x = 0; x < nc; ++x)
                    for (int y = x + 1; y < nc; ++y) {
                        if ((rm[rc[x]] & rm[rc[y]]) != cd) continue;
                        for (int z = y + 1; z < nc; ++z) {
                            if ((rm[rc[x]] & rm[rc[z]]) != cd || (rm[rc[y]] & rm[rc[z]]) != cd)
                                continue;
                            guard.tick();
                            const std::array<int, 3> rsel = {rc[x], rc[y], rc[z]};
                            const std::array<Mask, 3> touch = {rtouch[x], rtouch[y], rtouch[z]};

                            // Touch points force the pairing: slot_of_r[s] is
                            // the p slot matched to the s-th chosen r path.
                            std::array<int, 3> p_slot_of_r = {-1, -1, -1};
                            std::array<int, 3> touch_vertex = {-1, -1, -1};
                            std::array<char, 3> p_matched = {0, 0, 0};
                            bool ok = true;
                            for (int s = 0; s < 3 && ok; ++s) {
                                if (touch[s] == 0) continue;
                                const int w = std::countr_zero(touch[s]);
                                int owner = -1;
                                for (int t = 0; t < 3; ++t)
                                    if (pm[pidx[t]] >> w & 1) owner = t;
                                // Touch on an axle is impossible (p avoids
                                // c,d; r avoids a,b), so owner is unique.
                                if (owner < 0 || p_matched[owner]) {
                                    ok = false;
                                    break;
                                }
                                // The touch must be interior to exactly one
                                // p path; p interiors are disjoint.
                                p_matched[owner] = 1;
                                p_slot_of_r[s] = owner;
                                touch_vertex[s] = w;
                            }
                            if (!ok) continue;

                            std::vector<int> free_p, free_r;
                            for (int t = 0; t < 3; ++t)
                                if (!p_matched[t]) free_p.push_back(t);
                            for (int s = 0; s < 3; ++s)
                                if (p_slot_of_r[s] < 0) free_r.push_back(s);

                            std::vector<int> perm(free_r.begin(), free_r.end());
                            std::sort(perm.begin(), perm.end());
                            do {
                                QuadAssembler asmb(g, inc, guard, out, a, b, c, d);
                                for (int t = 0; t < 3; ++t) asmb.pp[t] = &ps[pidx[t]];
                                for (int s = 0; s < 3; ++s)
                                    if (p_slot_of_r[s] >= 0) asmb.rr[p_slot_of_r[s]] = &rs[rsel[s]];
                                for (size_t q = 0; q < free_p.size(); ++q)
                                    asmb.rr[free_p[q]] = &rs[rsel[perm[q]]];
                                for (int s = 0; s < 3; ++s)
                                    if (p_slot_of_r[s] >= 0) {
                                        PathSeq single;
                                        single.vertices = {touch_vertex[s]};
                                        asmb.legs[p_slot_of_r[s]] = single;
                                    }
                                for (int t = 0; t < 3; ++t)
                                    for (int v : asmb.pp[t]->vertices) asmb.used[v] = 1;
                                for (int t = 0; t < 3; ++t)
                                    for (int v : asmb.rr[t]->vertices) asmb.used[v] = 1;
                                asmb.route(free_p, 0);
                            } while (std::next_permutation(perm.begin(), perm.end()));
                        }
                    }
            }
        }
}

}  // namespace

std::vector<Quad> enumerate_quads(const Graph& g, const CapConfig& caps) {
    std::vector<Quad> out;
    if (g.n < 7) return out;
    require_mask_scale(g, "enumerate_quads");
    CapGuard guard(caps, "enumerate_quads");
    const auto inc = nonloop_incidence(g);
    auto deg = [&](int v) { return static_cast<int>(inc[v].size()); };
    for (int a = 0; a < g.n; ++a) {
        if (deg(a) < 3) continue;
        for (int b = a + 1; b < g.n; ++b) {
            if (deg(b) < 3) continue;
            for (int c = a + 1; c < g.n; ++c) {
                if (c == b || deg(c) < 3) continue;
                for (int d = c + 1; d < g.n; ++d) {
                    if (d == b || deg(d) < 3) continue;
                    quads_for_axles(g, inc, a, b, c, d, guard, out);
                }
            }
        }
    }
    return out;
}

Quad relabel_quad(const Quad& q, const std::array<int, 3>& perm) {
    Quad out = q;
    for (int t = 0; t < 3; ++t) {
        out.p[t] = q.p[perm[t]];
        out.r[t] = q.r[perm[t]];
        out.q[t] = q.q[perm[t]];
    }
    return out;
}

bool certify_quad(const Graph& g, const Quad& q, std::string* why) {
    const std::vector<int> axles = {q.a, q.b, q.c, q.d};
    for (int v : axles)
        if (v < 0 || v >= g.n) return fail(why, "axle out of range");
    std::vector<int> sorted_axles = axles;
    std::sort(sorted_axles.begin(), sorted_axles.end());
    if (std::adjacent_find(sorted_axles.begin(), sorted_axles.end()) != sorted_axles.end())
        return fail(why, "axles not distinct");

    std::array<std::vector<int>, 3> pv, rv, qv;
    for (int i = 0; i < 3; ++i) {
        if (!certify_path(g, q.p[i], why)) return false;
        if (q.p[i].start() != q.a || q.p[i].end() != q.b)
            return fail(why, "p path endpoints are not the axles");
        if (q.p[i].length() < 2) return fail(why, "p path has no interior vertex");
        if (!certify_path(g, q.r[i], why)) return false;
        if (q.r[i].start() != q.c || q.r[i].end() != q.d)
            return fail(why, "r path endpoints are not the axles");
        if (q.r[i].length() < 2) return fail(why, "r path has no interior vertex");
        if (!certify_path(g, q.q[i], why)) return false;
        pv[i] = sorted_vertices(q.p[i]);
        rv[i] = sorted_vertices(q.r[i]);
        qv[i] = sorted_vertices(q.q[i]);
    }

    std::vector<int> ab = {std::min(q.a, q.b), std::max(q.a, q.b)};
    std::vector<int> cd = {std::min(q.c, q.d), std::max(q.c, q.d)};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (!intersection_equals(pv[i], pv[j], ab))
                return fail(why, "p paths are not internally disjoint");
            if (!intersection_equals(rv[i], rv[j], cd))
                return fail(why, "r paths are not internally disjoint");
            std::vector<int> inter;
            std::set_intersection(qv[i].begin(), qv[i].end(), qv[j].begin(), qv[j].end(),
                                  std::back_inserter(inter));
            if (!inter.empty()) return fail(why, "connectors are not disjoint");
        }

    std::vector<int> pr_all;  // all p/r vertices, sorted
    for (int i = 0; i < 3; ++i) {
        pr_all.insert(pr_all.end(), pv[i].begin(), pv[i].end());
        pr_all.insert(pr_all.end(), rv[i].begin(), rv[i].end());
    }
    std::sort(pr_all.begin(), pr_all.end());
    pr_all.erase(std::unique(pr_all.begin(), pr_all.end()), pr_all.end());

    for (int i = 0; i < 3; ++i) {
        const int u = q.attach_p(i), v = q.attach_r(i);
        if (!q.p[i].visits(u) || u == q.a || u == q.b)
            return fail(why, "connector does not start inside its p path");
        if (!q.r[i].visits(v) || v == q.c || v == q.d)
            return fail(why, "connector does not end inside its r path");
        for (int w : q.q[i].vertices) {
            if (w == u || w == v) continue;
            if (std::binary_search(pr_all.begin(), pr_all.end(), w))
                return fail(why, "connector passes through the p/r system");
        }
        // p meets the whole r family only inside its own connector.
        std::vector<int> r_union;
        for (int j = 0; j < 3; ++j) r_union.insert(r_union.end(), rv[j].begin(), rv[j].end());
        std::sort(r_union.begin(), r_union.end());
        std::vector<int> inter;
        std::set_intersection(pv[i].begin(), pv[i].end(), r_union.begin(), r_union.end(),
                              std::back_inserter(inter));
        for (int w : inter)
            if (!std::binary_search(qv[i].begin(), qv[i].end(), w))
                return fail(why, "p path meets an r path outside its connector");
    }

    // Theta requirement: for every side choice the three spokes form a theta.
    for (const int s : {q.a, q.b})
        for (const int t : {q.c, q.d}) {
            std::array<PathSeq, 3> spoke;
            for (int i = 0; i < 3; ++i) {
                const int u = q.attach_p(i), v = q.attach_r(i);
                PathSeq ph = (s == q.a) ? path_prefix_to(q.p[i], u)
                                        : reversed_path(path_suffix_from(q.p[i], u));
                PathSeq rh = (t == q.c) ? reversed_path(path_prefix_to(q.r[i], v))
                                        : path_suffix_from(q.r[i], v);
                PathSeq w = concat_paths(concat_paths(ph, q.q[i]), rh);
                std::string sub;
                if (!certify_path(g, w, &sub))
                    return fail(why, "side spoke is not a path: " + sub);
                spoke[i] = std::move(w);
            }
            std::vector<int> st = {std::min(s, t), std::max(s, t)};
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (!intersection_equals(sorted_vertices(spoke[i]), sorted_vertices(spoke[j]),
                                             st))
                        return fail(why, "side spokes do not form a theta");
        }
    return true;
}

// ---------------------------------------------------------------------------
// Triads and tripods
// ---------------------------------------------------------------------------

std::array<int, 3> Triad::feet() const {
    return {legs[0].end(), legs[1].end(), legs[2].end()};
}

std::array<int, 3> Tripod::feet() const {
    return {legs[0].end(), legs[1].end(), legs[2].end()};
}

namespace {

bool distinct3(const std::array<int, 3>& v) {
    return v[0] != v[1] && v[0] != v[2] && v[1] != v[2];
}

struct TriadSearcher {
    const Graph& g;
    const std::array<int, 3>& feet;
    const std::vector<std::vector<std::pair<int, int>>>& inc;
    CapGuard& guard;
    std::vector<char> used;
    std::array<PathSeq, 3> legs;

    TriadSearcher(const Graph& g_, const std::array<int, 3>& feet_,
                  const std::vector<std::vector<std::pair<int, int>>>& inc_, CapGuard& guard_)
        : g(g_), feet(feet_), inc(inc_), guard(guard_), used(g_.n, 0) {}

    bool is_foot(int v) const { return v == feet[0] || v == feet[1] || v == feet[2]; }

    bool route(int center, int i) {
        if (i == 3) return true;
        PathSeq cur;
        cur.vertices = {center};
        return extend(center, i, cur);
    }

    bool extend(int center, int i, PathSeq& cur) {
        guard.tick();
        const int v = cur.vertices.back();
        for (const auto& [e, w] : inc[v]) {
            if (w == feet[i]) {
                // Feet are barred from leg interiors and pairwise distinct,
                // and interior marks stay owned by their DFS frames, so the
                // completed leg needs no extra bookkeeping.
                cur.vertices.push_back(w);
                cur.edges.push_back(e);
                legs[i] = cur;
                if (route(center, i + 1)) return true;
                cur.vertices.pop_back();
                cur.edges.pop_back();
            } else if (!used[w] && !is_foot(w)) {
                used[w] = 1;
                cur.vertices.push_back(w);
                cur.edges.push_back(e);
                if (extend(center, i, cur)) return true;
                used[w] = 0;
                cur.vertices.pop_back();
                cur.edges.pop_back();
            }
        }
        return false;
    }
};

}  // namespace

std::optional<Triad> find_triad(const Graph& g, const std::array<int, 3>& feet,
                                const CapConfig& caps) {
    for (int v : feet)
        if (v < 0 || v >= g.n) throw std::invalid_argument("find_triad: foot out of range");
    if (!distinct3(feet)) throw std::invalid_argument("find_triad: feet not distinct");
    CapGuard guard(caps, "find_triad");
    const auto inc = nonloop_incidence(g);
    for (int center = 0; center < g.n; ++center) {
        if (center == feet[0] || center == feet[1] || center == feet[2]) continue;
        TriadSearcher s(g, feet, inc, guard);
        s.used[center] = 1;
        if (s.route(center, 0)) {
            Triad t;
            t.center = center;
            t.legs = s.legs;
            return t;
        }
    }
    return std::nullopt;
}

bool certify_triad(const Graph& g, const Triad& t, std::string* why) {
    for (int i = 0; i < 3; ++i) {
        if (!certify_path(g, t.legs[i], why)) return false;
        if (t.legs[i].start() != t.center) return fail(why, "leg does not start at the center");
        if (t.legs[i].length() < 1) return fail(why, "leg has no edges");
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!intersection_equals(sorted_vertices(t.legs[i]), sorted_vertices(t.legs[j]),
                                     {t.center}))
                return fail(why, "legs share a vertex besides the center");
    return true;
}

namespace {

struct TripodSearcher {
    const Graph& g;
    const std::vector<std::vector<std::pair<int, int>>>& inc;
    CapGuard& guard;
    std::vector<char> on_theta, used;
    std::array<PathSeq, 3> spokes, legs;
    std::array<int, 3> feet{};

    TripodSearcher(const Graph& g_, const std::vector<std::vector<std::pair<int, int>>>& inc_,
                   CapGuard& guard_)
        : g(g_), inc(inc_), guard(guard_), on_theta(g_.n, 0), used(g_.n, 0) {}

    bool is_foot(int v) const { return v == feet[0] || v == feet[1] || v == feet[2]; }

    bool route_legs(int i) {
        if (i == 3) return true;
        const int f = feet[i];
        const auto interiors = path_interiors(spokes[i]);
        if (on_theta[f]) {
            // A foot on the theta must sit on its own spoke; the leg is the
            // single shared vertex.
            if (std::find(interiors.begin(), interiors.end(), f) == interiors.end()) return false;
            if (used[f]) return false;
            PathSeq single;
            single.vertices = {f};
            legs[i] = single;
            used[f] = 1;
            if (route_legs(i + 1)) return true;
            used[f] = 0;
            return false;
        }
        for (int u : interiors) {
            if (used[u]) continue;
            PathSeq cur;
            cur.vertices = {u};
            if (extend_leg(i, cur, f)) return true;
        }
        return false;
    }

    bool extend_leg(int i, PathSeq& cur, int target) {
        guard.tick();
        const int v = cur.vertices.back();
        for (const auto& [e, w] : inc[v]) {
            if (w == target) {
                // Feet are barred from leg interiors and pairwise distinct,
                // attachments live on the theta, and interior marks stay
                // owned by their DFS frames; nothing else to reserve.
                cur.vertices.push_back(w);
                cur.edges.push_back(e);
                legs[i] = cur;
                if (route_legs(i + 1)) return true;
                cur.vertices.pop_back();
                cur.edges.pop_back();
            } else if (!on_theta[w] && !used[w] && !is_foot(w)) {
                used[w] = 1;
                cur.vertices.push_back(w);
                cur.edges.push_back(e);
                if (extend_leg(i, cur, target)) return true;
                used[w] = 0;
                cur.vertices.pop_back();
                cur.edges.pop_back();
            }
        }
        return false;
    }
};

}  // namespace

std::optional<Tripod> find_tripod(const Graph& g, const std::array<int, 3>& feet,
                                  const CapConfig& caps) {
    for (int v : feet)
        if (v < 0 || v >= g.n) throw std::invalid_argument("find_tripod: foot out of range");
    if (!distinct3(feet)) throw std::invalid_argument("find_tripod: feet not distinct");
    CapGuard guard(caps, "find_tripod");
    const auto inc = nonloop_incidence(g);
    const std::vector<char> no_ban(g.n, 0);
    for (int a = 0; a < g.n; ++a) {
        if (a == feet[0] || a == feet[1] || a == feet[2]) continue;
        for (int b = a + 1; b < g.n; ++b) {
            if (b == feet[0] || b == feet[1] || b == feet[2]) continue;
            const auto paths = collect_paths(g, inc, a, b, no_ban, 1, guard);
            const int np = static_cast<int>(paths.size());
            if (np < 3) continue;
            std::vector<Mask> masks(np);
            for (int i = 0; i < np; ++i) masks[i] = vertex_mask(paths[i].vertices);
            const Mask ab = (Mask{1} << a) | (Mask{1} << b);
            for (int i = 0; i < np; ++i)
                for (int j = i + 1; j < np; ++j) {
                    if ((masks[i] & masks[j]) != ab) continue;
                    for (int k = j + 1; k < np; ++k) {
                        if ((masks[i] & masks[k]) != ab || (masks[j] & masks[k]) != ab) continue;
                        std::array<int, 3> order = {0, 1, 2};
                        do {
                            TripodSearcher s(g, inc, guard);
                            s.spokes = {paths[i], paths[j], paths[k]};
                            s.feet = {feet[order[0]], feet[order[1]], feet[order[2]]};
                            for (const auto& sp : s.spokes)
                                for (int v : sp.vertices) s.on_theta[v] = 1;
                            if (s.route_legs(0)) {
                                Tripod t;
                                t.a = a;
                                t.b = b;
                                t.spokes = s.spokes;
                                t.legs = s.legs;
                                // Legs follow the requested foot order.
                                std::array<PathSeq, 3> sp = t.spokes, lg = t.legs;
                                for (int pos = 0; pos < 3; ++pos) {
                                    t.spokes[order[pos]] = sp[pos];
                                    t.legs[order[pos]] = lg[pos];
                                }
                                return t;
                            }
                        } while (std::next_permutation(order.begin(), order.end()));
                    }
                }
        }
    }
    return std::nullopt;
}

bool certify_tripod(const Graph& g, const Tripod& t, std::string* why) {
    if (t.a < 0 || t.a >= g.n || t.b < 0 || t.b >= g.n || t.a == t.b)
        return fail(why, "invalid hubs");
    std::array<std::vector<int>, 3> sv;
    for (int i = 0; i < 3; ++i) {
        if (!certify_path(g, t.spokes[i], why)) return false;
        if (t.spokes[i].start() != t.a || t.spokes[i].end() != t.b)
            return fail(why, "spoke endpoints are not the hubs");
        if (t.spokes[i].length() < 2) return fail(why, "spoke has no interior vertex");
        sv[i] = sorted_vertices(t.spokes[i]);
    }
    const std::vector<int> ab = {std::min(t.a, t.b), std::max(t.a, t.b)};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!intersection_equals(sv[i], sv[j], ab))
                return fail(why, "spokes are not internally disjoint");

    std::vector<int> theta;
    for (int i = 0; i < 3; ++i) theta.insert(theta.end(), sv[i].begin(), sv[i].end());
    std::sort(theta.begin(), theta.end());
    theta.erase(std::unique(theta.begin(), theta.end()), theta.end());

    for (int i = 0; i < 3; ++i) {
        if (!certify_path(g, t.legs[i], why)) return false;
        const int u = t.legs[i].start();
        if (!t.spokes[i].visits(u) || u == t.a || u == t.b)
            return fail(why, "leg does not attach inside its spoke");
        for (int w : t.legs[i].vertices)
            if (w != u && std::binary_search(theta.begin(), theta.end(), w))
                return fail(why, "leg revisits the theta");
        const int f = t.legs[i].end();
        if (f == t.a || f == t.b) return fail(why, "foot equals a hub");
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            std::vector<int> inter;
            const auto li = sorted_vertices(t.legs[i]), lj = sorted_vertices(t.legs[j]);
            std::set_intersection(li.begin(), li.end(), lj.begin(), lj.end(),
                                  std::back_inserter(inter));
            if (!inter.empty()) return fail(why, "legs share a vertex");
        }
    const auto f = t.feet();
    if (!distinct3(f)) return fail(why, "feet not distinct");
    return true;
}

// ---------------------------------------------------------------------------
// Disjoint path pairs and linkages
// ---------------------------------------------------------------------------

namespace {

// All simple paths with >= 1 edge and both (distinct) ends in r, oriented
// from the smaller end to the larger end.
std::vector<PathSeq> paths_with_ends_in(const Graph& g,
                                        const std::vector<std::vector<std::pair<int, int>>>& inc,
                                        const std::vector<int>& r, CapGuard& guard) {
    std::vector<char> in_r(g.n, 0);
    for (int v : r) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("path ends: vertex out of range");
        in_r[v] = 1;
    }
    std::vector<int> starts;
    for (int v = 0; v < g.n; ++v)
        if (in_r[v]) starts.push_back(v);

    std::vector<PathSeq> out;
    std::vector<char> on_path(g.n, 0);
    PathSeq cur;
    int start = 0;
    std::function<void()> dfs = [&]() {
        guard.tick();
        const int v = cur.vertices.back();
        for (const auto& [e, w] : inc[v]) {
            if (on_path[w]) continue;
            on_path[w] = 1;
            cur.vertices.push_back(w);
            cur.edges.push_back(e);
            if (in_r[w] && w > start) out.push_back(cur);
            dfs();
            on_path[w] = 0;
            cur.vertices.pop_back();
            cur.edges.pop_back();
        }
    };
    for (int s : starts) {
        start = s;
        cur.vertices = {s};
        cur.edges.clear();
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[s] = 1;
        dfs();
    }
    return out;
}

}  // namespace

std::vector<std::pair<PathSeq, PathSeq>> enumerate_disjoint_path_pairs(const Graph& g,
                                                                       const std::vector<int>& r1,
                                                                       const std::vector<int>& r2,
                                                                       const CapConfig& caps) {
    require_mask_scale(g, "enumerate_disjoint_path_pairs");
    CapGuard guard(caps, "enumerate_disjoint_path_pairs");
    const auto inc = nonloop_incidence(g);
    const auto ps1 = paths_with_ends_in(g, inc, r1, guard);
    const auto ps2 = paths_with_ends_in(g, inc, r2, guard);
    std::vector<Mask> m1(ps1.size()), m2(ps2.size());
    for (size_t i = 0; i < ps1.size(); ++i) m1[i] = vertex_mask(ps1[i].vertices);
    for (size_t i = 0; i < ps2.size(); ++i) m2[i] = vertex_mask(ps2[i].vertices);
    std::vector<std::pair<PathSeq, PathSeq>> out;
    for (size_t i = 0; i < ps1.size(); ++i)
        for (size_t j = 0; j < ps2.size(); ++j) {
            guard.tick();
            if ((m1[i] & m2[j]) == 0) out.emplace_back(ps1[i], ps2[j]);
        }
    return out;
}

bool has_disjoint_linkage(const Graph& g, int u1, int s1, int u2, int s2, const CapConfig& caps) {
    for (int v : {u1, s1, u2, s2})
        if (v < 0 || v >= g.n) throw std::invalid_argument("linkage: vertex out of range");
    CapGuard guard(caps, "has_disjoint_linkage");
    const auto inc = nonloop_incidence(g);

    auto reaches = [&](int from, int to, const std::vector<char>& blocked) {
        if (blocked[from] || blocked[to]) return false;
        if (from == to) return true;
        std::vector<char> seen(g.n, 0);
        std::vector<int> stack{from};
        seen[from] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& [e, w] : inc[v]) {
                (void)e;
                if (seen[w] || blocked[w]) continue;
                if (w == to) return true;
                seen[w] = 1;
                stack.push_back(w);
            }
        }
        return false;
    };

    if (u1 == s1) {
        std::vector<char> blocked(g.n, 0);
        blocked[u1] = 1;
        return reaches(u2, s2, blocked);
    }

    std::vector<char> banned(g.n, 0);
    banned[u2] = banned[s2] = 1;
    if (banned[u1] || banned[s1]) return false;  // shared endpoints cannot be disjoint
    bool found = false;
    all_paths(g, inc, u1, s1, banned, 0, guard, [&](const PathSeq& p) {
        std::vector<char> blocked(g.n, 0);
        for (int v : p.vertices) blocked[v] = 1;
        if (u2 == s2 ? !blocked[u2] : reaches(u2, s2, blocked)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace twocycle
