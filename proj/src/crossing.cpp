#include "twocycle/crossing.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <utility>

#include "twocycle/intlattice.hpp"

namespace twocycle {

namespace {

// Sign of the cross product (b - a) x (c - a): +1 when a->b->c turns left.
int orient(const Point& a, const Point& b, const Point& c) {
    const Q det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return det.sign();
}

bool collinear_strictly_between(const Point& p, const Point& a, const Point& b) {
    if (orient(a, b, p) != 0) return false;
    const Q dot = (a.x - p.x) * (b.x - p.x) + (a.y - p.y) * (b.y - p.y);
    return dot.sign() < 0;  // p strictly inside the segment ab
}

// Transversal crossing of open segments ab and cd (no endpoint incidences,
// which genericity has already excluded for nonadjacent edges).
bool proper_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    const int o1 = orient(a, b, c), o2 = orient(a, b, d);
    const int o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

// Exact intersection point of two properly crossing segments.
std::pair<Q, Q> crossing_point(const Point& a, const Point& b, const Point& c, const Point& d) {
    const Q rx = b.x - a.x, ry = b.y - a.y;
    const Q sx = d.x - c.x, sy = d.y - c.y;
    const Q denom = rx * sy - ry * sx;  // nonzero for a transversal crossing
    const Q t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom;
    return {a.x + t * rx, a.y + t * ry};
}

bool set_why(std::string* why, std::string message) {
    if (why != nullptr) *why = std::move(message);
    return false;
}

}  // namespace

bool is_generic(const Graph& g, const Drawing& dr, std::string* why) {
    const int n = g.n;
    if (static_cast<int>(dr.position.size()) != n)
        return set_why(why, "drawing has " + std::to_string(dr.position.size()) +
                                " positions for " + std::to_string(n) + " vertices");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (dr.position[u] == dr.position[v])
                return set_why(why, "vertices " + std::to_string(u) + " and " +
                                        std::to_string(v) + " coincide");
    for (int v = 0; v < n; ++v)
        for (int e = 0; e < g.m(); ++e) {
            const Edge& ed = g.edges[e];
            if (ed.tail == v || ed.head == v) continue;
            if (collinear_strictly_between(dr.position[v], dr.position[ed.tail],
                                           dr.position[ed.head]))
                return set_why(why, "vertex " + std::to_string(v) + " lies inside edge " +
                                        g.edge_name(e));
        }
    for (int e = 0; e < g.m(); ++e)
        for (int f = e + 1; f < g.m(); ++f) {
            const Edge& a = g.edges[e];
            const Edge& b = g.edges[f];
            const bool same_pair = (a.tail == b.tail && a.head == b.head) ||
                                   (a.tail == b.head && a.head == b.tail);
            if (same_pair)
                return set_why(why, "edges " + g.edge_name(e) + " and " + g.edge_name(f) +
                                        " overlap along a segment");
            // Adjacent edges leaving a shared endpoint in the same collinear
            // direction overlap near that endpoint.
            int shared = -1, pa = -1, pb = -1;
            for (int x : {a.tail, a.head})
                for (int y : {b.tail, b.head})
                    if (x == y) shared = x;
            if (shared >= 0) {
                pa = (a.tail == shared) ? a.head : a.tail;
                pb = (b.tail == shared) ? b.head : b.tail;
                const Point& s = dr.position[shared];
                const Point& qa = dr.position[pa];
                const Point& qb = dr.position[pb];
                if (orient(s, qa, qb) == 0) {
                    const Q dot = (qa.x - s.x) * (qb.x - s.x) + (qa.y - s.y) * (qb.y - s.y);
                    if (dot.sign() > 0)
                        return set_why(why, "edges " + g.edge_name(e) + " and " +
                                                g.edge_name(f) + " overlap along a segment");
                }
            }
        }
    // With touching configurations excluded, every remaining incidence is a
    // transversal crossing; three segments through one point show up as two
    // crossing pairs with the same exact intersection point.
    std::map<std::pair<Q, Q>, std::pair<int, int>> seen;
    for (int e = 0; e < g.m(); ++e)
        for (int f = e + 1; f < g.m(); ++f) {
            if (g.edges_adjacent(e, f)) continue;
            const Edge& a = g.edges[e];
            const Edge& b = g.edges[f];
            if (!proper_cross(dr.position[a.tail], dr.position[a.head], dr.position[b.tail],
                              dr.position[b.head]))
                continue;
            const auto pt = crossing_point(dr.position[a.tail], dr.position[a.head],
                                           dr.position[b.tail], dr.position[b.head]);
            const auto [it, fresh] = seen.emplace(pt, std::make_pair(e, f));
            if (!fresh)
                return set_why(why, "edges " + g.edge_name(it->second.first) + ", " +
                                        g.edge_name(it->second.second) + " and " +
                                        g.edge_name(f) +
                                        " meet at a common interior point");
        }
    if (why != nullptr) why->clear();
    return true;
}

int signed_crossing(const Graph& g, const Drawing& dr, int f, int g_edge) {
    if (f < 0 || f >= g.m() || g_edge < 0 || g_edge >= g.m())
        throw std::invalid_argument("signed_crossing: edge index out of range");
    if (g.edges_adjacent(f, g_edge))
        throw std::invalid_argument("edges " + g.edge_name(f) + " and " + g.edge_name(g_edge) +
                                    " are adjacent");
    const Edge& a = g.edges[f];
    const Edge& b = g.edges[g_edge];
    const Point& a0 = dr.position[a.tail];
    const Point& a1 = dr.position[a.head];
    const Point& b0 = dr.position[b.tail];
    const Point& b1 = dr.position[b.head];
    if (!proper_cross(a0, a1, b0, b1)) return 0;
    const Q frame = (a1.x - a0.x) * (b1.y - b0.y) - (a1.y - a0.y) * (b1.x - b0.x);
    return frame.sign() > 0 ? 1 : -1;
}

Z kr_functional(const Graph& g, const Drawing& dr, const Form2& d) {
    Z total = 0;
    for (const auto& [pair, value] : d.entries) {
        if (g.edges_adjacent(pair.first, pair.second))
            throw std::invalid_argument("kr functional: entry at (e" +
                                        std::to_string(pair.first) + ",e" +
                                        std::to_string(pair.second) + ") is on adjacent edges");
        total += value * signed_crossing(g, dr, pair.first, pair.second);
    }
    return total;
}

Drawing random_generic_drawing(const Graph& g, std::uint64_t seed, int max_attempts) {
    for (int e = 0; e < g.m(); ++e)
        for (int f = e + 1; f < g.m(); ++f) {
            const Edge& a = g.edges[e];
            const Edge& b = g.edges[f];
            if ((a.tail == b.tail && a.head == b.head) ||
                (a.tail == b.head && a.head == b.tail))
                throw std::invalid_argument(
                    "graph has parallel edges; no generic straight-line drawing exists");
        }
    std::mt19937_64 rng(seed);
    constexpr std::uint64_t grid_mask = (1ull << 20) - 1;  // 2^20 x 2^20 grid
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Drawing dr;
        dr.position.resize(g.n);
        for (int v = 0; v < g.n; ++v) {
            dr.position[v].x = Q(Z(rng() & grid_mask));
            dr.position[v].y = Q(Z(rng() & grid_mask));
        }
        if (is_generic(g, dr)) return dr;
    }
    throw std::runtime_error("random_generic_drawing: no generic drawing after " +
                             std::to_string(max_attempts) + " attempts");
}

CrossingTrialReport run_crossing_trials(const Graph& g, std::uint64_t seed, int trials,
                                        const CapConfig& caps) {
    (void)caps;
    CrossingTrialReport report;
    report.trials = trials;
    const PairSpace ps = nonadjacent_pair_space(g);
    const SubLattice lat = two_cycle_lattice(g, SigmaMode::Plain);
    std::mt19937_64 rng(seed);

    const Drawing first = random_generic_drawing(g, rng());
    report.antisymmetry_ok = true;
    int pairs_checked = 0;
    for (const auto& [e, f] : ps.pairs) {
        if (e > f) continue;  // each unordered pair once
        if (signed_crossing(g, first, e, f) != -signed_crossing(g, first, f, e)) {
            report.antisymmetry_ok = false;
            report.detail = "antisymmetry fails at (e" + std::to_string(e) + ",e" +
                            std::to_string(f) + ")";
            return report;
        }
        ++pairs_checked;
    }

    for (int t = 0; t < trials; ++t) {
        const Drawing dr = random_generic_drawing(g, rng());
        std::vector<Z> coords(ps.dim(), Z(0));
        if (lat.rank() > 0 && t < lat.rank()) {
            for (int c = 0; c < ps.dim(); ++c) coords[c] = lat.basis.at(t, c);
        } else {
            for (int r = 0; r < lat.rank(); ++r) {
                const Z coeff = Z(static_cast<long long>(rng() % 7) - 3);
                if (coeff.is_zero()) continue;
                for (int c = 0; c < ps.dim(); ++c) coords[c] += coeff * lat.basis.at(r, c);
            }
        }
        const Form2 d = form_from_coordinates(ps, coords);
        const Z value = kr_functional(g, dr, d);
        if (value.is_zero()) {
            ++report.zero_values;
        } else if (report.detail.empty()) {
            report.detail = "trial " + std::to_string(t) + " gave kr = " + value.str();
        }
    }
    if (report.detail.empty())
        report.detail = std::to_string(report.zero_values) + "/" + std::to_string(trials) +
                        " trials gave kr = 0; antisymmetry verified on " +
                        std::to_string(pairs_checked) + " edge pairs";
    return report;
}

}  // namespace twocycle
