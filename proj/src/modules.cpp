#include "twocycle/modules.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace twocycle {
namespace {

std::string mode_word(SigmaMode mode) {
    switch (mode) {
        case SigmaMode::Plain: return "plain";
        case SigmaMode::Sym: return "sym";
        case SigmaMode::Skew: return "skew";
    }
    return "?";
}

std::string cycle_word(const OrientedCycle& c) {
    std::string out;
    for (size_t i = 0; i < c.vertices.size(); ++i) {
        if (i) out += '-';
        out += std::to_string(c.vertices[i]);
    }
    return out;
}

std::string pair_tag(SigmaMode mode, const OrientedCycle& c, const OrientedCycle& d) {
    std::string prefix = mode == SigmaMode::Plain ? "" : mode_word(mode) + " ";
    return prefix + "chi(" + cycle_word(c) + "|" + cycle_word(d) + ")";
}

std::string z_str(const Z& x) { return x.str(); }

// Integer x with x * rows == target, if one exists.
std::optional<std::vector<Z>> solve_combination(const IntMatrix& rows, const std::vector<Z>& target) {
    if (static_cast<int>(target.size()) != rows.cols && rows.rows > 0)
        throw std::logic_error("solve_combination: dimension mismatch");
    if (rows.rows == 0) {
        for (const Z& t : target)
            if (!t.is_zero()) return std::nullopt;
        return std::vector<Z>{};
    }
    const HnfResult hn = hermite_normal_form(rows);
    std::vector<Z> residual = target;
    std::vector<Z> y(rows.rows, Z(0));
    for (int i = 0; i < hn.h.rows; ++i) {
        int p = -1;
        for (int c = 0; c < hn.h.cols; ++c) {
            if (!hn.h.at(i, c).is_zero()) {
                p = c;
                break;
            }
        }
        if (p < 0) break;  // zero rows are collected at the bottom
        if (residual[p] % hn.h.at(i, p) != 0) return std::nullopt;
        y[i] = residual[p] / hn.h.at(i, p);
        if (!y[i].is_zero())
            for (int c = p; c < hn.h.cols; ++c) residual[c] -= y[i] * hn.h.at(i, c);
    }
    for (const Z& r : residual)
        if (!r.is_zero()) return std::nullopt;
    // x = y * U satisfies x * rows = y * (U * rows) = y * H = target.
    std::vector<Z> x(rows.rows, Z(0));
    for (int j = 0; j < rows.rows; ++j)
        for (int i = 0; i < rows.rows; ++i)
            if (!y[i].is_zero()) x[j] += y[i] * hn.u.at(i, j);
    return x;
}

IntMatrix forms_matrix(const PairSpace& ps, const std::vector<Generator>& gens) {
    IntMatrix m(static_cast<int>(gens.size()), ps.dim());
    for (size_t i = 0; i < gens.size(); ++i) {
        std::vector<Z> row = form_coordinates(ps, gens[i].form);
        m.a[i] = std::move(row);
    }
    return m;
}

SubLattice single_row_lattice(const PairSpace& ps, const Form2& f) {
    IntMatrix m(1, ps.dim());
    m.a[0] = form_coordinates(ps, f);
    return make_sublattice(ps.dim(), m, ps.index_key());
}

bool cycle_inside(const OrientedCycle& c, const std::vector<int>& side_edges) {
    for (int e : c.edges)
        if (!std::binary_search(side_edges.begin(), side_edges.end(), e)) return false;
    return true;
}

void validate_separation(const Graph& g, const Separation& sep) {
    std::vector<char> seen(g.m(), 0);
    for (int e : sep.side1_edges) {
        if (e < 0 || e >= g.m() || seen[e]) throw std::invalid_argument("separation: bad side-1 edge list");
        seen[e] = 1;
    }
    for (int e : sep.side2_edges) {
        if (e < 0 || e >= g.m() || seen[e]) throw std::invalid_argument("separation: side-2 edge repeats or collides with side 1");
        seen[e] = 1;
    }
    for (int e = 0; e < g.m(); ++e)
        if (!seen[e]) throw std::invalid_argument("separation: edge " + g.edge_name(e) + " belongs to neither side");
    std::vector<int> inter;
    std::set_intersection(sep.side1_vertices.begin(), sep.side1_vertices.end(),
                          sep.side2_vertices.begin(), sep.side2_vertices.end(),
                          std::back_inserter(inter));
    if (inter != sep.shared) throw std::invalid_argument("separation: shared vertices are not the side intersection");
    if (sep.side1_vertices.size() == sep.shared.size() || sep.side2_vertices.size() == sep.shared.size())
        throw std::invalid_argument("separation: a side has no private vertex");
    for (int s = 0; s < 2; ++s) {
        const auto& verts = s == 0 ? sep.side1_vertices : sep.side2_vertices;
        const auto& edges = s == 0 ? sep.side1_edges : sep.side2_edges;
        for (int e : edges)
            if (!std::binary_search(verts.begin(), verts.end(), g.edges[e].tail) ||
                !std::binary_search(verts.begin(), verts.end(), g.edges[e].head))
                throw std::invalid_argument("separation: edge " + g.edge_name(e) + " leaves its side");
    }
}

// The side as a standalone graph plus every separator-internal edge of g
// (those are canonically stored on side 1 but usable by paths in either side).
struct LocalSide {
    Graph graph;
    std::vector<int> vertex_of;           // local -> host
    std::vector<int> local_of;            // host -> local, -1 absent
};

LocalSide side_with_separator_edges(const Graph& g, const Separation& sep, int side) {
    const auto& verts = side == 1 ? sep.side1_vertices : sep.side2_vertices;
    const auto& edges = side == 1 ? sep.side1_edges : sep.side2_edges;
    LocalSide out;
    out.vertex_of = verts;
    out.local_of.assign(g.n, -1);
    for (size_t i = 0; i < verts.size(); ++i) out.local_of[verts[i]] = static_cast<int>(i);
    out.graph.n = static_cast<int>(verts.size());
    std::set<int> edge_set(edges.begin(), edges.end());
    for (int e = 0; e < g.m(); ++e) {
        const bool internal = std::binary_search(sep.shared.begin(), sep.shared.end(), g.edges[e].tail) &&
                              std::binary_search(sep.shared.begin(), sep.shared.end(), g.edges[e].head);
        if (internal) edge_set.insert(e);
    }
    for (int e : edge_set)
        out.graph.edges.push_back(Edge{out.local_of[g.edges[e].tail], out.local_of[g.edges[e].head]});
    return out;
}

// Does the orientation of `sep` with G1 = `side` witness a sided (R, S)
// separation?
bool sided_separation(const Graph& g, const Separation& sep, int side,
                      const std::vector<int>& r, const std::vector<int>& s,
                      const CapConfig& caps) {
    const auto& g1_vertices = side == 1 ? sep.side1_vertices : sep.side2_vertices;
    for (int v : g1_vertices)
        if (std::find(s.begin(), s.end(), v) != s.end()) return false;
    const int s1 = sep.shared[0];
    const int s2 = sep.shared[1];
    std::vector<int> candidates;
    for (int v : g1_vertices)
        if (!std::binary_search(sep.shared.begin(), sep.shared.end(), v) &&
            std::find(r.begin(), r.end(), v) != r.end())
            candidates.push_back(v);
    if (candidates.size() < 2) return false;
    const LocalSide local = side_with_separator_edges(g, sep, side);
    const int ls1 = local.local_of[s1];
    const int ls2 = local.local_of[s2];
    for (size_t i = 0; i < candidates.size(); ++i) {
        for (size_t j = 0; j < candidates.size(); ++j) {
            if (i == j) continue;
            const int u1 = local.local_of[candidates[i]];
            const int u2 = local.local_of[candidates[j]];
            if (has_disjoint_linkage(local.graph, u1, ls1, u2, ls2, caps) &&
                has_disjoint_linkage(local.graph, u1, ls2, u2, ls1, caps))
                return true;
        }
    }
    return false;
}

struct ShapeInfo {
    enum Kind { None, Quadrilateral, Hexagonal } kind = None;
};

// After re-orienting edges toward u and toward v, is the (u, v) block of t a
// quadrilateral displacement alpha (f1-f2)(x)(g1-g2) or the hexagonal 6-term
// displacement of the K5 pattern?
ShapeInfo classify_displacement(const Graph& g, const PuvTensor& t) {
    std::map<int, std::map<int, Z>> rows;
    std::set<int> cols;
    for (const auto& [pair, value] : t.entries) {
        if (value.is_zero()) continue;
        const Z norm = value * incidence_sign(g, t.u, pair.first) * incidence_sign(g, t.v, pair.second);
        rows[pair.first][pair.second] = norm;
        cols.insert(pair.second);
    }
    ShapeInfo info;
    int nonzeros = 0;
    Z magnitude(0);
    std::map<int, Z> col_sum;
    std::map<int, int> col_count;
    bool uniform = true;
    bool rows_balanced = true;
    std::vector<int> row_counts;
    for (const auto& [e, row] : rows) {
        Z row_sum(0);
        int count = 0;
        for (const auto& [f, val] : row) {
            ++nonzeros;
            ++count;
            row_sum += val;
            col_sum[f] += val;
            ++col_count[f];
            if (magnitude.is_zero()) magnitude = abs(val);
            if (abs(val) != magnitude) uniform = false;
        }
        row_counts.push_back(count);
        if (!row_sum.is_zero()) rows_balanced = false;
    }
    bool cols_balanced = true;
    for (const auto& [f, sum] : col_sum)
        if (!sum.is_zero()) cols_balanced = false;
    if (!uniform || !rows_balanced || !cols_balanced) return info;
    const bool rows2 = std::all_of(row_counts.begin(), row_counts.end(), [](int c) { return c == 2; });
    const bool cols2 = std::all_of(col_count.begin(), col_count.end(), [](const auto& kv) { return kv.second == 2; });
    if (nonzeros == 4 && rows.size() == 2 && cols.size() == 2 && rows2 && cols2)
        info.kind = ShapeInfo::Quadrilateral;
    else if (nonzeros == 6 && rows.size() == 3 && cols.size() == 3 && rows2 && cols2)
        info.kind = ShapeInfo::Hexagonal;
    return info;
}

int edge_between(const Graph& g, int u, int v) {
    for (int e = 0; e < g.m(); ++e)
        if ((g.edges[e].tail == u && g.edges[e].head == v) ||
            (g.edges[e].tail == v && g.edges[e].head == u))
            return e;
    return -1;
}

std::vector<Form2> lattice_basis_forms(const PairSpace& ps, const SubLattice& lat) {
    std::vector<Form2> out;
    out.reserve(lat.rank());
    for (int i = 0; i < lat.rank(); ++i) out.push_back(form_from_coordinates(ps, lat.basis.a[i]));
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// GeneratorSet
// ---------------------------------------------------------------------------

std::string family_name(GeneratorFamily f) {
    switch (f) {
        case GeneratorFamily::CircuitPair: return "circuit-pair";
        case GeneratorFamily::Kuratowski: return "kuratowski";
        case GeneratorFamily::Quad: return "quad";
    }
    return "?";
}

GeneratorSet::GeneratorSet(const Graph& g, SigmaMode mode)
    : mode_(mode), space_(nonadjacent_pair_space(g)) {}

void GeneratorSet::add(const Graph& g, GeneratorFamily family, std::string tag, Form2 form) {
    std::string why;
    if (!is_two_cycle(g, form, &why))
        throw std::logic_error("generator " + tag + " is not a 2-cycle: " + why);
    if (!sigma_complement_apply(mode_, form).is_zero())
        throw std::logic_error("generator " + tag + " is not in the " + mode_word(mode_) + " class");
    gens_.push_back(Generator{family, std::move(tag), std::move(form)});
    span_.reset();
}

const SubLattice& GeneratorSet::span() const {
    if (!span_) span_ = make_sublattice(space_.dim(), forms_matrix(space_, gens_), space_.index_key());
    return *span_;
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

GeneratorSet build_B(const Graph& g, SigmaMode mode, const CapConfig& caps) {
    GeneratorSet out(g, mode);
    for (const auto& [c, d] : enumerate_disjoint_cycle_pairs(g, caps)) {
        if (mode != SigmaMode::Plain && !(c.vertices < d.vertices)) continue;
        Form2 form = sigma_apply(mode, circuit_pair_form(g, c, d));
        if (form.is_zero()) continue;
        out.add(g, GeneratorFamily::CircuitPair, pair_tag(mode, c, d), std::move(form));
    }
    return out;
}

GeneratorSet build_B_uv(const Graph& g, int u, int v, const CapConfig& caps) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n)
        throw std::invalid_argument("build_B_uv: vertex out of range");
    GeneratorSet out(g, SigmaMode::Plain);
    for (const auto& [c, d] : enumerate_disjoint_cycle_pairs(g, caps)) {
        if (std::find(c.vertices.begin(), c.vertices.end(), u) == c.vertices.end()) continue;
        if (std::find(d.vertices.begin(), d.vertices.end(), v) == d.vertices.end()) continue;
        out.add(g, GeneratorFamily::CircuitPair, pair_tag(SigmaMode::Plain, c, d),
                circuit_pair_form(g, c, d));
    }
    return out;
}

GeneratorSet build_kuratowski_span(const Graph& g, SigmaMode mode, const CapConfig& caps) {
    GeneratorSet out(g, mode);
    if (mode == SigmaMode::Skew) return out;  // d_H - T(d_H) = 0
    for (KuratowskiKind kind : {KuratowskiKind::K5, KuratowskiKind::K33}) {
        const std::string word = kind == KuratowskiKind::K5 ? "k5" : "k33";
        const auto subs = enumerate_kuratowski_subdivisions(g, kind, caps);
        for (size_t i = 0; i < subs.size(); ++i) {
            Form2 form = kuratowski_form(g, subs[i]);
            if (transpose(form) != form)
                throw std::logic_error("kuratowski form " + word + "#" + std::to_string(i) +
                                       " is unexpectedly asymmetric");
            out.add(g, GeneratorFamily::Kuratowski, word + "#" + std::to_string(i), std::move(form));
        }
    }
    return out;
}

GeneratorSet build_quad_span(const Graph& g, SigmaMode mode, const CapConfig& caps) {
    GeneratorSet out(g, mode);
    const auto quads = enumerate_quads(g, caps);
    const std::array<std::array<int, 3>, 3> rotations = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
    for (size_t i = 0; i < quads.size(); ++i) {
        for (int rot = 0; rot < 3; ++rot) {
            const Quad rq = relabel_quad(quads[i], rotations[rot]);
            for (int s : {rq.a, rq.b}) {
                for (int t : {rq.c, rq.d}) {
                    const std::string base = "quad#" + std::to_string(i) + "r" + std::to_string(rot) +
                                             "[s=" + std::to_string(s) + ",t=" + std::to_string(t) + "]";
                    const Form2 q = quad_form(g, rq, s, t);
                    if (mode == SigmaMode::Plain) {
                        out.add(g, GeneratorFamily::Quad, base, q);
                        out.add(g, GeneratorFamily::Quad, "T " + base, transpose(q));
                    } else {
                        Form2 image = sigma_apply(mode, q);
                        if (image.is_zero()) continue;
                        out.add(g, GeneratorFamily::Quad, mode_word(mode) + " " + base, std::move(image));
                    }
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Separation submodules
// ---------------------------------------------------------------------------

SubLattice build_S_sigma(const Graph& g, const Separation& sep, SigmaMode mode) {
    validate_separation(g, sep);
    const PairSpace ps = nonadjacent_pair_space(g);
    const SubLattice lat = two_cycle_lattice(g, mode);
    std::vector<char> on1(g.m(), 0);
    for (int e : sep.side1_edges) on1[e] = 1;
    std::vector<int> constrained;
    for (int i = 0; i < ps.dim(); ++i) {
        const auto& [e, f] = ps.pairs[i];
        if (on1[e] == on1[f]) constrained.push_back(i);
    }
    if (lat.rank() == 0 || constrained.empty()) return lat;
    IntMatrix m(static_cast<int>(constrained.size()), lat.rank());
    for (size_t r = 0; r < constrained.size(); ++r)
        for (int i = 0; i < lat.rank(); ++i) m.at(static_cast<int>(r), i) = lat.basis.at(i, constrained[r]);
    const SubLattice combos = kernel_basis(m);
    return make_sublattice(ps.dim(), mat_mul(combos.basis, lat.basis), ps.index_key());
}

GeneratorSet build_B_sigma_sep(const Graph& g, const Separation& sep, SigmaMode mode,
                               const CapConfig& caps) {
    validate_separation(g, sep);
    GeneratorSet out(g, mode);
    for (const auto& [c, d] : enumerate_disjoint_cycle_pairs(g, caps)) {
        const bool cross = (cycle_inside(c, sep.side1_edges) && cycle_inside(d, sep.side2_edges)) ||
                           (cycle_inside(c, sep.side2_edges) && cycle_inside(d, sep.side1_edges));
        if (!cross) continue;
        if (mode != SigmaMode::Plain && !(c.vertices < d.vertices)) continue;
        Form2 form = sigma_apply(mode, circuit_pair_form(g, c, d));
        if (form.is_zero()) continue;
        out.add(g, GeneratorFamily::CircuitPair, pair_tag(mode, c, d), std::move(form));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Path-pair tensor module
// ---------------------------------------------------------------------------

int LinkageSpace::index_of(int u, int v) const {
    const auto i1 = std::lower_bound(r1.begin(), r1.end(), u);
    const auto i2 = std::lower_bound(r2.begin(), r2.end(), v);
    if (i1 == r1.end() || *i1 != u || i2 == r2.end() || *i2 != v) return -1;
    return static_cast<int>((i1 - r1.begin()) * r2.size() + (i2 - r2.begin()));
}

std::vector<std::string> LinkageSpace::index_key() const {
    std::vector<std::string> key;
    key.reserve(dim());
    for (int a : r1)
        for (int b : r2) key.push_back("(v" + std::to_string(a) + ",v" + std::to_string(b) + ")");
    return key;
}

LinkageSpace make_linkage_space(const Graph& g, std::vector<int> r1, std::vector<int> r2) {
    for (int v : r1)
        if (v < 0 || v >= g.n) throw std::invalid_argument("linkage space: vertex out of range in R1");
    for (int v : r2)
        if (v < 0 || v >= g.n) throw std::invalid_argument("linkage space: vertex out of range in R2");
    std::sort(r1.begin(), r1.end());
    r1.erase(std::unique(r1.begin(), r1.end()), r1.end());
    std::sort(r2.begin(), r2.end());
    r2.erase(std::unique(r2.begin(), r2.end()), r2.end());
    return LinkageSpace{std::move(r1), std::move(r2)};
}

std::vector<Z> pi_of_path_pair(const LinkageSpace& space, const PathSeq& p1, const PathSeq& p2) {
    if (p1.start() == p1.end() || p2.start() == p2.end())
        throw std::invalid_argument("pi_of_path_pair: a path has equal ends");
    const int a1 = space.index_of(p1.start(), p2.start());
    const int a2 = space.index_of(p1.start(), p2.end());
    const int b1 = space.index_of(p1.end(), p2.start());
    const int b2 = space.index_of(p1.end(), p2.end());
    if (a1 < 0 || a2 < 0 || b1 < 0 || b2 < 0)
        throw std::invalid_argument("pi_of_path_pair: path ends outside (R1, R2)");
    std::vector<Z> out(space.dim(), Z(0));
    out[a1] += 1;
    out[a2] -= 1;
    out[b1] -= 1;
    out[b2] += 1;
    return out;
}

SubLattice linkage_module(const Graph& g, const LinkageSpace& space, const CapConfig& caps) {
    const auto pairs = enumerate_disjoint_path_pairs(g, space.r1, space.r2, caps);
    IntMatrix rows(static_cast<int>(pairs.size()), space.dim());
    for (size_t i = 0; i < pairs.size(); ++i)
        rows.a[i] = pi_of_path_pair(space, pairs[i].first, pairs[i].second);
    return make_sublattice(space.dim(), rows, space.index_key());
}

bool is_RS_connected(const Graph& g, const std::vector<int>& r, const std::vector<int>& s,
                     const CapConfig& caps) {
    for (int v : r)
        if (v < 0 || v >= g.n) throw std::invalid_argument("is_RS_connected: vertex out of range in R");
    for (int v : s)
        if (v < 0 || v >= g.n) throw std::invalid_argument("is_RS_connected: vertex out of range in S");
    if (vertex_connectivity(g) < 2) return false;
    for (const Separation& sep : enumerate_separations(g, 2)) {
        for (int side : {1, 2}) {
            if (sided_separation(g, sep, side, r, s, caps)) return false;
            if (sided_separation(g, sep, side, s, r, caps)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Projections at an edge
// ---------------------------------------------------------------------------

int PuvSpace::index_of(int e, int f) const {
    const auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(e, f));
    if (it == pairs.end() || *it != std::make_pair(e, f)) return -1;
    return static_cast<int>(it - pairs.begin());
}

std::vector<std::string> PuvSpace::index_key() const {
    std::vector<std::string> key;
    key.reserve(pairs.size());
    for (const auto& [e, f] : pairs)
        key.push_back("P(e" + std::to_string(e) + ",e" + std::to_string(f) + ")");
    return key;
}

PuvSpace puv_space(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n)
        throw std::invalid_argument("puv_space: vertex out of range");
    PuvSpace out;
    out.u = u;
    out.v = v;
    for (int e : g.incident_edges(u))
        for (int f : g.incident_edges(v))
            if (!g.edges_adjacent(e, f)) out.pairs.emplace_back(e, f);
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

std::vector<Z> puv_coordinates(const PuvSpace& space, const PuvTensor& t) {
    if (t.u != space.u || t.v != space.v)
        throw std::invalid_argument("puv_coordinates: tensor and space use different vertices");
    std::vector<Z> out(space.dim(), Z(0));
    for (const auto& [pair, value] : t.entries) {
        if (value.is_zero()) continue;
        const int idx = space.index_of(pair.first, pair.second);
        if (idx < 0)
            throw std::invalid_argument("puv_coordinates: entry at (e" + std::to_string(pair.first) +
                                        ",e" + std::to_string(pair.second) + ") is outside the space");
        out[idx] = value;
    }
    return out;
}

SubLattice puv_image(const Graph& g, const GeneratorSet& gens, const PuvSpace& space) {
    IntMatrix rows(gens.size(), space.dim());
    for (int i = 0; i < gens.size(); ++i)
        rows.a[i] = puv_coordinates(space, puv(g, gens.generators()[i].form, space.u, space.v));
    return make_sublattice(space.dim(), rows, space.index_key());
}

// ---------------------------------------------------------------------------
// Decomposition
// ---------------------------------------------------------------------------

namespace {

std::vector<GeneratorFamily> dedupe_families(const std::vector<GeneratorFamily>& families) {
    std::vector<GeneratorFamily> out;
    for (GeneratorFamily f : families)
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    return out;
}

GeneratorSet build_family(const Graph& g, GeneratorFamily family, SigmaMode mode,
                          const CapConfig& caps) {
    switch (family) {
        case GeneratorFamily::CircuitPair: return build_B(g, mode, caps);
        case GeneratorFamily::Kuratowski: return build_kuratowski_span(g, mode, caps);
        case GeneratorFamily::Quad: return build_quad_span(g, mode, caps);
    }
    throw std::logic_error("unknown generator family");
}

}  // namespace

std::string DecompositionReport::describe() const {
    if (rejected) return "rejected: " + message;
    if (!success) return "no decomposition: " + message;
    if (coefficients.empty()) return "decomposed: the zero combination";
    std::string out = "decomposed:";
    for (const auto& [tag, coeff] : coefficients)
        out += " + (" + z_str(coeff) + ")*" + tag;
    return out;
}

DecompositionReport decompose(const Graph& g, const Form2& d,
                              const std::vector<GeneratorFamily>& families, SigmaMode mode,
                              const CapConfig& caps) {
    DecompositionReport report;
    report.mode = mode;
    std::string why;
    if (!is_two_cycle(g, d, &why)) {
        report.rejected = true;
        report.message = "input is not a 2-cycle: " + why;
        return report;
    }
    if (!sigma_complement_apply(mode, d).is_zero()) {
        report.rejected = true;
        report.message = mode == SigmaMode::Sym ? "input is not symmetric" : "input is not antisymmetric";
        return report;
    }
    const PairSpace ps = nonadjacent_pair_space(g);
    std::vector<Generator> all;
    for (GeneratorFamily family : dedupe_families(families)) {
        GeneratorSet set = build_family(g, family, mode, caps);
        for (auto& gen : set.generators()) all.push_back(gen);
    }
    const IntMatrix rows = forms_matrix(ps, all);
    const std::vector<Z> target = form_coordinates(ps, d);
    const auto solution = solve_combination(rows, target);
    if (!solution) {
        const SubLattice span = make_sublattice(ps.dim(), rows, ps.index_key());
        const SubLattice extended = lattice_sum(span, single_row_lattice(ps, d));
        report.failure = quotient_invariants(span, extended);
        report.message = "target escapes the span; quotient of span + <target> over span: " +
                         report.failure.describe();
        return report;
    }
    Form2 check;
    for (size_t i = 0; i < all.size(); ++i) {
        if ((*solution)[i].is_zero()) continue;
        report.coefficients.emplace_back(all[i].tag, (*solution)[i]);
        check = form_sum(check, form_scale((*solution)[i], all[i].form));
    }
    if (check != d) throw std::logic_error("decompose: reconstruction mismatch");
    report.success = true;
    report.message = "exact decomposition over " + std::to_string(report.coefficients.size()) +
                     " generators";
    return report;
}

bool check_decomposition(const Graph& g, const Form2& d,
                         const std::vector<GeneratorFamily>& families, SigmaMode mode,
                         const std::vector<std::pair<std::string, Z>>& coefficients,
                         std::string* why, const CapConfig& caps) {
    std::map<std::string, const Form2*> by_tag;
    std::vector<GeneratorSet> sets;
    sets.reserve(3);
    for (GeneratorFamily family : dedupe_families(families)) sets.push_back(build_family(g, family, mode, caps));
    for (const GeneratorSet& set : sets)
        for (const Generator& gen : set.generators()) by_tag[gen.tag] = &gen.form;
    Form2 total;
    for (const auto& [tag, coeff] : coefficients) {
        const auto it = by_tag.find(tag);
        if (it == by_tag.end()) {
            if (why) *why = "unknown generator tag: " + tag;
            return false;
        }
        total = form_sum(total, form_scale(coeff, *it->second));
    }
    if (total != d) {
        if (why) *why = "combination does not reproduce the target form";
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Theorem drivers
// ---------------------------------------------------------------------------

std::string TheoremReport::describe() const {
    const std::string head = !applicable    ? "NOT APPLICABLE"
                             : inconclusive ? "INCONCLUSIVE"
                             : pass         ? "PASS"
                                            : "FAIL";
    return "[" + head + "] " + statement + (detail.empty() ? "" : " -- " + detail);
}

TheoremReport verify_main_theorem(const Graph& g, SigmaMode mode, const CapConfig& caps) {
    TheoremReport report;
    report.statement = "structure theorem for L^" + mode_word(mode);
    try {
        const SubLattice lat = two_cycle_lattice(g, mode);
        const GeneratorSet b = build_B(g, mode, caps);
        SubLattice total = b.span();
        std::string counts = "circuit pairs " + std::to_string(b.size());
        if (mode != SigmaMode::Skew) {
            const GeneratorSet kur = build_kuratowski_span(g, mode, caps);
            total = lattice_sum(total, kur.span());
            counts += ", kuratowski " + std::to_string(kur.size());
        }
        if (mode != SigmaMode::Sym) {
            const GeneratorSet quads = build_quad_span(g, mode, caps);
            total = lattice_sum(total, quads.span());
            counts += ", quad " + std::to_string(quads.size());
        }
        const QuotientReport q = quotient_invariants(total, lat);
        report.pass = q.trivial();
        report.detail = "L^" + mode_word(mode) + " rank " + std::to_string(lat.rank()) +
                        "; span rank " + std::to_string(total.rank()) + " (" + counts +
                        "); quotient " + q.describe();
    } catch (const CapExceeded& ex) {
        report.inconclusive = true;
        report.detail = std::string("enumeration cap reached: ") + ex.what();
    }
    return report;
}

TheoremReport verify_kuratowski_connected(const Graph& g, const CapConfig& caps) {
    TheoremReport report;
    report.statement = "Kuratowski-connected structure facts";
    try {
        if (!is_kuratowski_connected(g)) {
            report.applicable = false;
            report.detail = "graph is not Kuratowski-connected; nothing to check";
            return report;
        }
        const PairSpace ps = nonadjacent_pair_space(g);
        const SubLattice lat_plain = two_cycle_lattice(g, SigmaMode::Plain);
        const SubLattice lat_sym = two_cycle_lattice(g, SigmaMode::Sym);
        const SubLattice lat_skew = two_cycle_lattice(g, SigmaMode::Skew);
        const GeneratorSet b_plain = build_B(g, SigmaMode::Plain, caps);
        const GeneratorSet b_sym = build_B(g, SigmaMode::Sym, caps);
        const GeneratorSet b_skew = build_B(g, SigmaMode::Skew, caps);
        const GeneratorSet kur = build_kuratowski_span(g, SigmaMode::Plain, caps);
        const GeneratorSet quads = build_quad_span(g, SigmaMode::Plain, caps);

        std::vector<std::string> lines;
        bool ok = true;

        const bool plain_ok = lattice_equal(lattice_sum(b_plain.span(), kur.span()), lat_plain);
        ok = ok && plain_ok;
        lines.push_back(std::string("L = B + Kur: ") + (plain_ok ? "yes" : "NO"));
        const bool sym_ok =
            lattice_equal(lattice_sum(b_sym.span(), build_kuratowski_span(g, SigmaMode::Sym, caps).span()), lat_sym);
        ok = ok && sym_ok;
        lines.push_back(std::string("L^sym = B^sym + Kur: ") + (sym_ok ? "yes" : "NO"));
        const bool skew_ok = lattice_equal(b_skew.span(), lat_skew);
        ok = ok && skew_ok;
        lines.push_back(std::string("L^skew = B^skew: ") + (skew_ok ? "yes" : "NO"));

        int reduced = 0;
        bool quads_ok = true;
        for (const Generator& gen : quads.generators()) {
            const std::vector<Z> coords = form_coordinates(ps, gen.form);
            bool found = membership(coords, b_plain.span()).has_value();
            if (!found) {
                for (const Generator& k : kur.generators()) {
                    const Form2 shifted = form_diff(gen.form, k.form);
                    if (membership(form_coordinates(ps, shifted), b_plain.span())) {
                        found = true;
                        break;
                    }
                }
            }
            if (found)
                ++reduced;
            else {
                quads_ok = false;
                lines.push_back("quad form " + gen.tag + " is neither in B nor Kuratowski-shifted into B");
            }
        }
        ok = ok && quads_ok;
        lines.push_back("quad reduction: " + std::to_string(reduced) + "/" +
                        std::to_string(quads.size()));

        bool pairs_ok = true;
        int pair_count = 0;
        const auto& klist = kur.generators();
        for (size_t i = 0; i < klist.size(); ++i) {
            for (size_t j = i + 1; j < klist.size(); ++j) {
                ++pair_count;
                const bool minus = membership(
                    form_coordinates(ps, form_diff(klist[i].form, klist[j].form)), b_plain.span()).has_value();
                const bool plus = minus || membership(
                    form_coordinates(ps, form_sum(klist[i].form, klist[j].form)), b_plain.span()).has_value();
                if (!plus) {
                    pairs_ok = false;
                    lines.push_back("pair (" + klist[i].tag + ", " + klist[j].tag +
                                    "): neither difference nor sum lies in B");
                }
            }
        }
        ok = ok && pairs_ok;
        lines.push_back("kuratowski pairs with d_H +- d_H' in B: " + std::to_string(pair_count) +
                        " checked");

        if (!klist.empty() && !lattice_equal(b_plain.span(), lat_plain)) {
            bool single = false;
            for (const Generator& k : klist) {
                if (lattice_equal(lattice_sum(b_plain.span(), single_row_lattice(ps, k.form)), lat_plain)) {
                    single = true;
                    lines.push_back("single generator: L = B + Z*" + k.tag);
                    break;
                }
            }
            ok = ok && single;
            if (!single) lines.push_back("NO single Kuratowski form closes the gap L/B");
        } else {
            lines.push_back("L = B already (0 Kuratowski generators needed)");
        }

        report.pass = ok;
        std::string joined;
        for (const std::string& line : lines) joined += (joined.empty() ? "" : "; ") + line;
        report.detail = joined;
    } catch (const CapExceeded& ex) {
        report.inconclusive = true;
        report.detail = std::string("enumeration cap reached: ") + ex.what();
    }
    return report;
}

TheoremReport verify_separation_lemma(const Graph& g, const Separation& sep, SigmaMode mode,
                                      const CapConfig& caps) {
    TheoremReport report;
    report.statement = "separation lemma (order " + std::to_string(sep.order()) + ", " +
                       mode_word(mode) + ")";
    try {
        validate_separation(g, sep);
        if (sep.order() > 3) {
            report.applicable = false;
            report.detail = "only separations of order <= 3 are covered";
            return report;
        }
        const int need = std::max(1, sep.order());
        if (vertex_connectivity(g) < need) {
            report.applicable = false;
            report.detail = "graph is not " + std::to_string(need) + "-connected";
            return report;
        }
        const SubLattice s_lat = build_S_sigma(g, sep, mode);
        const GeneratorSet b_sep = build_B_sigma_sep(g, sep, mode, caps);
        const QuotientReport contained = quotient_invariants(b_sep.span(), s_lat);
        if (!contained.contained) {
            report.pass = false;
            report.detail = "B^sigma escapes S^sigma: " + contained.witness;
            return report;
        }
        SubLattice total = b_sep.span();
        std::string extra;
        if (sep.order() == 3) {
            const SubLattice s_plain = build_S_sigma(g, sep, SigmaMode::Plain);
            const GeneratorSet quads = build_quad_span(g, SigmaMode::Plain, caps);
            const PairSpace ps = nonadjacent_pair_space(g);
            int used = 0;
            for (const Generator& gen : quads.generators()) {
                if (!membership(form_coordinates(ps, gen.form), s_plain)) continue;
                Form2 image = sigma_apply(mode, gen.form);
                if (image.is_zero()) continue;
                total = lattice_sum(total, single_row_lattice(ps, image));
                ++used;
            }
            extra = "; quad forms inside S: " + std::to_string(used);
        }
        const QuotientReport q = quotient_invariants(total, s_lat);
        report.pass = q.trivial();
        report.detail = "S rank " + std::to_string(s_lat.rank()) + ", B rank " +
                        std::to_string(b_sep.span().rank()) + extra + "; quotient " + q.describe();
    } catch (const CapExceeded& ex) {
        report.inconclusive = true;
        report.detail = std::string("enumeration cap reached: ") + ex.what();
    }
    return report;
}

TheoremReport verify_sym_quad_reduction(const Graph& g, const CapConfig& caps) {
    TheoremReport report;
    report.statement = "symmetrized quad forms lie in the Kuratowski span";
    try {
        const PairSpace ps = nonadjacent_pair_space(g);
        const GeneratorSet kur = build_kuratowski_span(g, SigmaMode::Plain, caps);
        const GeneratorSet quads = build_quad_span(g, SigmaMode::Plain, caps);
        const auto& klist = kur.generators();
        bool ok = true;
        int with_short_certificate = 0;
        int checked = 0;
        std::vector<std::string> failures;
        for (const Generator& gen : quads.generators()) {
            if (gen.tag.rfind("T ", 0) == 0) continue;  // transpose has the same symmetrization
            ++checked;
            const Form2 target = sigma_apply(SigmaMode::Sym, gen.form);
            bool certified = target.is_zero();
            for (size_t i = 0; !certified && i < klist.size(); ++i) {
                for (int si : {1, -1}) {
                    if (form_scale(Z(si), klist[i].form) == target) {
                        certified = true;
                        break;
                    }
                    for (size_t j = i; !certified && j < klist.size(); ++j) {
                        for (int sj : {1, -1}) {
                            if (form_sum(form_scale(Z(si), klist[i].form),
                                         form_scale(Z(sj), klist[j].form)) == target) {
                                certified = true;
                                break;
                            }
                        }
                    }
                    if (certified) break;
                }
            }
            if (certified) {
                ++with_short_certificate;
                continue;
            }
            if (!membership(form_coordinates(ps, target), kur.span())) {
                ok = false;
                failures.push_back(gen.tag);
            }
        }
        report.pass = ok;
        report.detail = std::to_string(checked) + " quad forms; " +
                        std::to_string(with_short_certificate) +
                        " with a certificate of at most two Kuratowski terms";
        if (!ok) {
            report.detail += "; failures:";
            for (const std::string& tag : failures) report.detail += " " + tag;
        }
    } catch (const CapExceeded& ex) {
        report.inconclusive = true;
        report.detail = std::string("enumeration cap reached: ") + ex.what();
    }
    return report;
}

TheoremReport verify_one_side_reduction(const Graph& g, int u, int v, const CapConfig& caps) {
    TheoremReport report;
    report.statement = "one-sided projection reduction at (" + std::to_string(u) + "," +
                       std::to_string(v) + ")";
    try {
        if (!is_internally_4_connected(g) || edge_between(g, u, v) < 0) {
            report.applicable = false;
            report.detail = "needs an internally 4-connected graph and an edge uv";
            return report;
        }
        const PairSpace ps = nonadjacent_pair_space(g);
        const PuvSpace space = puv_space(g, u, v);
        const GeneratorSet b_uv = build_B_uv(g, u, v, caps);
        for (const Generator& gen : b_uv.generators())
            if (!puv(g, gen.form, v, u).is_zero())
                throw std::logic_error("B_uv generator " + gen.tag + " disturbs the (v,u) block");
        const SubLattice pi = puv_image(g, b_uv, space);
        const GeneratorSet kur = build_kuratowski_span(g, SigmaMode::Plain, caps);
        std::vector<SubLattice> shifted;
        for (const Generator& k : kur.generators()) {
            IntMatrix row(1, space.dim());
            row.a[0] = puv_coordinates(space, puv(g, k.form, u, v));
            shifted.push_back(lattice_sum(pi, make_sublattice(space.dim(), row, space.index_key())));
        }
        const SubLattice lat = two_cycle_lattice(g, SigmaMode::Plain);
        int plain_hits = 0;
        int kuratowski_hits = 0;
        bool ok = true;
        for (int i = 0; i < lat.rank(); ++i) {
            const Form2 d = form_from_coordinates(ps, lat.basis.a[i]);
            const std::vector<Z> x = puv_coordinates(space, puv(g, d, u, v));
            if (membership(x, pi)) {
                ++plain_hits;
                continue;
            }
            bool found = false;
            for (const SubLattice& s : shifted)
                if (membership(x, s)) {
                    found = true;
                    break;
                }
            if (found)
                ++kuratowski_hits;
            else
                ok = false;
        }
        report.pass = ok;
        report.detail = std::to_string(lat.rank()) + " basis forms: " + std::to_string(plain_hits) +
                        " project into P_uv(B_uv), " + std::to_string(kuratowski_hits) +
                        " need one Kuratowski correction; " + std::to_string(b_uv.size()) +
                        " B_uv generators leave the (v,u) block untouched";
    } catch (const CapExceeded& ex) {
        report.inconclusive = true;
        report.detail = std::string("enumeration cap reached: ") + ex.what();
    }
    return report;
}

TheoremReport verify_projection_transpose(const Graph& g, int u, int v, const CapConfig& caps) {
    TheoremReport report;
    report.statement = "projection transpose forcing at (" + std::to_string(u) + "," +
                       std::to_string(v) + ")";
    try {
        if (!is_internally_4_connected(g) || edge_between(g, u, v) < 0) {
            report.applicable = false;
            report.detail = "needs an internally 4-connected graph and an edge uv";
            return report;
        }
        const PairSpace ps = nonadjacent_pair_space(g);
        const PuvSpace space = puv_space(g, u, v);
        const GeneratorSet b = build_B(g, SigmaMode::Plain, caps);
        const SubLattice pi_b = puv_image(g, b, space);
        const SubLattice lat = two_cycle_lattice(g, SigmaMode::Plain);
        std::vector<std::pair<std::string, Form2>> candidates;
        for (int i = 0; i < lat.rank(); ++i)
            candidates.emplace_back("L#" + std::to_string(i), form_from_coordinates(ps, lat.basis.a[i]));
        const GeneratorSet kur = build_kuratowski_span(g, SigmaMode::Plain, caps);
        for (const Generator& k : kur.generators()) candidates.emplace_back(k.tag, k.form);
        int instances = 0;
        bool ok = true;
        std::vector<std::string> failures;
        for (const auto& [name, form] : candidates) {
            const PuvTensor t = puv(g, form, u, v);
            if (t.is_zero()) continue;
            if (membership(puv_coordinates(space, t), pi_b)) continue;  // hypothesis fails
            const ShapeInfo shape = classify_displacement(g, t);
            if (shape.kind == ShapeInfo::None) continue;
            ++instances;
            bool symmetric_block = true;
            for (int e : g.incident_edges(u))
                for (int f : g.incident_edges(v))
                    if (!g.edges_adjacent(e, f) && form.at(e, f) != form.at(f, e)) symmetric_block = false;
            if (!symmetric_block) {
                ok = false;
                failures.push_back(name);
            }
        }
        report.pass = ok;
        report.detail = std::to_string(instances) + " candidate forms met the hypotheses";
        if (!ok) {
            report.detail += "; failures:";
            for (const std::string& name : failures) report.detail += " " + name;
        }
    } catch (const CapExceeded& ex) {
        report.inconclusive = true;
        report.detail = std::string("enumeration cap reached: ") + ex.what();
    }
    return report;
}

TheoremReport verify_trichotomy(const Graph& g, bool petersen_family_minor, const CapConfig& caps) {
    TheoremReport report;
    report.statement = "Kuratowski-connected trichotomy";
    try {
        if (!is_kuratowski_connected(g)) {
            report.applicable = false;
            report.detail = "graph is not Kuratowski-connected";
            return report;
        }
        const PairSpace ps = nonadjacent_pair_space(g);
        const SubLattice lat = two_cycle_lattice(g, SigmaMode::Plain);
        const GeneratorSet b = build_B(g, SigmaMode::Plain, caps);
        if (!has_kuratowski_subdivision(g, caps)) {
            report.pass = lattice_equal(b.span(), lat);
            report.detail = "planar branch: L rank " + std::to_string(lat.rank()) + ", B rank " +
                            std::to_string(b.span().rank()) +
                            (report.pass ? "; L = B" : "; L != B");
            return report;
        }
        const GeneratorSet kur = build_kuratowski_span(g, SigmaMode::Plain, caps);
        if (petersen_family_minor) {
            bool inside = true;
            for (const Generator& k : kur.generators())
                if (!membership(form_coordinates(ps, k.form), b.span())) inside = false;
            report.pass = inside && lattice_equal(b.span(), lat);
            report.detail = "Petersen-family branch: " + std::to_string(kur.size()) +
                            " Kuratowski forms" + (inside ? " all inside B" : ", some escape B") +
                            (lattice_equal(b.span(), lat) ? "; L = B" : "; L != B");
            return report;
        }
        const QuotientReport q = quotient_invariants(b.span(), lat);
        bool ok = q.contained && q.free_rank == 1 && q.torsion.empty();
        int witnesses = 0;
        for (const Generator& k : kur.generators())
            if (lattice_equal(lattice_sum(b.span(), single_row_lattice(ps, k.form)), lat)) ++witnesses;
        ok = ok && witnesses == kur.size() && kur.size() > 0;
        report.pass = ok;
        report.detail = "linkless branch: L/B " + q.describe() + "; " + std::to_string(witnesses) +
                        "/" + std::to_string(kur.size()) + " Kuratowski forms each span the gap";
    } catch (const CapExceeded& ex) {
        report.inconclusive = true;
        report.detail = std::string("enumeration cap reached: ") + ex.what();
    }
    return report;
}

}  // namespace twocycle
