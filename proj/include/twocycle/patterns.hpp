#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twocycle/caps.hpp"
#include "twocycle/graph.hpp"

namespace twocycle {

// ---------------------------------------------------------------------------
// Simple cycles
// ---------------------------------------------------------------------------

// A simple cycle with a traversal direction: edges[i] joins vertices[i] to
// vertices[(i+1) % length]. Canonical form: vertices[0] is the smallest
// vertex of the cycle and the direction makes edges.front() < edges.back().
struct OrientedCycle {
    std::vector<int> vertices;
    std::vector<int> edges;

    int length() const { return static_cast<int>(edges.size()); }
    bool operator==(const OrientedCycle&) const = default;
};

// All simple cycles, one canonical orientation each, deterministic order.
// Length-2 cycles arise only from parallel edge pairs; loops never appear.
std::vector<OrientedCycle> enumerate_cycles(const Graph& g, const CapConfig& caps = default_caps());

bool certify_cycle(const Graph& g, const OrientedCycle& c, std::string* why = nullptr);

// Indicator circulation chi_C: +1 on edges traversed tail->head, -1 on edges
// traversed head->tail, 0 elsewhere.
EdgeVector cycle_indicator(const Graph& g, const OrientedCycle& c);

bool cycles_vertex_disjoint(const OrientedCycle& c, const OrientedCycle& d);

// All ordered pairs (C, D) of vertex-disjoint canonical cycles.
std::vector<std::pair<OrientedCycle, OrientedCycle>> enumerate_disjoint_cycle_pairs(
    const Graph& g, const CapConfig& caps = default_caps());

// ---------------------------------------------------------------------------
// Paths
// ---------------------------------------------------------------------------

// A simple path; a single vertex with no edges is allowed where noted.
// edges[i] joins vertices[i] and vertices[i+1] (in either orientation).
struct PathSeq {
    std::vector<int> vertices;
    std::vector<int> edges;

    int length() const { return static_cast<int>(edges.size()); }
    int start() const { return vertices.front(); }
    int end() const { return vertices.back(); }
    bool visits(int v) const;
    bool operator==(const PathSeq&) const = default;
};

bool certify_path(const Graph& g, const PathSeq& p, std::string* why = nullptr);

PathSeq reversed_path(const PathSeq& p);
PathSeq path_prefix_to(const PathSeq& p, int v);    // start() .. v
PathSeq path_suffix_from(const PathSeq& p, int v);  // v .. end()
// q must start where p ends; the shared vertex is stored once.
PathSeq concat_paths(const PathSeq& p, const PathSeq& q);

// ---------------------------------------------------------------------------
// Kuratowski subdivisions
// ---------------------------------------------------------------------------

enum class KuratowskiKind { K5, K33 };

// Model edges as index pairs into the branch-vertex list: all 10 pairs (i<j)
// for K5; the 9 pairs (i, j) with i in {0,1,2}, j in {3,4,5} for K33; both in
// lexicographic order.
std::vector<std::pair<int, int>> kuratowski_model_edges(KuratowskiKind kind);

struct KuratowskiSubdivision {
    KuratowskiKind kind = KuratowskiKind::K5;
    // K5: five branch vertices, ascending. K33: the two parts of three,
    // each ascending, with the overall smallest branch vertex in the first.
    std::vector<int> branch_vertices;
    // arcs[t] realizes model edge t, oriented from the first to the second
    // model endpoint; interiors avoid all branch vertices and each other.
    std::vector<PathSeq> arcs;

    bool operator==(const KuratowskiSubdivision&) const = default;
};

std::vector<KuratowskiSubdivision> enumerate_kuratowski_subdivisions(
    const Graph& g, KuratowskiKind kind, const CapConfig& caps = default_caps());

// Does g contain a subdivision of K5 or of K_{3,3}?
bool has_kuratowski_subdivision(const Graph& g, const CapConfig& caps = default_caps());

bool certify_kuratowski_subdivision(const Graph& g, const KuratowskiSubdivision& h,
                                    std::string* why = nullptr);

// ---------------------------------------------------------------------------
// Quads
// ---------------------------------------------------------------------------

// Two axle pairs {a,b} and {c,d} (all distinct), three a-b paths p[i], three
// c-d paths r[i] (each family mutually internally disjoint, one interior
// vertex minimum), and three mutually disjoint connectors q[i] from an
// interior vertex of p[i] to an interior vertex of r[i]. A connector may be a
// single shared vertex (width 0). Vertices of q[i] other than its ends avoid
// all p/r paths, and p[i] meets the r-family only inside q[i].
struct Quad {
    int a = 0, b = 0, c = 0, d = 0;
    std::array<PathSeq, 3> p;  // oriented a -> b
    std::array<PathSeq, 3> r;  // oriented c -> d
    std::array<PathSeq, 3> q;  // oriented from the p[i] end to the r[i] end

    int attach_p(int i) const { return q[i].vertices.front(); }
    int attach_r(int i) const { return q[i].vertices.back(); }
    int width() const { return q[0].length() + q[1].length() + q[2].length(); }
    bool operator==(const Quad&) const = default;
};

// All quads, one representative per unordered structure: the smallest axle
// lies in {a,b}, a < b, c < d, and the p-paths are in enumeration order.
// Index relabelings and side choices are derived views.
std::vector<Quad> enumerate_quads(const Graph& g, const CapConfig& caps = default_caps());

// Structural validity plus the theta requirement: for each side choice
// (s in {a,b}, t in {c,d}) the three spokes s -> attach -> t meet pairwise in
// exactly {s, t}, so the derived cycles below are well defined.
bool certify_quad(const Graph& g, const Quad& q, std::string* why = nullptr);

// The quad with connector roles permuted: entry i of the result is the old
// entry perm[i] of p, r, q simultaneously.
Quad relabel_quad(const Quad& q, const std::array<int, 3>& perm);

// ---------------------------------------------------------------------------
// Triads and tripods
// ---------------------------------------------------------------------------

// A subdivided claw: three leg paths from a common center, pairwise sharing
// only the center; the feet are the far ends.
struct Triad {
    int center = 0;
    std::array<PathSeq, 3> legs;  // center -> foot, length >= 1

    std::array<int, 3> feet() const;
    bool operator==(const Triad&) const = default;
};

std::optional<Triad> find_triad(const Graph& g, const std::array<int, 3>& feet,
                                const CapConfig& caps = default_caps());
bool certify_triad(const Graph& g, const Triad& t, std::string* why = nullptr);

// A theta (two hubs a, b joined by three internally disjoint paths, each with
// an interior vertex) with three mutually disjoint legs: legs[i] runs from an
// interior vertex of spokes[i] to the i-th foot, touching the theta only at
// its attachment. A leg may be a single vertex: a foot lying on its spoke.
struct Tripod {
    int a = 0, b = 0;
    std::array<PathSeq, 3> spokes;  // a -> b
    std::array<PathSeq, 3> legs;    // attachment -> foot

    std::array<int, 3> feet() const;
    bool operator==(const Tripod&) const = default;
};

std::optional<Tripod> find_tripod(const Graph& g, const std::array<int, 3>& feet,
                                  const CapConfig& caps = default_caps());
bool certify_tripod(const Graph& g, const Tripod& t, std::string* why = nullptr);

// ---------------------------------------------------------------------------
// Disjoint path pairs and linkages
// ---------------------------------------------------------------------------

// All ordered pairs (p1, p2) of vertex-disjoint paths where p1 has its two
// distinct ends in r1 and p2 in r2 (interiors unrestricted). Each path is
// oriented from its smaller end to its larger end.
std::vector<std::pair<PathSeq, PathSeq>> enumerate_disjoint_path_pairs(
    const Graph& g, const std::vector<int>& r1, const std::vector<int>& r2,
    const CapConfig& caps = default_caps());

// Two vertex-disjoint paths u1 -> s1 and u2 -> s2.
bool has_disjoint_linkage(const Graph& g, int u1, int s1, int u2, int s2,
                          const CapConfig& caps = default_caps());

}  // namespace twocycle
