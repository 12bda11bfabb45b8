#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twocycle/caps.hpp"
#include "twocycle/connectivity.hpp"
#include "twocycle/forms.hpp"
#include "twocycle/graph.hpp"
#include "twocycle/intlattice.hpp"
#include "twocycle/patterns.hpp"

namespace twocycle {

// ---------------------------------------------------------------------------
// Tagged generator families and their spans
// ---------------------------------------------------------------------------

enum class GeneratorFamily { CircuitPair, Kuratowski, Quad };

std::string family_name(GeneratorFamily f);

// One generator of a submodule of the 2-cycle lattice, with a deterministic
// human-readable tag recording which pattern produced it and how the mode
// transformed it.
struct Generator {
    GeneratorFamily family = GeneratorFamily::CircuitPair;
    std::string tag;
    Form2 form;
};

// A list of generators over the nonadjacent-pair coordinates of one graph.
// Every member is a verified 2-cycle lying in L^mode; the span is the
// canonical-HNF sublattice they generate (computed on first use).
class GeneratorSet {
  public:
    GeneratorSet() = default;
    GeneratorSet(const Graph& g, SigmaMode mode);

    SigmaMode mode() const { return mode_; }
    const PairSpace& space() const { return space_; }
    const std::vector<Generator>& generators() const { return gens_; }
    int size() const { return static_cast<int>(gens_.size()); }

    // Validates the form (2-cycle, correct sigma class) before accepting it.
    void add(const Graph& g, GeneratorFamily family, std::string tag, Form2 form);

    const SubLattice& span() const;

  private:
    SigmaMode mode_ = SigmaMode::Plain;
    PairSpace space_;
    std::vector<Generator> gens_;
    mutable std::optional<SubLattice> span_;
};

// All sigma-images of circuit-pair forms chi_{C,D} over vertex-disjoint
// ordered cycle pairs. In Sym/Skew mode one order per unordered pair is kept
// (the other order spans the same sublattice).
GeneratorSet build_B(const Graph& g, SigmaMode mode = SigmaMode::Plain,
                     const CapConfig& caps = default_caps());

// Circuit-pair forms chi_{C,D} with u on C and v on D (plain mode). Empty
// when no disjoint pair visits (u, v), in particular whenever u == v.
GeneratorSet build_B_uv(const Graph& g, int u, int v,
                        const CapConfig& caps = default_caps());

// Kuratowski forms of all enumerated K5- and K33-subdivisions. The forms are
// transpose-invariant, so they represent their own symmetrizations: Plain and
// Sym use d_H itself, Skew produces the empty set (d_H - T(d_H) = 0).
GeneratorSet build_kuratowski_span(const Graph& g, SigmaMode mode = SigmaMode::Plain,
                                   const CapConfig& caps = default_caps());

// Quad forms over all enumerated quads, all three connector rotations and all
// four side choices. Plain mode also includes the transposes (the same quad
// read with its axle pairs swapped); Sym/Skew store q + T(q) / q - T(q).
GeneratorSet build_quad_span(const Graph& g, SigmaMode mode = SigmaMode::Plain,
                             const CapConfig& caps = default_caps());

// ---------------------------------------------------------------------------
// Separation submodules
// ---------------------------------------------------------------------------

// S^sigma(G1, G2): all d in L^sigma(G) vanishing on every pair of edges drawn
// from the same side of the separation.
SubLattice build_S_sigma(const Graph& g, const Separation& sep, SigmaMode mode);

// B^sigma(G1, G2): sigma-images of chi_{C,D} over vertex-disjoint cycle pairs
// with C inside one side and D inside the other (both orders in plain mode).
GeneratorSet build_B_sigma_sep(const Graph& g, const Separation& sep,
                               SigmaMode mode = SigmaMode::Plain,
                               const CapConfig& caps = default_caps());

// ---------------------------------------------------------------------------
// Path-pair tensor module
// ---------------------------------------------------------------------------

// Coordinates for Z<R1> (x) Z<R2>: ordered vertex pairs (r1, r2), r1 from R1
// and r2 from R2, lexicographic. R1 and R2 may overlap.
struct LinkageSpace {
    std::vector<int> r1;  // sorted distinct
    std::vector<int> r2;  // sorted distinct

    int dim() const { return static_cast<int>(r1.size() * r2.size()); }
    int index_of(int u, int v) const;  // -1 when (u, v) is not a coordinate
    std::vector<std::string> index_key() const;  // "(v2,v5)" per coordinate
};

LinkageSpace make_linkage_space(const Graph& g, std::vector<int> r1, std::vector<int> r2);

// pi(P1 (x) P2) = (start1 - end1) (x) (start2 - end2) as coordinates of the
// space. Both paths must have distinct ends lying in the respective sets.
std::vector<Z> pi_of_path_pair(const LinkageSpace& space, const PathSeq& p1, const PathSeq& p2);

// Span of pi over all vertex-disjoint path pairs with ends in (R1, R2).
SubLattice linkage_module(const Graph& g, const LinkageSpace& space,
                          const CapConfig& caps = default_caps());

// 2-connected with no sided (R, S)- and no sided (S, R)-separation: no
// 2-separation has one side avoiding S entirely while containing two
// R-vertices off the separator that are linked to the two separator vertices
// by vertex-disjoint paths in both pairings.
bool is_RS_connected(const Graph& g, const std::vector<int>& r, const std::vector<int>& s,
                     const CapConfig& caps = default_caps());

// ---------------------------------------------------------------------------
// Projections at an edge
// ---------------------------------------------------------------------------

// Coordinates for the image of P_{u,v}: nonadjacent ordered pairs (e, f) with
// e incident to u and f incident to v, lexicographic.
struct PuvSpace {
    int u = 0;
    int v = 0;
    std::vector<std::pair<int, int>> pairs;

    int dim() const { return static_cast<int>(pairs.size()); }
    int index_of(int e, int f) const;  // -1 when absent
    std::vector<std::string> index_key() const;  // "P(e3,e7)" per coordinate
};

PuvSpace puv_space(const Graph& g, int u, int v);

std::vector<Z> puv_coordinates(const PuvSpace& space, const PuvTensor& t);

// Span of the projections P_{u,v}(gen) of all generators of the set.
SubLattice puv_image(const Graph& g, const GeneratorSet& gens, const PuvSpace& space);

// ---------------------------------------------------------------------------
// Decomposition over generator families
// ---------------------------------------------------------------------------

struct DecompositionReport {
    SigmaMode mode = SigmaMode::Plain;
    bool rejected = false;   // input failed validation (message says why)
    bool success = false;    // exact integer combination found
    std::vector<std::pair<std::string, Z>> coefficients;  // tag -> coefficient, nonzero only
    QuotientReport failure;  // structure of (span + <target>) / span when !success
    std::string message;

    std::string describe() const;
};

// Exact integer coefficients expressing d over the requested families, or the
// quotient certificate showing d escapes their span. d must be a 2-cycle of g
// in the requested sigma class.
DecompositionReport decompose(const Graph& g, const Form2& d,
                              const std::vector<GeneratorFamily>& families,
                              SigmaMode mode = SigmaMode::Plain,
                              const CapConfig& caps = default_caps());

// Re-check a claimed decomposition: the tags must name generators of the
// families, and the combination must reproduce d entrywise.
bool check_decomposition(const Graph& g, const Form2& d,
                         const std::vector<GeneratorFamily>& families, SigmaMode mode,
                         const std::vector<std::pair<std::string, Z>>& coefficients,
                         std::string* why = nullptr,
                         const CapConfig& caps = default_caps());

// ---------------------------------------------------------------------------
// Theorem drivers
// ---------------------------------------------------------------------------

// Outcome of machine-checking one statement on one graph. `applicable` is
// false when the statement's hypotheses fail (nothing is claimed);
// `inconclusive` is true when an enumeration cap was hit (no verdict).
struct TheoremReport {
    std::string statement;
    bool applicable = true;
    bool pass = false;
    bool inconclusive = false;
    std::string detail;

    bool verdict() const { return applicable && pass && !inconclusive; }
    std::string describe() const;
};

// Structure theorem for L^sigma(G):
//   Plain: circuit pairs + Kuratowski forms + quad forms span L(G).
//   Sym:   symmetric circuit pairs + Kuratowski forms span L^sym(G).
//   Skew:  skew circuit pairs + skew quad forms span L^skew(G).
TheoremReport verify_main_theorem(const Graph& g, SigmaMode mode,
                                  const CapConfig& caps = default_caps());

// Kuratowski-connected graphs: quad generators are redundant. Checks
//   (a) L = B + Kuratowski span, L^sym = B^sym + Kuratowski span,
//       L^skew = B^skew;
//   (b) each quad form q has q in B or q - d_H in B for some Kuratowski form;
//   (c) each Kuratowski pair has d_H - d_H' in B or d_H + d_H' in B;
//   (d) when L != B, a single Kuratowski form suffices: L = B + Z d_H.
TheoremReport verify_kuratowski_connected(const Graph& g,
                                          const CapConfig& caps = default_caps());

// Separation lemmas: S^sigma = B^sigma for separations of order <= 2 (of a
// connected / 2-connected graph); for order 3 (3-connected graph), S^sigma =
// B^sigma + sigma-images of the quad forms lying in S(G1, G2).
TheoremReport verify_separation_lemma(const Graph& g, const Separation& sep, SigmaMode mode,
                                      const CapConfig& caps = default_caps());

// Every quad form q on g has q + T(q) in the span of the Kuratowski forms,
// with a certificate of at most two Kuratowski terms when one exists.
TheoremReport verify_sym_quad_reduction(const Graph& g,
                                        const CapConfig& caps = default_caps());

// At an edge uv of an internally 4-connected graph, every basis form d of
// L(G) projects into P_uv(B_uv) or into P_uv(B_uv) + Z P_uv(d_H) for some
// Kuratowski form d_H; and B_uv generators never disturb the (v, u) block.
TheoremReport verify_one_side_reduction(const Graph& g, int u, int v,
                                        const CapConfig& caps = default_caps());

// At an edge uv of an internally 4-connected graph: whenever a test form K
// (an L-basis form or a Kuratowski form) has P_uv(K) outside P_uv(B) and of
// quadrilateral or hexagonal displacement shape, its (v, u) block equals the
// transpose of its (u, v) block.
TheoremReport verify_projection_transpose(const Graph& g, int u, int v,
                                          const CapConfig& caps = default_caps());

// Kuratowski-connected trichotomy. Planarity is decided by the absence of
// Kuratowski subdivisions; membership of the graph in the Petersen minor
// family is curated metadata. Checks
//   planar           -> L = B;
//   Petersen family  -> L = B (every Kuratowski form lies in B);
//   otherwise        -> L/B is infinite cyclic and L = B + Z d_H for a single
//                       Kuratowski form.
TheoremReport verify_trichotomy(const Graph& g, bool petersen_family_minor,
                                const CapConfig& caps = default_caps());

}  // namespace twocycle
