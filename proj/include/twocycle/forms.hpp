#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twocycle/bigint.hpp"
#include "twocycle/graph.hpp"
#include "twocycle/intlattice.hpp"
#include "twocycle/patterns.hpp"

namespace twocycle {

// Sparse integer-valued function on ordered edge pairs of a fixed graph.
// Only nonzero values are stored, so map equality is equality of forms.
struct Form2 {
    std::map<std::pair<int, int>, Z> entries;

    Z at(int e, int f) const;          // 0 when absent
    void set(int e, int f, Z value);   // erases the entry when the value is 0
    void add(int e, int f, const Z& delta);
    bool is_zero() const { return entries.empty(); }
    bool operator==(const Form2&) const = default;
};

Form2 form_sum(const Form2& x, const Form2& y);
Form2 form_diff(const Form2& x, const Form2& y);
Form2 form_scale(const Z& c, const Form2& x);

// T(d)(e, f) = d(f, e).
Form2 transpose(const Form2& d);

// The three symmetrization flavors: identity, d + T(d), d - T(d).
enum class SigmaMode { Plain, Sym, Skew };

Form2 sigma_apply(SigmaMode mode, const Form2& d);
// The complementary operator: Plain -> 0, Sym -> d - T(d), Skew -> d + T(d).
// A form lies in the mode's lattice iff it is a 2-cycle killed by this.
Form2 sigma_complement_apply(SigmaMode mode, const Form2& d);

// A 2-cycle: d vanishes on every pair of edges sharing a vertex (including
// e == f and loops), and every row slice d(e, -) and column slice d(-, f) is
// a circulation. On failure *why names the first offending pair or vertex.
// Malformed input (edge index out of range) throws instead.
bool is_two_cycle(const Graph& g, const Form2& d, std::string* why = nullptr);

// The lattice of all 2-cycles of g in the given mode, as a sublattice of the
// pair space Z^dim over nonadjacent ordered pairs (coordinates and index keys
// from nonadjacent_pair_space). Sym restricts to d == T(d), Skew to
// d == -T(d).
SubLattice two_cycle_lattice(const Graph& g, SigmaMode mode = SigmaMode::Plain);

// Bridges between sparse forms and pair-space coordinate vectors. A form with
// an entry outside the space (adjacent pair) cannot be vectorized and throws.
std::vector<Z> form_coordinates(const PairSpace& ps, const Form2& d);
Form2 form_from_coordinates(const PairSpace& ps, const std::vector<Z>& x);

// chi_C tensor chi_D for vertex-disjoint oriented cycles: value at (e, f) is
// chi_C(e) * chi_D(f). Both cycles are certified; a shared vertex is named in
// the thrown error.
Form2 circuit_pair_form(const Graph& g, const OrientedCycle& c, const OrientedCycle& d);

// The generating 2-cycle of complete_graph(5) under a labeling that puts
// vertex labeling[i] in role i: the value at (v_i v_j, v_k v_l) for disjoint
// edges is the sign of the permutation (i, j, k, l, m), m the remaining role.
Form2 elementary_k5_form(const std::array<int, 5>& labeling = {0, 1, 2, 3, 4});

// The generating 2-cycle of complete_bipartite(3, 3): the value at
// (a_i1 b_j1, a_i2 b_j2) for disjoint edges is sgn(i1 i2 i3) * sgn(j1 j2 j3).
// The arrays say which vertex plays a_i and b_j; each must list one side of
// the bipartition.
Form2 elementary_k33_form(const std::array<int, 3>& a_labels = {0, 1, 2},
                          const std::array<int, 3>& b_labels = {3, 4, 5});

// Push a form through a subdivision: every pair of arc edges inherits the
// parent pair's value. Arcs are oriented along their parent edge, so no signs
// appear. Pairs inside a single arc inherit the parent's diagonal value.
Form2 subdivide_form(const SubdivisionResult& s, const Form2& d);

// The 2-cycle of g supported on a Kuratowski subdivision: the elementary form
// of the model transported along the arcs, with each host edge signed by its
// orientation relative to the arc traversal. sign in {+1, -1} scales the
// whole form. The subdivision is certified first.
Form2 kuratowski_form(const Graph& g, const KuratowskiSubdivision& h, int sign = 1);

// The quad 2-cycle for a side choice: s in {a, b} and t in {c, d} form the
// left side. Spokes through connector 0 are shared; the form is the
// difference of the two cycle-pair indicator products prescribed by the
// construction. The quad is certified first; an invalid side choice throws.
Form2 quad_form(const Graph& g, const Quad& q, int s, int t);

// Restriction of d to ordered pairs (e, f) with e incident to u and f
// incident to v. The zero tensor is the precondition for contracting uv.
struct PuvTensor {
    int u = 0;
    int v = 0;
    std::map<std::pair<int, int>, Z> entries;

    bool is_zero() const { return entries.empty(); }
    bool operator==(const PuvTensor&) const = default;
};

PuvTensor puv(const Graph& g, const Form2& d, int u, int v);

// d restricted to the surviving edges of contract_edge(g, e), in the minor's
// edge indexing. Precondition (checked, violation named): puv(d, u, v) and
// puv(d, v, u) both vanish for the ends u, v of e.
Form2 contract_form(const Graph& g, const Form2& d, int e);

// The unique lift: the 2-cycle of g whose contraction along e is d_minor
// (given on contract_edge(g, e).minor). Row and column e are reconstructed
// from the circulation constraints at the merged vertex.
Form2 uncontract_form(const Graph& g, const Form2& d_minor, int e);

}  // namespace twocycle
