#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twocycle/graph.hpp"
#include "twocycle/intlattice.hpp"
#include "twocycle/patterns.hpp"

namespace twocycle {

// Combinatorial deleted product of a graph: the cell structure of G x G minus
// an open neighborhood of the diagonal. A product cell survives iff the two
// factors have disjoint closures.
struct DeletedProductComplex {
    // 0-cells: ordered vertex pairs (u, v) with u != v, lexicographic.
    std::vector<std::pair<int, int>> cells0;
    // 1-cells: vertex x edge products (v, e) with v not an end of e, then the
    // edge x vertex products (e, v), each block lexicographic.
    struct Cell1 {
        bool edge_first = false;
        int v = 0;
        int e = 0;
        bool operator==(const Cell1&) const = default;
    };
    std::vector<Cell1> cells1;
    // 2-cells: ordered nonadjacent edge pairs, identical to the coordinate
    // system every 2-form lattice uses.
    PairSpace cells2;
    IntMatrix boundary1;  // rows: cells0, cols: cells1
    IntMatrix boundary2;  // rows: cells1, cols: cells2
};

// Builds the complex with boundary maps d2(e x f) = (de) x f - e x (df) and
// d1(v x e) = v x (de), d1(e x v) = (de) x v; verifies d1 . d2 = 0.
DeletedProductComplex build_complex(const Graph& g);

// Kernel of d2 — the second homology lattice (the complex has no 3-cells) —
// in the shared nonadjacent-pair coordinates. Computed purely from the cell
// complex; the forms module must arrive at the same lattice independently.
SubLattice h2_lattice(const Graph& g);

struct BettiNumbers {
    int b0 = 0;
    int b1 = 0;
    int b2 = 0;
    bool operator==(const BettiNumbers&) const = default;
};

// Ranks of the homology of the deleted product complex.
BettiNumbers betti_numbers(const Graph& g);

// Verdict of the face-pair basis test for an externally supplied planar face
// list: the indicator products of all ordered vertex-disjoint face pairs must
// be linearly independent and span the full 2-cycle lattice.
struct FaceBasisReport {
    bool pass = false;
    int family_size = 0;  // ordered vertex-disjoint face pairs considered
    std::string witness;  // failure description when !pass

    std::string describe() const;
};

FaceBasisReport planar_face_basis_check(const Graph& g, const std::vector<OrientedCycle>& faces);

}  // namespace twocycle
