#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twocycle/bigint.hpp"

namespace twocycle {

// Dense arbitrary-precision integer matrix, row major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Z>> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(r, std::vector<Z>(c)) {}

    static IntMatrix identity(int n);

    Z& at(int r, int c) { return a[r][c]; }
    const Z& at(int r, int c) const { return a[r][c]; }

    IntMatrix transposed() const;
    bool is_zero() const;
    bool operator==(const IntMatrix&) const = default;
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);

// u * m == h, u unimodular. h is the canonical row Hermite normal form of m:
// pivot columns strictly increase, pivots are positive, entries above each
// pivot are reduced into [0, pivot), zero rows are collected at the bottom.
// Canonicity makes lattice equality a bitwise comparison of bases.
struct HnfResult {
    IntMatrix h;
    IntMatrix u;
};
HnfResult hermite_normal_form(const IntMatrix& m);

// u * m * v == s with s diagonal, diagonal entries non-negative and each
// dividing the next; u, v unimodular.
struct SnfResult {
    IntMatrix s;
    IntMatrix u;
    IntMatrix v;
};
SnfResult smith_normal_form(const IntMatrix& m);

// Exact rank (over the rationals, which equals the rank over Z).
int exact_rank(const IntMatrix& m);

// Exact rank for a matrix given as sparse rows of (column, value) pairs;
// avoids materializing large mostly-zero constraint systems.
int sparse_rank(int cols, std::vector<std::vector<std::pair<int, Z>>> rows);

// A sublattice of Z^ambient_dim. The basis is always stored in canonical row
// HNF with zero rows removed, so two SubLattice values describe the same
// lattice iff their basis matrices are identical. index_key optionally names
// the ambient coordinates; lattices over differently named spaces never
// compare equal.
struct SubLattice {
    int ambient_dim = 0;
    IntMatrix basis;
    std::vector<std::string> index_key;

    int rank() const { return basis.rows; }
    bool operator==(const SubLattice&) const = default;
};

SubLattice make_sublattice(int ambient_dim, const IntMatrix& spanning_rows,
                           std::vector<std::string> index_key = {});
SubLattice zero_lattice(int ambient_dim, std::vector<std::string> index_key = {});

// Saturated integer kernel { x : m x = 0 }.
SubLattice kernel_basis(const IntMatrix& m);

// Integer coefficients of v over the basis rows of lat, or nullopt when v is
// not in the lattice (membership over Z, not over Q).
std::optional<std::vector<Z>> membership(const std::vector<Z>& v, const SubLattice& lat);

SubLattice lattice_sum(const SubLattice& x, const SubLattice& y);
bool lattice_equal(const SubLattice& x, const SubLattice& y);

// Structure of b/a for sublattices a ⊆ b of the same ambient space.
struct QuotientReport {
    bool contained = false;   // is a ⊆ b?
    std::string witness;      // when !contained: which basis row of a escapes b
    int free_rank = 0;        // rank b − rank a
    std::vector<Z> torsion;   // invariant factors > 1, divisibility order

    bool trivial() const { return contained && free_rank == 0 && torsion.empty(); }
    std::string describe() const;
};
QuotientReport quotient_invariants(const SubLattice& a, const SubLattice& b);

// Rows of m restricted to the span: image of the lattice under the linear map
// sending ambient basis vector i to row i of m (used for projection queries).
SubLattice lattice_image(const SubLattice& lat, const IntMatrix& map_rows,
                         std::vector<std::string> index_key = {});

}  // namespace twocycle
