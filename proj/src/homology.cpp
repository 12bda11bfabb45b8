#include "twocycle/homology.hpp"

#include <stdexcept>
#include <string>

#include "twocycle/forms.hpp"

namespace twocycle {

DeletedProductComplex build_complex(const Graph& g) {
    const int n = g.n;
    const int m = g.m();
    DeletedProductComplex c;

    std::vector<int> idx0(static_cast<size_t>(n) * n, -1);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            idx0[u * n + v] = static_cast<int>(c.cells0.size());
            c.cells0.push_back({u, v});
        }

    std::vector<int> idx_ve(static_cast<size_t>(n) * m, -1);  // (v, e) block
    std::vector<int> idx_ev(static_cast<size_t>(n) * m, -1);  // (e, v) block
    for (int v = 0; v < n; ++v)
        for (int e = 0; e < m; ++e) {
            if (g.incident(v, e)) continue;
            idx_ve[v * m + e] = static_cast<int>(c.cells1.size());
            c.cells1.push_back({false, v, e});
        }
    for (int e = 0; e < m; ++e)
        for (int v = 0; v < n; ++v) {
            if (g.incident(v, e)) continue;
            idx_ev[v * m + e] = static_cast<int>(c.cells1.size());
            c.cells1.push_back({true, v, e});
        }

    c.cells2 = nonadjacent_pair_space(g);

    c.boundary1 = IntMatrix(static_cast<int>(c.cells0.size()), static_cast<int>(c.cells1.size()));
    for (size_t j = 0; j < c.cells1.size(); ++j) {
        const auto& cell = c.cells1[j];
        const Edge& ed = g.edges[cell.e];
        if (!cell.edge_first) {
            // d(v x e) = (v, head) - (v, tail)
            c.boundary1.a[idx0[cell.v * n + ed.head]][j] += 1;
            c.boundary1.a[idx0[cell.v * n + ed.tail]][j] -= 1;
        } else {
            // d(e x v) = (head, v) - (tail, v)
            c.boundary1.a[idx0[ed.head * n + cell.v]][j] += 1;
            c.boundary1.a[idx0[ed.tail * n + cell.v]][j] -= 1;
        }
    }

    c.boundary2 = IntMatrix(static_cast<int>(c.cells1.size()), c.cells2.dim());
    for (int k = 0; k < c.cells2.dim(); ++k) {
        const auto [e, f] = c.cells2.pairs[k];
        const Edge& ee = g.edges[e];
        const Edge& ef = g.edges[f];
        // d(e x f) = (de) x f - e x (df)
        c.boundary2.a[idx_ve[ee.head * m + f]][k] += 1;
        c.boundary2.a[idx_ve[ee.tail * m + f]][k] -= 1;
        c.boundary2.a[idx_ev[ef.head * m + e]][k] -= 1;
        c.boundary2.a[idx_ev[ef.tail * m + e]][k] += 1;
    }

    if (!mat_mul(c.boundary1, c.boundary2).is_zero())
        throw std::logic_error("build_complex: boundary composition is nonzero");
    return c;
}

SubLattice h2_lattice(const Graph& g) {
    const DeletedProductComplex c = build_complex(g);
    const SubLattice ker = kernel_basis(c.boundary2);
    return make_sublattice(c.cells2.dim(), ker.basis, c.cells2.index_key());
}

BettiNumbers betti_numbers(const Graph& g) {
    const DeletedProductComplex c = build_complex(g);
    const int r1 = exact_rank(c.boundary1);
    const int r2 = exact_rank(c.boundary2);
    BettiNumbers b;
    b.b0 = static_cast<int>(c.cells0.size()) - r1;
    b.b1 = static_cast<int>(c.cells1.size()) - r1 - r2;
    b.b2 = c.cells2.dim() - r2;
    return b;
}

std::string FaceBasisReport::describe() const {
    if (pass)
        return "pass: " + std::to_string(family_size) +
               " ordered disjoint face pairs form a basis";
    return "fail: " + witness;
}

FaceBasisReport planar_face_basis_check(const Graph& g, const std::vector<OrientedCycle>& faces) {
    FaceBasisReport rep;
    std::string why;
    for (size_t i = 0; i < faces.size(); ++i)
        if (!certify_cycle(g, faces[i], &why)) {
            rep.witness = "face " + std::to_string(i) + " is not a cycle: " + why;
            return rep;
        }
    std::vector<Form2> family;
    for (size_t i = 0; i < faces.size(); ++i)
        for (size_t j = 0; j < faces.size(); ++j) {
            if (i == j) continue;
            if (!cycles_vertex_disjoint(faces[i], faces[j])) continue;
            family.push_back(circuit_pair_form(g, faces[i], faces[j]));
        }
    rep.family_size = static_cast<int>(family.size());
    const PairSpace ps = nonadjacent_pair_space(g);
    IntMatrix rows(static_cast<int>(family.size()), ps.dim());
    for (size_t i = 0; i < family.size(); ++i) rows.a[i] = form_coordinates(ps, family[i]);
    const SubLattice span = make_sublattice(ps.dim(), rows, ps.index_key());
    if (span.rank() != rep.family_size) {
        rep.witness = "the " + std::to_string(rep.family_size) +
                      " face-pair forms are linearly dependent (rank " +
                      std::to_string(span.rank()) + ")";
        return rep;
    }
    const SubLattice lat = two_cycle_lattice(g, SigmaMode::Plain);
    const QuotientReport q = quotient_invariants(span, lat);
    if (!q.contained) {
        rep.witness = "a face-pair form escapes the 2-cycle lattice: " + q.witness;
        return rep;
    }
    if (!q.trivial()) {
        rep.witness = "face pairs span a proper sublattice: " + q.describe();
        return rep;
    }
    rep.pass = true;
    return rep;
}

}  // namespace twocycle
