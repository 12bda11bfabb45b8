#include "twocycle/intlattice.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twocycle {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.a[i][i] = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.a[c][r] = a[r][c];
    return t;
}

bool IntMatrix::is_zero() const {
    for (const auto& row : a)
        for (const Z& x : row)
            if (x != 0) return false;
    return true;
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
    IntMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Z& xik = x.a[i][k];
            if (xik == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                if (y.a[k][j] != 0) r.a[i][j] += xik * y.a[k][j];
        }
    return r;
}

namespace {

void row_axpy(std::vector<Z>& target, const std::vector<Z>& src, const Z& q) {
    // target -= q * src
    if (q == 0) return;
    const size_t n = target.size();
    for (size_t i = 0; i < n; ++i)
        if (src[i] != 0) target[i] -= q * src[i];
}

void negate_row(std::vector<Z>& row) {
    for (Z& x : row) x = -x;
}

}  // namespace

HnfResult hermite_normal_form(const IntMatrix& m) {
    HnfResult res{m, IntMatrix::identity(m.rows)};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;

    int pivot_row = 0;
    for (int col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        // Gcd-style reduction within this column, rows pivot_row..end.
        for (;;) {
            int best = -1;
            int nonzero = 0;
            for (int r = pivot_row; r < h.rows; ++r) {
                if (h.a[r][col] == 0) continue;
                ++nonzero;
                if (best < 0 || abs(h.a[r][col]) < abs(h.a[best][col])) best = r;
            }
            if (nonzero == 0) { best = -1; }
            if (nonzero <= 1) {
                if (nonzero == 1) {
                    std::swap(h.a[best], h.a[pivot_row]);
                    std::swap(u.a[best], u.a[pivot_row]);
                    if (h.a[pivot_row][col] < 0) {
                        negate_row(h.a[pivot_row]);
                        negate_row(u.a[pivot_row]);
                    }
                    // Reduce the entries above the pivot into [0, pivot).
                    for (int r = 0; r < pivot_row; ++r) {
                        const Z q = floor_div(h.a[r][col], h.a[pivot_row][col]);
                        if (q != 0) {
                            row_axpy(h.a[r], h.a[pivot_row], q);
                            row_axpy(u.a[r], u.a[pivot_row], q);
                        }
                    }
                    ++pivot_row;
                }
                break;
            }
            for (int r = pivot_row; r < h.rows; ++r) {
                if (r == best || h.a[r][col] == 0) continue;
                const Z q = h.a[r][col] / h.a[best][col];  // truncated: shrinks |entry|
                row_axpy(h.a[r], h.a[best], q);
                row_axpy(u.a[r], u.a[best], q);
            }
        }
    }
    return res;
}

namespace {

// Locate the entry of minimal nonzero absolute value in the trailing block.
bool find_snf_pivot(const IntMatrix& s, int t, int& pr, int& pc) {
    bool found = false;
    for (int r = t; r < s.rows; ++r)
        for (int c = t; c < s.cols; ++c) {
            if (s.a[r][c] == 0) continue;
            if (!found || abs(s.a[r][c]) < abs(s.a[pr][pc])) {
                pr = r;
                pc = c;
                found = true;
            }
        }
    return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    SnfResult res{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols)};
    IntMatrix& s = res.s;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    auto col_axpy = [&](IntMatrix& mat, int target, int src, const Z& q) {
        if (q == 0) return;
        for (int r = 0; r < mat.rows; ++r)
            if (mat.a[r][src] != 0) mat.a[r][target] -= q * mat.a[r][src];
    };
    auto col_swap = [&](IntMatrix& mat, int c1, int c2) {
        if (c1 == c2) return;
        for (int r = 0; r < mat.rows; ++r) std::swap(mat.a[r][c1], mat.a[r][c2]);
    };
    // Quotient minimizing the remainder: |a - q*b| <= b/2, requires b > 0.
    auto round_div = [](const Z& a, const Z& b) { return floor_div(2 * a + b, 2 * b); };

    const int steps = std::min(s.rows, s.cols);
    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // Re-select the globally smallest entry of the trailing block as
            // pivot on every pass; with nearest-quotient reduction this keeps
            // coefficient growth under control.
            int pr = -1, pc = -1;
            if (!find_snf_pivot(s, t, pr, pc)) goto done;
            if (pr != t) {
                std::swap(s.a[t], s.a[pr]);
                std::swap(u.a[t], u.a[pr]);
            }
            col_swap(s, t, pc);
            col_swap(v, t, pc);
            if (s.a[t][t] < 0) {
                negate_row(s.a[t]);
                negate_row(u.a[t]);
            }
            const Z pivot = s.a[t][t];

            bool leftovers = false;
            for (int r = t + 1; r < s.rows; ++r) {
                if (s.a[r][t] == 0) continue;
                const Z q = round_div(s.a[r][t], pivot);
                row_axpy(s.a[r], s.a[t], q);
                row_axpy(u.a[r], u.a[t], q);
                leftovers |= (s.a[r][t] != 0);
            }
            for (int c = t + 1; c < s.cols; ++c) {
                if (s.a[t][c] == 0) continue;
                const Z q = round_div(s.a[t][c], pivot);
                col_axpy(s, c, t, q);
                col_axpy(v, c, t, q);
                leftovers |= (s.a[t][c] != 0);
            }
            if (leftovers) continue;  // remainders are <= pivot/2: next pivot shrinks

            // Row and column are clear; enforce divisibility of the block.
            bool divides = true;
            for (int r = t + 1; r < s.rows && divides; ++r)
                for (int c = t + 1; c < s.cols && divides; ++c)
                    if (s.a[r][c] % pivot != 0) {
                        // Fold row r into row t; the next reduction pass then
                        // strictly shrinks the pivot.
                        for (int cc = 0; cc < s.cols; ++cc) s.a[t][cc] += s.a[r][cc];
                        for (int cc = 0; cc < u.cols; ++cc) u.a[t][cc] += u.a[r][cc];
                        divides = false;
                    }
            if (divides) break;
        }
    }
done:
    return res;
}

int exact_rank(const IntMatrix& m) {
    std::vector<std::vector<std::pair<int, Z>>> rows(m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.a[r][c] != 0) rows[r].emplace_back(c, m.a[r][c]);
    return sparse_rank(m.cols, std::move(rows));
}

namespace {

using SparseRow = std::vector<std::pair<int, Z>>;

void normalize_row(SparseRow& row) {
    Z g = 0;
    for (const auto& [c, val] : row) {
        g = gcd(g, val);
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [c, val] : row) val /= g;
}

// target := lead(pivot) * target − lead(target) * pivot, eliminating column
// `col`; both rows sorted by column.
SparseRow eliminate_rows(const SparseRow& target, const SparseRow& pivot, int col, const Z& tlead, const Z& plead) {
    SparseRow out;
    out.reserve(target.size() + pivot.size());
    size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
        int ct = i < target.size() ? target[i].first : INT32_MAX;
        int cp = j < pivot.size() ? pivot[j].first : INT32_MAX;
        if (ct < cp) {
            out.emplace_back(ct, plead * target[i].second);
            ++i;
        } else if (cp < ct) {
            out.emplace_back(cp, -tlead * pivot[j].second);
            ++j;
        } else {
            Z val = plead * target[i].second - tlead * pivot[j].second;
            if (val != 0) out.emplace_back(ct, std::move(val));
            ++i;
            ++j;
        }
    }
    (void)col;
    return out;
}

}  // namespace

int sparse_rank(int cols, std::vector<std::vector<std::pair<int, Z>>> rows) {
    (void)cols;
    // Buckets of unprocessed rows keyed by leading column.
    std::map<int, std::vector<SparseRow>> pending;
    for (auto& r : rows) {
        std::sort(r.begin(), r.end());
        if (!r.empty()) pending[r.front().first].push_back(std::move(r));
    }
    int rank = 0;
    std::map<int, SparseRow> pivots;
    while (!pending.empty()) {
        auto it = pending.begin();
        const int col = it->first;
        auto bucket = std::move(it->second);
        pending.erase(it);
        // Choose the sparsest row of the bucket as the pivot for this column.
        size_t best = 0;
        for (size_t i = 1; i < bucket.size(); ++i)
            if (bucket[i].size() < bucket[best].size()) best = i;
        SparseRow pivot = std::move(bucket[best]);
        normalize_row(pivot);
        ++rank;
        const Z plead = pivot.front().second;
        for (size_t i = 0; i < bucket.size(); ++i) {
            if (i == best) continue;
            SparseRow reduced = eliminate_rows(bucket[i], pivot, col, bucket[i].front().second, plead);
            normalize_row(reduced);
            if (!reduced.empty()) pending[reduced.front().first].push_back(std::move(reduced));
        }
        pivots.emplace(col, std::move(pivot));
    }
    return rank;
}

namespace {

IntMatrix strip_zero_rows(const IntMatrix& m) {
    IntMatrix out(0, m.cols);
    for (int r = 0; r < m.rows; ++r) {
        bool zero = true;
        for (const Z& x : m.a[r])
            if (x != 0) {
                zero = false;
                break;
            }
        if (!zero) out.a.push_back(m.a[r]);
    }
    out.rows = static_cast<int>(out.a.size());
    return out;
}

std::vector<int> pivot_columns(const IntMatrix& hnf_basis) {
    std::vector<int> pivots;
    for (int r = 0; r < hnf_basis.rows; ++r) {
        int c = 0;
        while (c < hnf_basis.cols && hnf_basis.a[r][c] == 0) ++c;
        pivots.push_back(c);
    }
    return pivots;
}

}  // namespace

SubLattice make_sublattice(int ambient_dim, const IntMatrix& spanning_rows,
                           std::vector<std::string> index_key) {
    if (spanning_rows.rows > 0 && spanning_rows.cols != ambient_dim)
        throw std::invalid_argument("make_sublattice: ambient dimension mismatch");
    if (!index_key.empty() && static_cast<int>(index_key.size()) != ambient_dim)
        throw std::invalid_argument("make_sublattice: index_key size mismatch");
    SubLattice lat;
    lat.ambient_dim = ambient_dim;
    lat.index_key = std::move(index_key);
    if (spanning_rows.rows == 0) {
        lat.basis = IntMatrix(0, ambient_dim);
        return lat;
    }
    lat.basis = strip_zero_rows(hermite_normal_form(spanning_rows).h);
    return lat;
}

SubLattice zero_lattice(int ambient_dim, std::vector<std::string> index_key) {
    return make_sublattice(ambient_dim, IntMatrix(0, ambient_dim), std::move(index_key));
}

SubLattice kernel_basis(const IntMatrix& m) {
    const IntMatrix mt = m.transposed();
    const HnfResult hr = hermite_normal_form(mt);
    IntMatrix ker(0, m.cols);
    for (int r = 0; r < hr.h.rows; ++r) {
        bool zero = true;
        for (const Z& x : hr.h.a[r])
            if (x != 0) {
                zero = false;
                break;
            }
        if (zero) ker.a.push_back(hr.u.a[r]);
    }
    ker.rows = static_cast<int>(ker.a.size());
    return make_sublattice(m.cols, ker);
}

std::optional<std::vector<Z>> membership(const std::vector<Z>& v, const SubLattice& lat) {
    if (static_cast<int>(v.size()) != lat.ambient_dim)
        throw std::invalid_argument("membership: vector dimension mismatch");
    const std::vector<int> pivots = pivot_columns(lat.basis);
    std::vector<Z> rem = v;
    std::vector<Z> coeff(lat.basis.rows);
    for (int r = 0; r < lat.basis.rows; ++r) {
        const int p = pivots[r];
        if (rem[p] == 0) continue;
        if (rem[p] % lat.basis.a[r][p] != 0) return std::nullopt;
        coeff[r] = rem[p] / lat.basis.a[r][p];
        row_axpy(rem, lat.basis.a[r], coeff[r]);
    }
    for (const Z& x : rem)
        if (x != 0) return std::nullopt;
    return coeff;
}

SubLattice lattice_sum(const SubLattice& x, const SubLattice& y) {
    if (x.ambient_dim != y.ambient_dim)
        throw std::invalid_argument("lattice_sum: ambient dimension mismatch");
    IntMatrix stacked(0, x.ambient_dim);
    stacked.a = x.basis.a;
    stacked.a.insert(stacked.a.end(), y.basis.a.begin(), y.basis.a.end());
    stacked.rows = static_cast<int>(stacked.a.size());
    return make_sublattice(x.ambient_dim, stacked,
                           x.index_key.empty() ? y.index_key : x.index_key);
}

bool lattice_equal(const SubLattice& x, const SubLattice& y) {
    if (x.ambient_dim != y.ambient_dim || !(x.basis == y.basis)) return false;
    // Named coordinate systems must agree; an unnamed lattice matches either.
    if (!x.index_key.empty() && !y.index_key.empty() && x.index_key != y.index_key) return false;
    return true;
}

std::string QuotientReport::describe() const {
    std::ostringstream os;
    if (!contained) {
        os << "not contained: " << witness;
        return os.str();
    }
    os << "free rank " << free_rank;
    if (!torsion.empty()) {
        os << ", torsion";
        for (const Z& d : torsion) os << " Z/" << d;
    }
    if (trivial()) os << " (trivial quotient)";
    return os.str();
}

QuotientReport quotient_invariants(const SubLattice& a, const SubLattice& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("quotient_invariants: ambient dimension mismatch");
    QuotientReport rep;
    // Express each basis row of a over b.
    IntMatrix coeffs(a.basis.rows, b.basis.rows);
    for (int r = 0; r < a.basis.rows; ++r) {
        auto c = membership(a.basis.a[r], b);
        if (!c) {
            rep.contained = false;
            rep.witness = "basis row " + std::to_string(r) + " of the sublattice";
            return rep;
        }
        coeffs.a[r] = std::move(*c);
    }
    rep.contained = true;
    rep.free_rank = b.basis.rows - a.basis.rows;
    const SnfResult snf = smith_normal_form(coeffs);
    for (int t = 0; t < std::min(coeffs.rows, coeffs.cols); ++t) {
        const Z& d = snf.s.a[t][t];
        if (d == 0) break;
        if (d > 1) rep.torsion.push_back(d);
    }
    return rep;
}

SubLattice lattice_image(const SubLattice& lat, const IntMatrix& map_rows,
                         std::vector<std::string> index_key) {
    if (map_rows.rows != lat.ambient_dim)
        throw std::invalid_argument("lattice_image: map dimension mismatch");
    const IntMatrix image = mat_mul(lat.basis, map_rows);
    return make_sublattice(map_rows.cols, image, std::move(index_key));
}

}  // namespace twocycle
