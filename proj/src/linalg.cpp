#include "diho/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace diho::exactalg {

namespace {

std::size_t leading_col(const QVec& v) {
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) return j;
    return v.size();
}

// Extended gcd: returns g = gcd(a,b) with p*a + q*b = g, g >= 0.
Integer exgcd(const Integer& a, const Integer& b, Integer& p, Integer& q) {
    if (b == 0) {
        p = (a < 0) ? -1 : 1;
        q = 0;
        return abs(a);
    }
    Integer p1, q1;
    Integer g = exgcd(b, a % b, p1, q1);
    p = q1;
    q = p1 - (a / b) * q1;
    return g;
}

// Integer row echelon form via unimodular row operations, pivots strictly
// increasing and positive. Returns the pivot (row, col) list.
std::vector<std::pair<std::size_t, std::size_t>> z_row_echelon(ZMat& m) {
    std::vector<std::pair<std::size_t, std::size_t>> piv;
    if (m.empty()) return piv;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        // Combine rows until at most one has a nonzero entry in this column.
        std::size_t nz = m.size();
        for (std::size_t i = row; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            if (nz == m.size()) {
                nz = i;
                continue;
            }
            Integer p, q;
            Integer a = m[nz][col], b = m[i][col];
            Integer g = exgcd(a, b, p, q);
            Integer au = a / g, bu = b / g;
            for (std::size_t j = 0; j < cols; ++j) {
                Integer x = m[nz][j], y = m[i][j];
                m[nz][j] = p * x + q * y;
                m[i][j] = au * y - bu * x;
            }
        }
        if (nz == m.size()) continue;
        std::swap(m[row], m[nz]);
        if (m[row][col] < 0)
            for (auto& x : m[row]) x = -x;
        piv.emplace_back(row, col);
        ++row;
    }
    m.resize(row); // drop zero rows
    return piv;
}

} // namespace

EchelonBasis::EchelonBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}

QVec EchelonBasis::reduce(QVec v) const {
    assert(v.size() == ambient_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[pivots_[r]];
        if (c == 0) continue;
        Rational f = c; // pivot entries are 1
        for (std::size_t j = 0; j < ambient_; ++j)
            if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
    }
    return v;
}

bool EchelonBasis::contains(const QVec& v) const {
    QVec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

bool EchelonBasis::insert(QVec v) {
    v = reduce(std::move(v));
    std::size_t lead = leading_col(v);
    if (lead == v.size()) return false;
    Rational inv = v[lead];
    for (auto& x : v) x /= inv;
    // Eliminate the new pivot column from existing rows.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational c = rows_[r][lead];
        if (c == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (v[j] != 0) rows_[r][j] -= c * v[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, lead);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

std::vector<std::size_t> EchelonBasis::non_pivots() const {
    std::vector<std::size_t> out;
    std::size_t r = 0;
    for (std::size_t j = 0; j < ambient_; ++j) {
        if (r < pivots_.size() && pivots_[r] == j)
            ++r;
        else
            out.push_back(j);
    }
    return out;
}

std::size_t rank(const QMat& m) {
    if (m.empty()) return 0;
    EchelonBasis basis(m[0].size());
    for (const auto& row : m) basis.insert(row);
    return basis.rank();
}

QMat nullspace(const QMat& m, std::size_t cols) {
    EchelonBasis rowspace(cols);
    for (const auto& row : m) {
        assert(row.size() == cols);
        rowspace.insert(row);
    }
    const auto& rr = rowspace.rows();
    const auto& piv = rowspace.pivots();
    EchelonBasis ker(cols);
    for (std::size_t freecol : rowspace.non_pivots()) {
        QVec x(cols, Rational(0));
        x[freecol] = 1;
        for (std::size_t r = 0; r < rr.size(); ++r) x[piv[r]] = -rr[r][freecol];
        ker.insert(std::move(x));
    }
    return ker.rows();
}

SnfReport smith_normal_form(ZMat m) {
    SnfReport rep;
    if (m.empty() || m[0].empty()) return rep;
    const std::size_t nrows = m.size(), ncols = m[0].size();
    std::vector<Integer> diag;
    std::size_t t = 0;
    while (t < nrows && t < ncols) {
        // Locate a nonzero entry of minimal absolute value in the submatrix.
        std::size_t pi = t, pj = t;
        bool found = false;
        Integer best = 0;
        for (std::size_t i = t; i < nrows; ++i)
            for (std::size_t j = t; j < ncols; ++j) {
                if (m[i][j] == 0) continue;
                Integer a = abs(m[i][j]);
                if (!found || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < nrows; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < nrows; ++i) {
                if (m[i][t] == 0) continue;
                Integer q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < ncols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) { // remainder smaller than pivot: promote it
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < ncols; ++j) {
                if (m[t][j] == 0) continue;
                Integer q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < nrows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = t; i < nrows; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Enforce divisibility of the remaining block by the pivot.
            for (std::size_t i = t + 1; i < nrows && clean; ++i)
                for (std::size_t j = t + 1; j < ncols && clean; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t k = t; k < ncols; ++k) m[t][k] += m[i][k];
                        clean = false;
                    }
        }
        if (m[t][t] < 0) m[t][t] = -m[t][t];
        diag.push_back(m[t][t]);
        ++t;
    }
    rep.rank = diag.size();
    for (const auto& d : diag)
        if (d > 1) rep.invariant_factors.push_back(d);
    return rep;
}

ZMat integer_kernel_basis(const ZMat& m, std::size_t cols) {
    const std::size_t r = m.size();
    // Rows of work: (column i of m transposed, e_i); reduce the left block.
    ZMat work(cols, ZVec(r + cols, Integer(0)));
    for (std::size_t i = 0; i < cols; ++i) {
        for (std::size_t k = 0; k < r; ++k) {
            assert(m[k].size() == cols);
            work[i][k] = m[k][i];
        }
        work[i][r + i] = 1;
    }
    // Echelon on the left block only; unimodular ops act on whole rows.
    std::size_t row = 0;
    for (std::size_t col = 0; col < r && row < cols; ++col) {
        std::size_t nz = cols;
        for (std::size_t i = row; i < cols; ++i) {
            if (work[i][col] == 0) continue;
            if (nz == cols) {
                nz = i;
                continue;
            }
            Integer p, q;
            Integer a = work[nz][col], b = work[i][col];
            Integer g = exgcd(a, b, p, q);
            Integer au = a / g, bu = b / g;
            for (std::size_t j = 0; j < r + cols; ++j) {
                Integer x = work[nz][j], y = work[i][j];
                work[nz][j] = p * x + q * y;
                work[i][j] = au * y - bu * x;
            }
        }
        if (nz == cols) continue;
        std::swap(work[row], work[nz]);
        ++row;
    }
    ZMat kernel;
    for (std::size_t i = row; i < cols; ++i) {
        bool zero_left = true;
        for (std::size_t k = 0; k < r; ++k)
            if (work[i][k] != 0) { zero_left = false; break; }
        if (!zero_left) continue;
        kernel.emplace_back(work[i].begin() + static_cast<std::ptrdiff_t>(r), work[i].end());
    }
    z_row_echelon(kernel); // canonical-ish deterministic order
    return kernel;
}

ZVec coords_in_lattice_basis(const ZMat& basis, const ZVec& v) {
    const std::size_t k = basis.size();
    const std::size_t n = v.size();
    // Solve sum x_i * basis[i] = v by rational elimination.
    QMat aug(n, QVec(k + 1, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < k; ++i) aug[j][i] = Rational(basis[i][j]);
        aug[j][k] = Rational(v[j]);
    }
    EchelonBasis e(k + 1);
    for (auto& row : aug) e.insert(std::move(row));
    QVec x(k, Rational(0));
    for (std::size_t r = 0; r < e.rank(); ++r) {
        std::size_t p = e.pivots()[r];
        if (p == k) throw ValidationError("vector is not in the span of the lattice basis");
        x[p] = e.rows()[r][k];
    }
    ZVec out(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (!is_integer(x[i]))
            throw ValidationError("vector has non-integral coordinates in the lattice basis");
        out[i] = numerator(x[i]);
    }
    // The system may be overdetermined: verify.
    for (std::size_t j = 0; j < n; ++j) {
        Integer s = 0;
        for (std::size_t i = 0; i < k; ++i) s += out[i] * basis[i][j];
        if (s != v[j]) throw ValidationError("vector is not in the span of the lattice basis");
    }
    return out;
}

bool lattice_contains(const ZMat& gens, const ZVec& v) {
    ZMat h = gens;
    auto piv = z_row_echelon(h);
    ZVec w = v;
    for (auto [r, c] : piv) {
        if (w[c] == 0) continue;
        if (w[c] % h[r][c] != 0) return false;
        Integer q = w[c] / h[r][c];
        for (std::size_t j = 0; j < w.size(); ++j) w[j] -= q * h[r][j];
    }
    return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
}

} // namespace diho::exactalg
