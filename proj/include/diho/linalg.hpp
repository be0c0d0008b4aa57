#ifndef DIHO_LINALG_HPP
#define DIHO_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "diho/scalar.hpp"

namespace diho::exactalg {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using ZVec = std::vector<Integer>;
using ZMat = std::vector<ZVec>;

/// Incremental reduced row echelon basis over Q for a submodule of a free
/// module of fixed finite rank. Rows are kept in reduced echelon form with
/// strictly increasing pivot columns; this is the carrier for ideals,
/// kernels and images.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ambient_dim);

    std::size_t ambient() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }
    const QMat& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residue of v after elimination against the basis. Zero iff v is in the span.
    QVec reduce(QVec v) const;
    bool contains(const QVec& v) const;

    /// Insert v (reduced, normalized, back-substituted). Returns true iff the rank grew.
    bool insert(QVec v);

    /// Columns without a pivot, in increasing order.
    std::vector<std::size_t> non_pivots() const;

private:
    std::size_t ambient_;
    QMat rows_;
    std::vector<std::size_t> pivots_;
};

/// Rank of a rational matrix (exact).
std::size_t rank(const QMat& m);

/// RREF nullspace basis: one vector per free column, itself in reduced
/// echelon form. Rows of the result are vectors x with m * x = 0, where m
/// acts on column vectors of length `cols`.
QMat nullspace(const QMat& m, std::size_t cols);

/// Smith normal form summary of an integer matrix: rank plus the invariant
/// factors > 1 in divisibility order. The quotient of Z^cols by the row
/// lattice is Z^(cols - rank) + sum of Z/d_i.
struct SnfReport {
    std::size_t rank = 0;
    std::vector<Integer> invariant_factors; // each > 1, d_i | d_{i+1}
    bool operator==(const SnfReport&) const = default;
};

SnfReport smith_normal_form(ZMat m);

/// Basis of the integer kernel lattice {x in Z^cols : m * x = 0}. The
/// returned lattice is saturated (it is the kernel of an integer matrix).
ZMat integer_kernel_basis(const ZMat& m, std::size_t cols);

/// Solve B^T * x = v for x where the rows of `basis` are Z-linearly
/// independent and v lies in their Q-span; throws if v is outside the span
/// or the coordinates are non-integral.
ZVec coords_in_lattice_basis(const ZMat& basis, const ZVec& v);

/// Membership of v in the lattice generated by the rows of `gens`.
bool lattice_contains(const ZMat& gens, const ZVec& v);

} // namespace diho::exactalg

#endif
