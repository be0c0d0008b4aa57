#ifndef DIHO_DIHOMOLOGY_HPP
#define DIHO_DIHOMOLOGY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diho/ideal.hpp"
#include "diho/tracealg.hpp"

namespace diho::dihomology {

using exactalg::AlgebraElement;
using exactalg::EchelonBasis;
using exactalg::Grade;
using exactalg::SnfReport;
using exactalg::WordId;
using precubical::PrecubicalSet;
using precubical::VertexId;

/// Which span of boundary relations the path algebra is divided by.
///   ideal: two-sided ideal generated by all 2-cell relations (the only mode
///          whose quotient is again an algebra); the default.
///   image: span of delta0 - delta1 over pure 2-cell sequences.
///   local: span of the per-cell relations alone, no padding.
/// The spans are nested local <= image <= ideal, grade by grade.
enum class QuotientMode { ideal, image, local };

QuotientMode parse_mode(const std::string& name);
std::string to_string(QuotientMode mode);

/// Per-vertex-pair summary: free rank and torsion invariant factors of the
/// quotient module. Entry (a,b) is zero whenever b is unreachable from a.
struct DimensionMatrix {
    struct Entry {
        std::size_t rank = 0;
        std::vector<Integer> torsion;
        bool operator==(const Entry&) const = default;
    };
    std::vector<VertexId> order;
    std::vector<std::vector<Entry>> entries;

    const Entry& at(const VertexId& a, const VertexId& b) const;
    bool operator==(const DimensionMatrix&) const = default;

    std::string to_json() const;
    /// Aligned text grid in the matrix-algebra notation: 0, R, R^k, with
    /// torsion appended as +Z/d terms.
    std::string pretty() const;
    /// Plain ranks, for tests.
    std::vector<std::vector<std::size_t>> ranks() const;
};

/// HA1 data: the path algebra together with the per-grade relation spans,
/// representatives (non-pivot path words), and integer SNF reports.
class HomologyPresentation {
public:
    HomologyPresentation(tracealg::PathAlgebra base, QuotientMode mode,
                         std::map<Grade, EchelonBasis> relations,
                         std::map<Grade, exactalg::ZMat> raw_relations, unsigned jobs = 1);

    const tracealg::PathAlgebra& base() const { return base_; }
    QuotientMode mode() const { return mode_; }
    std::size_t max_len() const { return base_.max_len; }
    /// True for cyclic complexes: every dimension below is the length-capped
    /// filtration stage, with no stabilization claim.
    bool truncated() const { return base_.truncated; }

    const std::map<Grade, EchelonBasis>& relations() const { return *relations_; }
    std::size_t relation_rank(const Grade& g) const;
    const std::vector<WordId>& representatives(const Grade& g) const;
    const SnfReport& snf(const Grade& g) const;

    std::size_t dim(const Grade& g) const;
    DimensionMatrix dimension_matrix() const;

    /// Reduction to the representative basis; idempotent and linear.
    AlgebraElement normal_form(const AlgebraElement& x) const;
    /// Same homology class, i.e. p - q lies in the relation span of their
    /// common grade. Throws on grade mismatch.
    bool class_equal(const AlgebraElement& p, const AlgebraElement& q) const;
    bool class_equal(const precubical::PathWord& p, const precubical::PathWord& q) const;
    /// Multiply classes by concatenating representatives and reducing.
    /// Well-defined only in ideal mode; other modes are rejected.
    AlgebraElement multiply_classes(const AlgebraElement& x, const AlgebraElement& y) const;

private:
    tracealg::PathAlgebra base_;
    QuotientMode mode_;
    std::shared_ptr<const std::map<Grade, EchelonBasis>> relations_;
    std::map<Grade, std::vector<WordId>> reps_;
    std::map<Grade, SnfReport> snf_;
};

/// HA0: the reachability algebra.
tracealg::ReachabilityAlgebra ha0(const PrecubicalSet& c);
DimensionMatrix ha0_matrix(const PrecubicalSet& c);

/// HA1 of the precubical set under the given quotient mode. max_len as in
/// path_algebra; `jobs` bounds per-grade parallelism (1 = sequential).
HomologyPresentation ha1(const PrecubicalSet& c, QuotientMode mode = QuotientMode::ideal,
                         std::optional<std::size_t> max_len = {}, unsigned jobs = 1);

/// Sub-matrix on the grades with both endpoints in the subset.
DimensionMatrix restricted_matrix(const HomologyPresentation& h,
                                  const std::vector<VertexId>& subset);

/// Dimension matrix of a plain path algebra (no quotient, no torsion).
DimensionMatrix path_matrix(const tracealg::PathAlgebra& pa);

} // namespace diho::dihomology

#endif
