#ifndef DIHO_SIMPLICIAL_HPP
#define DIHO_SIMPLICIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diho/dihomology.hpp"
#include "diho/products.hpp"

namespace diho::simplicial {

using exactalg::AlgebraElement;
using exactalg::AlgebraPtr;
using exactalg::Grade;
using exactalg::Morphism;
using exactalg::WordId;
using precubical::PrecubicalSet;

/// Levels 0..N of graded algebras with face maps d_i: level n -> n-1
/// (0 <= i <= n) and, optionally, degeneracies s_i: level n -> n+1.
/// A structure without degeneracies is a truncated semi-simplicial algebra,
/// which is all the combinatorial trace complex of a precubical set carries.
struct TruncatedSimplicialAlgebra {
    std::vector<AlgebraPtr> levels;
    /// faces[n] has n+1 maps out of level n; faces[0] is empty.
    std::vector<std::vector<Morphism>> faces;
    /// degeneracies[n] has n+1 maps level n -> n+1, for n < depth; empty
    /// vector means none at all.
    std::vector<std::vector<Morphism>> degeneracies;

    std::size_t depth() const { return levels.empty() ? 0 : levels.size() - 1; }
    bool has_degeneracies() const { return !degeneracies.empty(); }
};

/// All simplicial identities that are defined within the truncation, plus
/// the algebra-map property of every structure map. Empty result = clean.
std::vector<std::string> check_simplicial(const TruncatedSimplicialAlgebra& s);

/// Moore normalization: per level the joint kernel N_n of d_0..d_{n-1} as an
/// integer lattice basis (level coordinates), with the differential
/// (-1)^n d_n written in those bases. Construction asserts d(d(x)) = 0.
struct MooreComplex {
    TruncatedSimplicialAlgebra base;
    /// kernel_basis[n][g]: rows = Z-basis of N_n at grade g, level coords.
    std::vector<std::map<Grade, exactalg::ZMat>> kernel_basis;
    /// diff[n][g]: row k = coordinates of the differential of the k-th
    /// N_n basis vector in the N_{n-1} basis.
    std::vector<std::map<Grade, exactalg::ZMat>> diff;

    std::size_t depth() const { return base.depth(); }
    std::size_t dim(std::size_t n, const Grade& g) const;
};

MooreComplex moore_normalize(const TruncatedSimplicialAlgebra& s);

/// Whether the boundary lattice at level n is closed under multiplication by
/// joint-kernel elements (the concrete properness consequence on a finite
/// basis). Vacuous when nothing lies above level n.
bool verify_properness(const MooreComplex& m, std::size_t n);

struct ModuleSummary {
    std::size_t rank = 0;
    std::vector<Integer> torsion;
    bool operator==(const ModuleSummary&) const = default;
};

/// Homology of the Moore complex at level n, per grade. Degree 0 is the
/// coequalizer of d_0 and d_1, i.e. level 0 modulo the two-sided ideal
/// generated by Im(d_0 - d_1); higher degrees are ker/im of the Moore
/// differential as integer modules.
std::map<Grade, ModuleSummary> homology(const MooreComplex& m, std::size_t n);

/// Zero-multiplication check for homology classes at level n >= 1: products
/// of cycles must be boundaries. A counterexample is reported, never
/// suppressed.
struct EckmannHiltonResult {
    bool zero_multiplication = true;
    std::size_t pairs_checked = 0;
    std::string witness; // empty when clean
};

EckmannHiltonResult eckmann_hilton_check(const MooreComplex& m, std::size_t n);

/// Levelwise free product with factorwise structure maps; verified
/// simplicial after construction.
struct SimplicialCoproduct {
    TruncatedSimplicialAlgebra complex;
    std::vector<exactalg::CoproductAlgebra> level_data;
};

SimplicialCoproduct simplicial_coproduct(const TruncatedSimplicialAlgebra& s1,
                                         const TruncatedSimplicialAlgebra& s2,
                                         std::size_t word_cap);

/// The 2-truncated semi-simplicial trace pair (paths, 2-cell sequences) of a
/// precubical set, with the boundary pair as the two faces.
struct TraceComplex {
    PrecubicalSet complex;
    TruncatedSimplicialAlgebra simplicial;
    tracealg::PathAlgebra paths;
    tracealg::TwoPathAlgebra sequences;
};

TraceComplex trace_complex(const PrecubicalSet& c, std::optional<std::size_t> max_len = {},
                           std::optional<std::size_t> seq_cap = {},
                           const std::string& prefix = "");

/// Fold of the coproduct of two subcomplex trace complexes into the ambient
/// one: tensor words multiply out in the ambient algebra. Verified algebra
/// map per level; surjective in every level for disjoint subcomplexes.
struct FoldMap {
    SimplicialCoproduct coproduct;
    std::vector<Morphism> h; // per level
};

FoldMap fold_map_h(const TraceComplex& s1, const TraceComplex& s2, const TraceComplex& ambient,
                   std::size_t word_cap);

/// Graded modules and linear maps, the raw material of exactness checks.
struct GradedModule {
    std::map<Grade, std::size_t> dims;
    std::size_t dim(const Grade& g) const;
};

struct GradedLinearMap {
    std::string label;
    GradedModule domain;
    GradedModule codomain;
    /// Per-grade blocks, rows = codomain coords, cols = domain coords;
    /// missing grades are zero blocks.
    std::map<Grade, exactalg::QMat> blocks;
};

GradedLinearMap linear_map_of(const Morphism& m, const std::string& label);
GradedLinearMap zero_into(const GradedModule& target, const std::string& label);
GradedLinearMap onto_zero(const GradedModule& source, const std::string& label);
/// Inclusion of a per-grade echelon kernel into its ambient module.
GradedLinearMap inclusion_of(const std::map<Grade, exactalg::EchelonBasis>& sub,
                             const GradedModule& ambient, const std::string& label);
GradedModule module_of(const AlgebraPtr& a);

struct ExactnessPosition {
    std::string at;
    bool exact = false;
    std::string detail;
};

/// im(incoming) = ker(outgoing) at every interior object, by exact rank and
/// containment per grade.
std::vector<ExactnessPosition> exactness_check(const std::vector<GradedLinearMap>& maps);

/// Disjoint-union report: HA1 of both parts and of the union, the blockwise
/// sum check, and exactness of 0 -> Ker h -> coproduct -> paths(union) -> 0
/// in degree 1.
struct LesReport {
    dihomology::DimensionMatrix left;
    dihomology::DimensionMatrix right;
    dihomology::DimensionMatrix combined;
    bool block_sum_ok = false;
    std::vector<std::string> block_mismatches;
    std::vector<ExactnessPosition> degree1;
    bool fold_surjective_level0 = false;
    bool fold_surjective_level1 = false;

    bool all_ok() const;
    std::string to_json() const;
};

LesReport disjoint_union_les_report(const PrecubicalSet& c1, const PrecubicalSet& c2,
                                    dihomology::QuotientMode mode = dihomology::QuotientMode::ideal,
                                    std::size_t word_cap = 2,
                                    std::optional<std::size_t> max_len = {});

} // namespace diho::simplicial

#endif
