#ifndef DIHO_TRACEALG_HPP
#define DIHO_TRACEALG_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diho/algebra.hpp"
#include "diho/morphism.hpp"
#include "diho/precubical.hpp"

namespace diho::tracealg {

using exactalg::AlgebraElement;
using exactalg::AlgebraPtr;
using exactalg::Grade;
using exactalg::Morphism;
using exactalg::WordId;
using precubical::CellId;
using precubical::PathWord;
using precubical::PrecubicalSet;
using precubical::VertexId;

/// Reachability algebra: one basis word [x,y] per ordered vertex pair with a
/// directed path x -> y; [x,y]*[y,t] = [x,t], mismatched pairs multiply to 0.
struct ReachabilityAlgebra {
    AlgebraPtr algebra;
    std::vector<std::pair<VertexId, VertexId>> pairs;
};

ReachabilityAlgebra r0_algebra(const PrecubicalSet& c);

WordId reach_word_id(const VertexId& x, const VertexId& y);

/// Path algebra of the 1-skeleton: basis words are edge paths up to max_len,
/// multiplication is concatenation (zero on endpoint mismatch,
/// TruncationError past the cap). Paths are enumerated lexicographically, so
/// dimension matrices are reproducible bit for bit.
struct PathAlgebra {
    AlgebraPtr algebra;
    std::shared_ptr<const std::map<WordId, PathWord>> paths;
    std::size_t max_len = 0;
    bool truncated = false; // complex is cyclic; results are length-filtered
    std::string prefix;

    const PathWord& path(const WordId& id) const;
    /// Id of a path of this algebra (throws if absent, e.g. beyond the cap).
    WordId id_of(const PathWord& p) const;
    AlgebraElement element(const PathWord& p) const { return AlgebraElement::word(id_of(p)); }
};

/// Id scheme: constant path "e(v)", otherwise edge ids joined with '.',
/// both prepended with `prefix`.
WordId path_word_id(const PathWord& p, const std::string& prefix = "");

/// max_len defaults to |C_1| for acyclic complexes (complete enumeration);
/// cyclic complexes require an explicit cap.
PathAlgebra path_algebra(const PrecubicalSet& c, std::optional<std::size_t> max_len = {},
                         const std::string& prefix = "");

/// Algebra of chained 2-cell sequences (A_1,...,A_k), k >= 1, with the final
/// corner of each cell meeting the initial corner of the next; multiplication
/// is chain concatenation. The cap bounds the sequence length for cyclic
/// corner graphs.
struct TwoPathAlgebra {
    AlgebraPtr algebra;
    std::shared_ptr<const std::map<WordId, std::vector<CellId>>> sequences;
    std::size_t cap = 0;
    bool truncated = false;
    std::string prefix;

    const std::vector<CellId>& sequence(const WordId& id) const;
    WordId id_of(const std::vector<CellId>& cells) const;
};

TwoPathAlgebra two_path_algebra(const PrecubicalSet& c, std::optional<std::size_t> cap = {},
                                const std::string& prefix = "");

/// Boundary relation of a 2-cell: bottom.right - left.top, homogeneous in
/// grade (initial corner, final corner).
AlgebraElement cell_relation(const PrecubicalSet& c, const PathAlgebra& pa, const CellId& cell);

/// The two boundary algebra maps R2 -> R1: delta0 concatenates the
/// bottom.right path of each cell in a sequence, delta1 the left.top path.
/// Swapping them negates every relation and changes no quotient.
struct BoundaryPair {
    Morphism delta0;
    Morphism delta1;
};

BoundaryPair boundary_maps(const PrecubicalSet& c, const TwoPathAlgebra& two,
                           const PathAlgebra& pa);

} // namespace diho::tracealg

#endif
