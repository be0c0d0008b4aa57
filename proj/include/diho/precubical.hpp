#ifndef DIHO_PRECUBICAL_HPP
#define DIHO_PRECUBICAL_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "diho/scalar.hpp"

namespace diho::precubical {

using CellId = std::string;
using VertexId = std::string;

/// Finite precubical set: cells per dimension with their 2n face maps.
/// Face convention: d^eps_i freezes coordinate i at eps, so for a 2-cell
/// d01 = left, d02 = bottom, d11 = right, d12 = top. The initial vertex is
/// the shared start of left and bottom, the final vertex the shared end of
/// right and top, and the two corner-to-corner boundary paths read
/// bottom.right and left.top. Immutable after construction.
class PrecubicalSet {
public:
    PrecubicalSet(std::vector<std::vector<CellId>> cells,
                  std::map<CellId, std::array<std::vector<CellId>, 2>> faces);

    std::size_t max_dim() const { return cells_.empty() ? 0 : cells_.size() - 1; }
    const std::vector<CellId>& cells(std::size_t n) const;
    const std::vector<VertexId>& vertices() const { return cells(0); }
    bool has_cell(const CellId& id) const { return dim_.count(id) > 0; }
    std::size_t dim_of(const CellId& id) const;

    /// Face d^eps_i, with i in 1..n for an n-cell.
    const CellId& face(const CellId& id, int eps, std::size_t i) const;

    VertexId edge_start(const CellId& e) const { return face(e, 0, 1); }
    VertexId edge_end(const CellId& e) const { return face(e, 1, 1); }

    CellId square_left(const CellId& s) const { return face(s, 0, 1); }
    CellId square_bottom(const CellId& s) const { return face(s, 0, 2); }
    CellId square_right(const CellId& s) const { return face(s, 1, 1); }
    CellId square_top(const CellId& s) const { return face(s, 1, 2); }
    VertexId initial_vertex(const CellId& s) const { return edge_start(square_left(s)); }
    VertexId final_vertex(const CellId& s) const { return edge_end(square_right(s)); }

    const std::map<CellId, std::array<std::vector<CellId>, 2>>& faces() const { return faces_; }

private:
    std::vector<std::vector<CellId>> cells_;
    std::map<CellId, std::array<std::vector<CellId>, 2>> faces_;
    std::map<CellId, std::size_t> dim_;
};

struct Violation {
    CellId cell;
    std::string message;
};

/// Checks face references, arities, the precubical identities
/// d^e_i d^h_j = d^h_{j-1} d^e_i (i < j), and the 2-cell corner lemmas.
/// Violations are data, not exceptions.
std::vector<Violation> validate(const PrecubicalSet& c);

/// Throws ValidationError listing the violations, otherwise passes through.
const PrecubicalSet& require_valid(const PrecubicalSet& c);

/// JSON round-trip: {"dims": N, "cells": {"0": [...], ...},
/// "faces": {cell: {"0": [...], "1": [...]}}}. Serialization uses canonical
/// (lexicographic) key order and is a byte-stable fixed point of
/// parse-then-serialize.
PrecubicalSet parse_json(const std::string& text);
std::string serialize_json(const PrecubicalSet& c);

/// A composable edge path; the empty path is the identity at its vertex.
struct PathWord {
    VertexId start;
    std::vector<CellId> edges;

    bool empty() const { return edges.empty(); }
    std::size_t length() const { return edges.size(); }
    VertexId end(const PrecubicalSet& c) const {
        return edges.empty() ? start : c.edge_end(edges.back());
    }
    bool operator==(const PathWord&) const = default;
};

/// All edge paths a -> b of length <= max_len, ordered lexicographically by
/// edge-id sequence (prefix first). Complete for acyclic complexes whenever
/// max_len >= |C_1|.
std::vector<PathWord> enumerate_paths(const PrecubicalSet& c, const VertexId& a,
                                      const VertexId& b, std::size_t max_len);

/// True iff the 1-skeleton has no directed cycle through a nonempty edge path.
bool is_acyclic(const PrecubicalSet& c);

/// Face-closed subcomplex on the given cells (same ids, same order).
PrecubicalSet subcomplex(const PrecubicalSet& c, const std::set<CellId>& keep);

/// Rename every cell id through the map (missing ids keep their name);
/// the prefix form renames TO prefix+id.
PrecubicalSet relabel(const PrecubicalSet& c, const std::map<CellId, CellId>& names);
PrecubicalSet relabel_prefix(const PrecubicalSet& c, const std::string& prefix);

/// Disjoint union; cell id sets must not overlap.
PrecubicalSet disjoint_union(const PrecubicalSet& a, const PrecubicalSet& b);

} // namespace diho::precubical

#endif
