#ifndef DIHO_PRODUCTS_HPP
#define DIHO_PRODUCTS_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "diho/morphism.hpp"

namespace diho::exactalg {

/// Free product (coproduct) of two algebras, truncated at `word_cap` tensor
/// factors. Basis words are alternating tensors x1|x2|...|xn whose segments
/// come from the two factors in alternation; multiplication concatenates
/// across a factor change and merges the boundary segments inside a common
/// factor. Products needing more than word_cap factors throw TruncationError.
///
/// The id of a tensor word is its segment ids joined with '|'; factor word
/// sets must therefore be disjoint and free of '|'. A word's factor count is
/// its total number of '|'-separated segments, so nesting coproducts keeps
/// caps comparable.
struct CoproductAlgebra {
    AlgebraPtr algebra;
    AlgebraPtr factor_a;
    AlgebraPtr factor_b;
    std::size_t word_cap = 0;

    /// Canonical embedding of a factor (identity on single-segment words).
    Morphism inject_a() const;
    Morphism inject_b() const;
};

CoproductAlgebra coproduct(AlgebraPtr a, AlgebraPtr b, std::size_t word_cap);

std::size_t tensor_leaves(const WordId& id);
std::vector<WordId> tensor_segments(const WordId& id);

/// Direct product: componentwise algebra on the product module. A's words
/// are tagged "l:", B's "r:"; cross products vanish.
AlgebraPtr direct_product(AlgebraPtr a, AlgebraPtr b);

inline WordId product_tag_left(const WordId& id) { return "l:" + id; }
inline WordId product_tag_right(const WordId& id) { return "r:" + id; }

} // namespace diho::exactalg

#endif
