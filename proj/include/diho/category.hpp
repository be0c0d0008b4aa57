#ifndef DIHO_CATEGORY_HPP
#define DIHO_CATEGORY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diho/morphism.hpp"

namespace diho::exactalg {

/// A finite category given by an explicit composition table. The table must
/// cover exactly the composable pairs; identities are listed as ordinary
/// morphisms.
struct CategoryPresentation {
    struct Arrow {
        WordId id;
        VertexId source;
        VertexId target;
    };
    std::vector<VertexId> objects;
    std::vector<Arrow> morphisms;
    std::map<VertexId, WordId> identities;
    /// (f, g) with target(f) = source(g), mapped to the composite "f then g".
    std::map<std::pair<WordId, WordId>, WordId> composition;

    const Arrow& arrow(const WordId& id) const;
    /// Throws ValidationError naming the first broken law (endpoints,
    /// identity laws, totality, associativity).
    void validate() const;
};

/// Convolution algebra of the category: basis words are the morphisms,
/// f*g is the composite when composable and zero otherwise. Identities
/// become the orthogonal idempotents e_a.
AlgebraPtr convolution_algebra(const CategoryPresentation& cat);

/// Free category on a finite acyclic quiver: morphisms are all paths
/// (identities included), composition is concatenation.
CategoryPresentation free_category(const std::vector<VertexId>& objects,
                                   const std::vector<CategoryPresentation::Arrow>& arrows);

struct FunctorPresentation {
    std::map<VertexId, VertexId> object_map;
    std::map<WordId, WordId> morphism_map;
};

struct LinearizedFunctor {
    Morphism map;
    bool is_algebra_map;
    std::optional<std::pair<WordId, WordId>> witness;
    bool injective_on_objects;
};

/// Validates that F is a functor (identities, endpoints, composition), then
/// returns its linear extension with the verified algebra-map flag. The flag
/// holds whenever F is injective on objects; the collapse of two objects
/// onto one generally breaks it.
LinearizedFunctor linearize_functor(const CategoryPresentation& dom,
                                    const CategoryPresentation& cod,
                                    const FunctorPresentation& f);

} // namespace diho::exactalg

#endif
