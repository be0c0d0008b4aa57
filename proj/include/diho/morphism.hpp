#ifndef DIHO_MORPHISM_HPP
#define DIHO_MORPHISM_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "diho/algebra.hpp"

namespace diho::exactalg {

/// A linear map between graded algebras, given by the image of every domain
/// basis word. The algebra-map property f(x*y) = f(x)*f(y) is verified on
/// basis pairs at construction, never assumed; pairs whose product overflows
/// a length cap are skipped and counted.
class Morphism {
public:
    Morphism(AlgebraPtr domain, AlgebraPtr codomain, std::map<WordId, AlgebraElement> images,
             std::size_t verify_budget = 20000);

    static Morphism zero(AlgebraPtr domain, AlgebraPtr codomain);
    static Morphism identity(AlgebraPtr algebra);

    const AlgebraPtr& domain() const { return domain_; }
    const AlgebraPtr& codomain() const { return codomain_; }
    const AlgebraElement& image(const WordId& id) const;
    AlgebraElement apply(const AlgebraElement& x) const;

    bool is_algebra_map() const { return is_algebra_map_; }
    /// First basis pair violating f(x*y) = f(x)*f(y), when one exists.
    const std::optional<std::pair<WordId, WordId>>& algebra_map_witness() const {
        return witness_;
    }
    std::size_t skipped_pairs() const { return skipped_pairs_; }

    /// True iff every word's image is zero or homogeneous of the same grade.
    bool is_grade_preserving() const { return grade_preserving_; }

    /// Matrix block of the map restricted to one grade (grade-preserving
    /// maps only): rows indexed by codomain basis, columns by domain basis.
    QMat grade_matrix(const Grade& g) const;

    Morphism then(const Morphism& next) const;
    bool same_images(const Morphism& other) const;

private:
    AlgebraPtr domain_;
    AlgebraPtr codomain_;
    std::map<WordId, AlgebraElement> images_;
    bool is_algebra_map_ = false;
    bool grade_preserving_ = false;
    std::optional<std::pair<WordId, WordId>> witness_;
    std::size_t skipped_pairs_ = 0;
};

/// Echelon bases, per grade, of {x : f(x) = g(x)}. Both maps must share
/// domain and codomain and be grade-preserving. For the one-map form
/// kernel(f) the result is a two-sided ideal (kernel of an algebra map);
/// the pair form need not be.
std::map<Grade, EchelonBasis> kernel(const Morphism& f, const Morphism& g);
std::map<Grade, EchelonBasis> kernel(const Morphism& f);

/// Per-grade echelon basis of the image of f - g (or of f alone).
std::map<Grade, EchelonBasis> image_span(const Morphism& f, const Morphism& g);
std::map<Grade, EchelonBasis> image_span(const Morphism& f);

} // namespace diho::exactalg

#endif
