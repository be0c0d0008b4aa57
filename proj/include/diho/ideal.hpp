#ifndef DIHO_IDEAL_HPP
#define DIHO_IDEAL_HPP

#include <map>
#include <memory>
#include <vector>

#include "diho/morphism.hpp"

namespace diho::exactalg {

/// A two-sided ideal presented per grade: an exact echelon basis of its
/// Q-span together with the raw integer generating vectors (the u*g*v
/// products), which carry the Z-lattice structure needed for torsion.
struct IdealBasis {
    AlgebraPtr algebra;
    std::map<Grade, EchelonBasis> span;
    std::map<Grade, ZMat> raw_rows;

    std::size_t rank(const Grade& g) const;
    bool contains(const AlgebraElement& x) const;
};

/// Two-sided ideal generated by homogeneous elements: the closure of
/// { u*g*v : g generator, u/v basis words or omitted } computed by
/// breadth-first one-sided multiplication until the span saturates.
/// Throws on non-homogeneous generators (split them with homogeneous_parts).
IdealBasis two_sided_ideal(AlgebraPtr algebra, const std::vector<AlgebraElement>& generators);

/// True iff u*x and x*u stay in the span for every basis word u and every
/// spanning row x. Products beyond a length cap are skipped.
bool is_two_sided(const IdealBasis& ideal);

/// Quotient of an algebra by a two-sided ideal, with normal forms.
/// Representatives are the non-pivot basis words per grade; multiplication
/// is multiply-then-reduce.
class Quotient {
public:
    Quotient(AlgebraPtr ambient, const IdealBasis& ideal);

    const AlgebraPtr& ambient() const { return ambient_; }
    const AlgebraPtr& algebra() const { return algebra_; }
    /// Reduction modulo the ideal; idempotent, supported on representatives.
    AlgebraElement normal_form(const AlgebraElement& x) const;
    /// The canonical surjection onto the quotient.
    Morphism projection() const;

private:
    AlgebraPtr ambient_;
    AlgebraPtr algebra_;
    std::shared_ptr<const std::map<Grade, EchelonBasis>> relations_;
};

/// coKer(f, g) = codomain / two-sided ideal generated by Im(f - g).
Quotient cokernel(const Morphism& f, const Morphism& g);
Quotient cokernel(const Morphism& f);

} // namespace diho::exactalg

#endif
