#include "diho/ideal.hpp"

#include <deque>
#include <set>

namespace diho::exactalg {

namespace {

// Scale a rational vector to an integer one by clearing denominators.
// Content is never divided out: it is part of the lattice.
ZVec integerize(const QVec& v) {
    Integer l = 1;
    for (const auto& q : v) l = lcm(l, denominator(q));
    ZVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = numerator(v[i]) * (l / denominator(v[i]));
    return out;
}

struct IdealAccumulator {
    AlgebraPtr algebra;
    std::map<Grade, EchelonBasis> span;
    std::map<Grade, std::set<ZVec>> raw;

    // Returns true iff the Q-rank grew.
    bool add(const AlgebraElement& e) {
        if (e.is_zero()) return false;
        bool grew = false;
        for (const auto& [g, part] : algebra->homogeneous_parts(e)) {
            QVec v = algebra->to_vector(part, g);
            raw[g].insert(integerize(v));
            auto it = span.find(g);
            if (it == span.end()) it = span.emplace(g, EchelonBasis(algebra->dim(g))).first;
            grew |= it->second.insert(std::move(v));
        }
        return grew;
    }
};

} // namespace

std::size_t IdealBasis::rank(const Grade& g) const {
    auto it = span.find(g);
    return it == span.end() ? 0 : it->second.rank();
}

bool IdealBasis::contains(const AlgebraElement& x) const {
    if (x.is_zero()) return true;
    for (const auto& [g, part] : algebra->homogeneous_parts(x)) {
        auto it = span.find(g);
        if (it == span.end()) return false;
        if (!it->second.contains(algebra->to_vector(part, g))) return false;
    }
    return true;
}

IdealBasis two_sided_ideal(AlgebraPtr algebra, const std::vector<AlgebraElement>& generators) {
    IdealAccumulator acc{algebra, {}, {}};
    const std::vector<BasisWord> words = algebra->all_words();
    std::deque<AlgebraElement> frontier;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        algebra->grade_of(g); // rejects non-homogeneous generators
        acc.add(g);
        frontier.push_back(g);
    }
    // All u*g*v products (u, v basis words or omitted) generate the ideal
    // both as a Q-span and as a Z-lattice, so they are enumerated in full;
    // the breadth-first pass below only guards span closure.
    auto mul = [&](const AlgebraElement& x, const AlgebraElement& y,
                   AlgebraElement& out) -> bool {
        try {
            out = algebra->multiply(x, y);
        } catch (const TruncationError&) {
            return false;
        }
        return !out.is_zero();
    };
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        AlgebraElement p, q;
        for (const auto& v : words)
            if (mul(g, AlgebraElement::word(v.id), q) && acc.add(q)) frontier.push_back(q);
        for (const auto& u : words) {
            if (!mul(AlgebraElement::word(u.id), g, p)) continue;
            if (acc.add(p)) frontier.push_back(p);
            for (const auto& v : words)
                if (mul(p, AlgebraElement::word(v.id), q) && acc.add(q)) frontier.push_back(q);
        }
    }
    // One-sided products close the two-sided span: u*(x*v) = (u*x)*v and
    // products of basis words expand over the basis again.
    while (!frontier.empty()) {
        AlgebraElement x = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& u : words) {
            AlgebraElement ue = AlgebraElement::word(u.id);
            for (int side = 0; side < 2; ++side) {
                AlgebraElement p;
                try {
                    p = side == 0 ? algebra->multiply(ue, x) : algebra->multiply(x, ue);
                } catch (const TruncationError&) {
                    continue; // beyond the cap: not part of the truncated module
                }
                if (p.is_zero()) continue;
                if (acc.add(p)) frontier.push_back(p);
            }
        }
    }
    IdealBasis out{std::move(acc.algebra), std::move(acc.span), {}};
    for (auto& [g, rows] : acc.raw) out.raw_rows.emplace(g, ZMat(rows.begin(), rows.end()));
    return out;
}

bool is_two_sided(const IdealBasis& ideal) {
    const auto& alg = *ideal.algebra;
    const std::vector<BasisWord> words = alg.all_words();
    for (const auto& [g, basis] : ideal.span) {
        for (const auto& row : basis.rows()) {
            AlgebraElement x = alg.from_vector(g, row);
            for (const auto& u : words) {
                AlgebraElement ue = AlgebraElement::word(u.id);
                for (int side = 0; side < 2; ++side) {
                    AlgebraElement p;
                    try {
                        p = side == 0 ? alg.multiply(ue, x) : alg.multiply(x, ue);
                    } catch (const TruncationError&) {
                        continue;
                    }
                    if (p.is_zero()) continue;
                    for (const auto& [pg, part] : alg.homogeneous_parts(p)) {
                        auto it = ideal.span.find(pg);
                        if (it == ideal.span.end()) return false;
                        if (!it->second.contains(alg.to_vector(part, pg))) return false;
                    }
                }
            }
        }
    }
    return true;
}

Quotient::Quotient(AlgebraPtr ambient, const IdealBasis& ideal) : ambient_(std::move(ambient)) {
    if (ideal.algebra != ambient_)
        throw ValidationError("quotient: ideal does not live in the given algebra");
    if (!is_two_sided(ideal))
        throw ValidationError(
            "quotient: span is not closed under multiplication (not a two-sided ideal)");
    auto rel = std::make_shared<std::map<Grade, EchelonBasis>>(ideal.span);
    relations_ = rel;

    std::map<Grade, std::vector<BasisWord>> basis;
    for (const Grade& g : ambient_->grades()) {
        auto words = ambient_->basis(g);
        auto it = rel->find(g);
        if (it == rel->end()) {
            basis.emplace(g, std::vector<BasisWord>(words.begin(), words.end()));
            continue;
        }
        std::vector<BasisWord> reps;
        for (std::size_t j : it->second.non_pivots()) reps.push_back(words[j]);
        if (!reps.empty()) basis.emplace(g, std::move(reps));
    }

    AlgebraPtr amb = ambient_;
    auto rels = relations_;
    MulRule rule = [amb, rels](const BasisWord& x, const BasisWord& y) {
        AlgebraElement p = amb->multiply(AlgebraElement::word(x.id), AlgebraElement::word(y.id));
        AlgebraElement out;
        for (const auto& [g, part] : amb->homogeneous_parts(p)) {
            auto it = rels->find(g);
            if (it == rels->end()) {
                out += part;
                continue;
            }
            out += amb->from_vector(g, it->second.reduce(amb->to_vector(part, g)));
        }
        return out;
    };
    algebra_ = std::make_shared<GradedAlgebra>(ambient_->objects(), std::move(basis),
                                               std::move(rule), VerifyLevel::sampled);
}

AlgebraElement Quotient::normal_form(const AlgebraElement& x) const {
    AlgebraElement out;
    for (const auto& [g, part] : ambient_->homogeneous_parts(x)) {
        auto it = relations_->find(g);
        if (it == relations_->end()) {
            out += part;
            continue;
        }
        out += ambient_->from_vector(g, it->second.reduce(ambient_->to_vector(part, g)));
    }
    return out;
}

Morphism Quotient::projection() const {
    std::map<WordId, AlgebraElement> images;
    for (const auto& w : ambient_->all_words()) {
        AlgebraElement nf = normal_form(AlgebraElement::word(w.id));
        if (!nf.is_zero()) images.emplace(w.id, std::move(nf));
    }
    return Morphism(ambient_, algebra_, std::move(images));
}

Quotient cokernel(const Morphism& f, const Morphism& g) {
    const auto& cod = f.codomain();
    if (g.codomain() != cod || g.domain() != f.domain())
        throw ValidationError("cokernel(f,g): maps must share domain and codomain");
    std::vector<AlgebraElement> gens;
    for (const auto& w : f.domain()->all_words()) {
        AlgebraElement d = f.image(w.id) - g.image(w.id);
        for (auto& [grade, part] : cod->homogeneous_parts(d)) gens.push_back(std::move(part));
    }
    return Quotient(cod, two_sided_ideal(cod, gens));
}

Quotient cokernel(const Morphism& f) { return cokernel(f, Morphism::zero(f.domain(), f.codomain())); }

} // namespace diho::exactalg
