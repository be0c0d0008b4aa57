#include "diho/morphism.hpp"

#include <random>

namespace diho::exactalg {

namespace {
const AlgebraElement kZeroElement{};
}

Morphism::Morphism(AlgebraPtr domain, AlgebraPtr codomain,
                   std::map<WordId, AlgebraElement> images, std::size_t verify_budget)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    // Every image must be supported on the codomain; every domain word needs an entry
    // (missing entries mean zero).
    for (const auto& [id, img] : images_) {
        domain_->word(id);
        for (const auto& [wid, c] : img.terms()) codomain_->word(wid);
    }
    grade_preserving_ = true;
    for (const auto& w : domain_->all_words()) {
        const AlgebraElement& img = image(w.id);
        for (const auto& [wid, c] : img.terms())
            if (codomain_->word(wid).grade() != w.grade()) {
                grade_preserving_ = false;
                break;
            }
        if (!grade_preserving_) break;
    }
    // Verify the algebra-map property on basis pairs (exhaustive within budget).
    is_algebra_map_ = true;
    auto words = domain_->all_words();
    const std::size_t n = words.size();
    auto check_pair = [&](const BasisWord& x, const BasisWord& y) {
        AlgebraElement xy;
        try {
            xy = domain_->mul_words(x, y);
        } catch (const TruncationError&) {
            ++skipped_pairs_;
            return;
        }
        AlgebraElement lhs = apply(xy);
        AlgebraElement rhs;
        try {
            rhs = codomain_->multiply(image(x.id), image(y.id));
        } catch (const TruncationError&) {
            ++skipped_pairs_;
            return;
        }
        if (!(lhs == rhs) && is_algebra_map_) {
            is_algebra_map_ = false;
            witness_ = std::make_pair(x.id, y.id);
        }
    };
    if (n * n <= verify_budget) {
        for (const auto& x : words) {
            for (const auto& y : words) {
                check_pair(x, y);
                if (!is_algebra_map_) return;
            }
        }
    } else {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t k = 0; k < verify_budget && is_algebra_map_; ++k)
            check_pair(words[pick(rng)], words[pick(rng)]);
    }
}

Morphism Morphism::zero(AlgebraPtr domain, AlgebraPtr codomain) {
    return Morphism(std::move(domain), std::move(codomain), {});
}

Morphism Morphism::identity(AlgebraPtr algebra) {
    std::map<WordId, AlgebraElement> images;
    for (const auto& w : algebra->all_words()) images.emplace(w.id, AlgebraElement::word(w.id));
    return Morphism(algebra, algebra, std::move(images));
}

const AlgebraElement& Morphism::image(const WordId& id) const {
    auto it = images_.find(id);
    return it == images_.end() ? kZeroElement : it->second;
}

AlgebraElement Morphism::apply(const AlgebraElement& x) const {
    AlgebraElement out;
    for (const auto& [id, c] : x.terms()) {
        AlgebraElement img = image(id);
        img *= c;
        out += img;
    }
    return out;
}

QMat Morphism::grade_matrix(const Grade& g) const {
    if (!grade_preserving_)
        throw ValidationError("grade_matrix requires a grade-preserving morphism");
    auto dom = domain_->basis(g);
    const std::size_t rows = codomain_->dim(g);
    QMat m(rows, QVec(dom.size(), Rational(0)));
    for (std::size_t j = 0; j < dom.size(); ++j) {
        const AlgebraElement& img = image(dom[j].id);
        for (const auto& [wid, c] : img.terms())
            m[codomain_->index_in_grade(wid)][j] = c;
    }
    return m;
}

Morphism Morphism::then(const Morphism& next) const {
    // next.apply rejects any image word outside its domain.
    std::map<WordId, AlgebraElement> images;
    for (const auto& w : domain_->all_words()) {
        AlgebraElement img = next.apply(image(w.id));
        if (!img.is_zero()) images.emplace(w.id, std::move(img));
    }
    return Morphism(domain_, next.codomain_, std::move(images));
}

bool Morphism::same_images(const Morphism& other) const {
    for (const auto& w : domain_->all_words())
        if (!(image(w.id) == other.image(w.id))) return false;
    return true;
}

namespace {

std::map<Grade, EchelonBasis> kernel_impl(const Morphism& f, const Morphism* g) {
    if (g && (f.domain() != g->domain() || f.codomain() != g->codomain()))
        throw ValidationError("kernel(f,g): maps must share domain and codomain");
    if (!f.is_grade_preserving() || (g && !g->is_grade_preserving()))
        throw ValidationError("kernel: grade-mixing morphisms are rejected");
    std::map<Grade, EchelonBasis> out;
    const auto& dom = *f.domain();
    for (const Grade& grade : dom.grades()) {
        QMat m = f.grade_matrix(grade);
        if (g) {
            QMat mg = g->grade_matrix(grade);
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= mg[i][j];
        }
        QMat ker = nullspace(m, dom.dim(grade));
        EchelonBasis basis(dom.dim(grade));
        for (auto& row : ker) basis.insert(std::move(row));
        out.emplace(grade, std::move(basis));
    }
    return out;
}

std::map<Grade, EchelonBasis> image_impl(const Morphism& f, const Morphism* g) {
    if (g && (f.domain() != g->domain() || f.codomain() != g->codomain()))
        throw ValidationError("image_span(f,g): maps must share domain and codomain");
    std::map<Grade, EchelonBasis> out;
    const auto& cod = *f.codomain();
    for (const Grade& grade : cod.grades()) out.emplace(grade, EchelonBasis(cod.dim(grade)));
    for (const auto& w : f.domain()->all_words()) {
        AlgebraElement img = f.image(w.id);
        if (g) img -= g->image(w.id);
        for (const auto& [grade, part] : cod.homogeneous_parts(img)) {
            auto it = out.find(grade);
            if (it == out.end()) it = out.emplace(grade, EchelonBasis(cod.dim(grade))).first;
            it->second.insert(cod.to_vector(part, grade));
        }
    }
    return out;
}

} // namespace

std::map<Grade, EchelonBasis> kernel(const Morphism& f, const Morphism& g) {
    return kernel_impl(f, &g);
}

std::map<Grade, EchelonBasis> kernel(const Morphism& f) { return kernel_impl(f, nullptr); }

std::map<Grade, EchelonBasis> image_span(const Morphism& f, const Morphism& g) {
    return image_impl(f, &g);
}

std::map<Grade, EchelonBasis> image_span(const Morphism& f) { return image_impl(f, nullptr); }

} // namespace diho::exactalg
