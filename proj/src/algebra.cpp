#include "diho/algebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace diho::exactalg {

std::string to_string(const Grade& g) { return "(" + g.source + "," + g.target + ")"; }

AlgebraElement AlgebraElement::word(WordId id, Rational coeff) {
    AlgebraElement e;
    e.add_term(id, coeff);
    return e;
}

Rational AlgebraElement::coeff(const WordId& id) const {
    auto it = terms_.find(id);
    return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const WordId& id, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(id, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    for (const auto& [id, c] : other.terms_) add_term(id, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
    for (const auto& [id, c] : other.terms_) add_term(id, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [id, v] : terms_) v *= c;
    return *this;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        if (a != 1) os << a.str() << "*";
        os << id;
        first = false;
    }
    return os.str();
}

GradedAlgebra::GradedAlgebra(std::vector<VertexId> objects,
                             std::map<Grade, std::vector<BasisWord>> basis,
                             MulRule mul,
                             VerifyLevel verify)
    : objects_(std::move(objects)), basis_(std::move(basis)), mul_(std::move(mul)) {
    for (auto it = basis_.begin(); it != basis_.end();) {
        if (it->second.empty()) {
            it = basis_.erase(it);
            continue;
        }
        const Grade& g = it->first;
        grades_.push_back(g);
        for (std::size_t i = 0; i < it->second.size(); ++i) {
            const BasisWord& w = it->second[i];
            if (w.grade() != g)
                throw ValidationError("basis word " + w.id + " listed under grade " +
                                      to_string(g) + " but carries " + to_string(w.grade()));
            if (!index_.emplace(w.id, WordPos{w, i}).second)
                throw ValidationError("duplicate basis word id: " + w.id);
        }
        total_dim_ += it->second.size();
        ++it;
    }
    if (verify != VerifyLevel::none) {
        std::size_t budget = (verify == VerifyLevel::full) ? std::size_t(1000000) : 1000;
        if (auto bad = check_grading(budget))
            throw ValidationError("product of " + bad->first + " and " + bad->second +
                                  " is not homogeneous of the expected grade");
        if (auto bad = check_associativity(budget))
            throw ValidationError("multiplication is not associative at (" + (*bad)[0] + ", " +
                                  (*bad)[1] + ", " + (*bad)[2] + ")");
    }
}

std::span<const BasisWord> GradedAlgebra::basis(const Grade& g) const {
    auto it = basis_.find(g);
    if (it == basis_.end()) return {};
    return it->second;
}

const BasisWord& GradedAlgebra::word(const WordId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw ValidationError("unknown basis word: " + id);
    return it->second.word;
}

std::size_t GradedAlgebra::index_in_grade(const WordId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw ValidationError("unknown basis word: " + id);
    return it->second.index_in_grade;
}

std::vector<BasisWord> GradedAlgebra::all_words() const {
    std::vector<BasisWord> out;
    out.reserve(total_dim_);
    for (const auto& g : grades_)
        for (const auto& w : basis_.at(g)) out.push_back(w);
    return out;
}

AlgebraElement GradedAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
    AlgebraElement out;
    for (const auto& [xid, xc] : x.terms()) {
        const BasisWord& xw = word(xid);
        for (const auto& [yid, yc] : y.terms()) {
            const BasisWord& yw = word(yid);
            AlgebraElement p = mul_(xw, yw);
            p *= xc * yc;
            out += p;
        }
    }
    return out;
}

QVec GradedAlgebra::to_vector(const AlgebraElement& x, const Grade& g) const {
    QVec v(dim(g), Rational(0));
    for (const auto& [id, c] : x.terms()) {
        const auto& pos = index_.find(id);
        if (pos == index_.end()) throw ValidationError("unknown basis word: " + id);
        if (pos->second.word.grade() != g)
            throw ValidationError("element is not homogeneous of grade " + to_string(g) +
                                  ": term " + id);
        v[pos->second.index_in_grade] = c;
    }
    return v;
}

AlgebraElement GradedAlgebra::from_vector(const Grade& g, const QVec& v) const {
    auto words = basis(g);
    if (v.size() != words.size())
        throw ValidationError("vector length does not match grade dimension");
    AlgebraElement out;
    for (std::size_t i = 0; i < v.size(); ++i) out.add_term(words[i].id, v[i]);
    return out;
}

Grade GradedAlgebra::grade_of(const AlgebraElement& x) const {
    if (x.is_zero()) throw ValidationError("the zero element has no grade");
    std::optional<Grade> g;
    for (const auto& [id, c] : x.terms()) {
        Grade wg = word(id).grade();
        if (!g) g = wg;
        else if (*g != wg)
            throw ValidationError("element has mixed grades " + to_string(*g) + " and " +
                                  to_string(wg));
    }
    return *g;
}

std::map<Grade, AlgebraElement> GradedAlgebra::homogeneous_parts(const AlgebraElement& x) const {
    std::map<Grade, AlgebraElement> out;
    for (const auto& [id, c] : x.terms()) out[word(id).grade()].add_term(id, c);
    return out;
}

std::optional<std::pair<WordId, WordId>> GradedAlgebra::check_grading(std::size_t budget,
                                                                      unsigned seed) const {
    std::vector<BasisWord> words = all_words();
    const std::size_t n = words.size();
    auto check_pair = [&](const BasisWord& x, const BasisWord& y)
        -> std::optional<std::pair<WordId, WordId>> {
        AlgebraElement p;
        try {
            p = mul_(x, y);
        } catch (const TruncationError&) {
            return std::nullopt;
        }
        for (const auto& [id, c] : p.terms()) {
            const BasisWord& w = word(id);
            if (w.source != x.source || w.target != y.target)
                return std::make_pair(x.id, y.id);
        }
        return std::nullopt;
    };
    if (n * n <= budget) {
        for (const auto& x : words)
            for (const auto& y : words)
                if (auto bad = check_pair(x, y)) return bad;
        return std::nullopt;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < budget; ++k)
        if (auto bad = check_pair(words[pick(rng)], words[pick(rng)])) return bad;
    return std::nullopt;
}

std::optional<std::array<WordId, 3>> GradedAlgebra::check_associativity(std::size_t budget,
                                                                        unsigned seed) const {
    std::vector<BasisWord> words = all_words();
    const std::size_t n = words.size();
    if (n == 0) return std::nullopt;
    auto check_triple = [&](const BasisWord& x, const BasisWord& y, const BasisWord& z)
        -> std::optional<std::array<WordId, 3>> {
        try {
            AlgebraElement lhs = multiply(mul_(x, y), AlgebraElement::word(z.id));
            AlgebraElement rhs = multiply(AlgebraElement::word(x.id), mul_(y, z));
            if (!(lhs == rhs)) return std::array<WordId, 3>{x.id, y.id, z.id};
        } catch (const TruncationError&) {
        }
        return std::nullopt;
    };
    if (n * n * n <= budget) {
        for (const auto& x : words)
            for (const auto& y : words)
                for (const auto& z : words)
                    if (auto bad = check_triple(x, y, z)) return bad;
        return std::nullopt;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < budget; ++k)
        if (auto bad = check_triple(words[pick(rng)], words[pick(rng)], words[pick(rng)]))
            return bad;
    return std::nullopt;
}

AlgebraPtr zero_algebra() {
    static AlgebraPtr z = std::make_shared<GradedAlgebra>(
        std::vector<VertexId>{}, std::map<Grade, std::vector<BasisWord>>{},
        [](const BasisWord&, const BasisWord&) { return AlgebraElement{}; }, VerifyLevel::none);
    return z;
}

MulRule table_rule(std::map<std::pair<WordId, WordId>, AlgebraElement> table) {
    auto shared = std::make_shared<const std::map<std::pair<WordId, WordId>, AlgebraElement>>(
        std::move(table));
    return [shared](const BasisWord& x, const BasisWord& y) {
        auto it = shared->find({x.id, y.id});
        return it == shared->end() ? AlgebraElement{} : it->second;
    };
}

} // namespace diho::exactalg
