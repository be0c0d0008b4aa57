#ifndef DIHO_ALGEBRA_HPP
#define DIHO_ALGEBRA_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diho/linalg.hpp"
#include "diho/scalar.hpp"

namespace diho::exactalg {

using VertexId = std::string;
using WordId = std::string;

/// Endpoint pair (source, target): the bigrading of every basis word.
struct Grade {
    VertexId source;
    VertexId target;
    auto operator<=>(const Grade&) const = default;
};

std::string to_string(const Grade& g);

struct BasisWord {
    WordId id;
    VertexId source;
    VertexId target;
    Grade grade() const { return {source, target}; }
    bool operator==(const BasisWord&) const = default;
};

/// Finite linear combination of basis words with exact rational coefficients.
/// Zero coefficients are never stored; the empty map is the zero element.
class AlgebraElement {
public:
    AlgebraElement() = default;
    static AlgebraElement word(WordId id, Rational coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<WordId, Rational>& terms() const { return terms_; }
    Rational coeff(const WordId& id) const;

    void add_term(const WordId& id, const Rational& c);
    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(const Rational& c);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
    bool operator==(const AlgebraElement&) const = default;

    std::string to_string() const;

private:
    std::map<WordId, Rational> terms_;
};

/// Multiplication rule on basis words, extended bilinearly by the algebra.
/// Must return a homogeneous element in grade (x.source, y.target) or zero;
/// may throw TruncationError on length-capped algebras.
using MulRule = std::function<AlgebraElement(const BasisWord&, const BasisWord&)>;

/// How much structural checking a constructor performs. Category/convolution
/// builders validate their tables exhaustively up front regardless.
enum class VerifyLevel { none, sampled, full };

/// A bigraded non-unital associative algebra with a finite ordered basis per
/// (source, target) grade and an explicit multiplication rule. Immutable
/// after construction; safe for concurrent reads.
class GradedAlgebra {
public:
    GradedAlgebra(std::vector<VertexId> objects,
                  std::map<Grade, std::vector<BasisWord>> basis,
                  MulRule mul,
                  VerifyLevel verify = VerifyLevel::sampled);

    const std::vector<VertexId>& objects() const { return objects_; }
    /// Grades with a nonempty basis, in deterministic order.
    const std::vector<Grade>& grades() const { return grades_; }
    std::span<const BasisWord> basis(const Grade& g) const;
    std::size_t dim(const Grade& g) const { return basis(g).size(); }
    std::size_t total_dim() const { return total_dim_; }

    bool has_word(const WordId& id) const { return index_.count(id) > 0; }
    const BasisWord& word(const WordId& id) const;
    std::size_t index_in_grade(const WordId& id) const;
    /// All basis words in grade-major order.
    std::vector<BasisWord> all_words() const;

    AlgebraElement mul_words(const BasisWord& x, const BasisWord& y) const { return mul_(x, y); }
    /// Bilinear extension of the rule. Throws ValidationError on unknown words.
    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;

    /// Coordinates of a homogeneous element in the given grade's basis order.
    QVec to_vector(const AlgebraElement& x, const Grade& g) const;
    AlgebraElement from_vector(const Grade& g, const QVec& v) const;
    /// The unique grade carrying all terms of x; throws on mixed support.
    Grade grade_of(const AlgebraElement& x) const;
    /// Splits x into homogeneous components, keyed by grade.
    std::map<Grade, AlgebraElement> homogeneous_parts(const AlgebraElement& x) const;

    /// Checks mul(mul(x,y),z) == mul(x,mul(y,z)) on basis triples: exhaustive
    /// when the triple count stays within budget, otherwise a seeded sample.
    /// Returns a violating triple if one is found. Truncated products are
    /// skipped (they are not defined within the cap).
    std::optional<std::array<WordId, 3>> check_associativity(std::size_t budget = 20000,
                                                             unsigned seed = 1) const;
    /// Checks that every basis product is homogeneous of grade
    /// (x.source, y.target); same budget/sampling contract.
    std::optional<std::pair<WordId, WordId>> check_grading(std::size_t budget = 20000,
                                                           unsigned seed = 1) const;

private:
    std::vector<VertexId> objects_;
    std::vector<Grade> grades_;
    std::map<Grade, std::vector<BasisWord>> basis_;
    struct WordPos {
        BasisWord word;
        std::size_t index_in_grade;
    };
    std::map<WordId, WordPos> index_;
    MulRule mul_;
    std::size_t total_dim_ = 0;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// The zero algebra (no objects, no words).
AlgebraPtr zero_algebra();

/// Helper for table-backed algebras: missing (x,y) keys multiply to zero.
MulRule table_rule(std::map<std::pair<WordId, WordId>, AlgebraElement> table);

} // namespace diho::exactalg

#endif
