#include <doctest.h>

#include <random>

#include "diho/category.hpp"
#include "diho/tracealg.hpp"
#include "support.hpp"
#include "diho/builders.hpp"

using namespace diho;
using namespace diho::exactalg;

namespace {

// The two-object discrete category ("2") and the one-object category ("1").
CategoryPresentation discrete_two() {
    CategoryPresentation c;
    c.objects = {"a", "b"};
    c.morphisms = {{"ea", "a", "a"}, {"eb", "b", "b"}};
    c.identities = {{"a", "ea"}, {"b", "eb"}};
    c.composition = {{{"ea", "ea"}, "ea"}, {{"eb", "eb"}, "eb"}};
    return c;
}

CategoryPresentation one_object() {
    CategoryPresentation c;
    c.objects = {"g"};
    c.morphisms = {{"eg", "g", "g"}};
    c.identities = {{"g", "eg"}};
    c.composition = {{{"eg", "eg"}, "eg"}};
    return c;
}

} // namespace

TEST_CASE("algebra elements drop zero coefficients") {
    AlgebraElement x = AlgebraElement::word("w", 2);
    x.add_term("w", -2);
    CHECK(x.is_zero());
    x.add_term("u", Rational(1) / 3);
    x.add_term("v", -1);
    AlgebraElement y = x;
    y -= x;
    CHECK(y.is_zero());
    CHECK((Rational(3) * x).coeff("u") == 1);
}

TEST_CASE("convolution algebra of the discrete two-object category is R^2") {
    AlgebraPtr r2 = convolution_algebra(discrete_two());
    CHECK(r2->total_dim() == 2);
    AlgebraElement ea = AlgebraElement::word("ea");
    AlgebraElement eb = AlgebraElement::word("eb");
    CHECK(r2->multiply(ea, ea) == ea);
    CHECK(r2->multiply(eb, eb) == eb);
    CHECK(r2->multiply(ea, eb).is_zero());
    // componentwise: (k,l)x(k',l') = (kk',ll')
    AlgebraElement x = Rational(2) * ea + Rational(3) * eb;
    AlgebraElement y = Rational(5) * ea + Rational(7) * eb;
    CHECK(r2->multiply(x, y) == Rational(10) * ea + Rational(21) * eb);
}

TEST_CASE("convolution algebra of the one-object category is R") {
    AlgebraPtr r = convolution_algebra(one_object());
    AlgebraElement m = Rational(4) * AlgebraElement::word("eg");
    AlgebraElement m2 = Rational(6) * AlgebraElement::word("eg");
    CHECK(r->multiply(m, m2) == Rational(24) * AlgebraElement::word("eg"));
}

TEST_CASE("bad composition tables are rejected with named laws") {
    auto cat = discrete_two();
    cat.composition[{"ea", "eb"}] = "ea"; // non-composable pair
    CHECK_THROWS_WITH_AS(convolution_algebra(cat),
                         doctest::Contains("non-composable"), ValidationError);

    // Associativity violation on a three-arrow chain.
    CategoryPresentation c;
    c.objects = {"x"};
    c.morphisms = {{"e", "x", "x"}, {"f", "x", "x"}};
    c.identities = {{"x", "e"}};
    c.composition = {{{"e", "e"}, "e"}, {{"e", "f"}, "f"}, {{"f", "e"}, "f"},
                     {{"f", "f"}, "e"}};
    // (f f) f = e f = f and f (f f) = f e = f: fine; break one entry instead:
    c.composition[{"f", "f"}] = "f";
    // now f is idempotent; identity laws still hold; associativity holds too,
    // so tamper with an identity law instead:
    c.composition[{"e", "f"}] = "e";
    CHECK_THROWS_WITH_AS(convolution_algebra(c), doctest::Contains("identity"),
                         ValidationError);

    auto missing = discrete_two();
    missing.composition.erase({"ea", "ea"});
    CHECK_THROWS_WITH_AS(convolution_algebra(missing), doctest::Contains("missing"),
                         ValidationError);
}

TEST_CASE("associativity failures in composition tables are caught") {
    // Three arrows x->x where comp is deliberately non-associative.
    CategoryPresentation c;
    c.objects = {"x"};
    c.morphisms = {{"e", "x", "x"}, {"f", "x", "x"}, {"g", "x", "x"}};
    c.identities = {{"x", "e"}};
    auto set = [&](const char* a, const char* b, const char* r) {
        c.composition[{a, b}] = r;
    };
    set("e", "e", "e");
    set("e", "f", "f");
    set("f", "e", "f");
    set("e", "g", "g");
    set("g", "e", "g");
    set("f", "f", "g");
    set("f", "g", "e");
    set("g", "f", "f");
    set("g", "g", "f");
    // (f f) f = g f = f, f (f f) = f g = e: not associative.
    CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("associative"), ValidationError);
}

TEST_CASE("kronecker path algebra has the matrix-algebra shape and product") {
    CategoryPresentation cat =
        free_category({"1", "2"}, {{"alpha", "1", "2"}, {"beta", "1", "2"}});
    AlgebraPtr k = convolution_algebra(cat);
    CHECK(k->dim({"1", "1"}) == 1);
    CHECK(k->dim({"1", "2"}) == 2);
    CHECK(k->dim({"2", "1"}) == 0);
    CHECK(k->dim({"2", "2"}) == 1);

    auto elem = [&](int a, int b, int c, int d) {
        AlgebraElement e;
        e.add_term("id(1)", a);
        e.add_term("alpha", b);
        e.add_term("beta", c);
        e.add_term("id(2)", d);
        return e;
    };
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 25; ++trial) {
        int a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
        int a2 = coef(rng), b2 = coef(rng), c2 = coef(rng), d2 = coef(rng);
        // matrix product convention: primed matrix times unprimed
        CHECK(k->multiply(elem(a2, b2, c2, d2), elem(a, b, c, d)) ==
              elem(a2 * a, a2 * b + b2 * d, a2 * c + c2 * d, d2 * d));
    }
}

TEST_CASE("multiply rejects words outside the basis") {
    AlgebraPtr r2 = convolution_algebra(discrete_two());
    CHECK_THROWS_AS(r2->multiply(AlgebraElement::word("nope"), AlgebraElement::word("ea")),
                    ValidationError);
}

TEST_CASE("grading bookkeeping: vectors, parts, mixed grades") {
    AlgebraPtr r2 = convolution_algebra(discrete_two());
    AlgebraElement mixed = AlgebraElement::word("ea") + AlgebraElement::word("eb");
    CHECK_THROWS_AS(r2->grade_of(mixed), ValidationError);
    auto parts = r2->homogeneous_parts(mixed);
    CHECK(parts.size() == 2);
    CHECK(r2->to_vector(parts.at({"a", "a"}), {"a", "a"}) == QVec{Rational(1)});
    CHECK(r2->from_vector({"b", "b"}, {Rational(1)}) == AlgebraElement::word("eb"));
}

TEST_CASE("path algebras: associativity is exhaustive and idempotents act by source") {
    auto c = precubical::two_holes_left();
    auto pa = tracealg::path_algebra(c);
    CHECK_FALSE(pa.algebra->check_associativity(2000000).has_value());
    CHECK_FALSE(pa.algebra->check_grading(2000000).has_value());
    // e_a * w = w iff source(w) = a; zero otherwise. Across all words:
    for (const auto& v : c.vertices()) {
        AlgebraElement ea = AlgebraElement::word("e(" + v + ")");
        for (const auto& w : pa.algebra->all_words()) {
            AlgebraElement prod = pa.algebra->multiply(ea, AlgebraElement::word(w.id));
            if (w.source == v)
                CHECK(prod == AlgebraElement::word(w.id));
            else
                CHECK(prod.is_zero());
        }
    }
}

TEST_CASE("linearize_functor flags the collapse and accepts identity/inclusions") {
    auto two = discrete_two();
    auto one = one_object();

    FunctorPresentation identity;
    for (const auto& o : two.objects) identity.object_map[o] = o;
    for (const auto& m : two.morphisms) identity.morphism_map[m.id] = m.id;
    auto id_result = linearize_functor(two, two, identity);
    CHECK(id_result.is_algebra_map);
    CHECK(id_result.injective_on_objects);

    FunctorPresentation collapse;
    collapse.object_map = {{"a", "g"}, {"b", "g"}};
    collapse.morphism_map = {{"ea", "eg"}, {"eb", "eg"}};
    auto col = linearize_functor(two, one, collapse);
    CHECK_FALSE(col.injective_on_objects);
    CHECK_FALSE(col.is_algebra_map);
    REQUIRE(col.witness.has_value());
    // the (1,0) x (0,1) witness: orthogonal idempotents with a nonzero image product
    CHECK(col.witness->first != col.witness->second);

    // A subquiver inclusion of free categories.
    CategoryPresentation big =
        free_category({"1", "2", "3"},
                      {{"f", "1", "2"}, {"g", "2", "3"}, {"h", "1", "3"}});
    CategoryPresentation small = free_category({"1", "2", "3"}, {{"f", "1", "2"}, {"g", "2", "3"}});
    FunctorPresentation incl;
    for (const auto& o : small.objects) incl.object_map[o] = o;
    for (const auto& m : small.morphisms) incl.morphism_map[m.id] = m.id;
    auto inc = linearize_functor(small, big, incl);
    CHECK(inc.injective_on_objects);
    CHECK(inc.is_algebra_map);

    FunctorPresentation broken = identity;
    broken.morphism_map["ea"] = "eb";
    CHECK_THROWS_AS(linearize_functor(two, two, broken), ValidationError);
}

TEST_CASE("morphism verification records a witness and grade preservation") {
    AlgebraPtr r2 = convolution_algebra(discrete_two());
    // The fold R^2 -> R collapsing both idempotents to the same word.
    AlgebraPtr r1 = convolution_algebra(one_object());
    std::map<WordId, AlgebraElement> images{{"ea", AlgebraElement::word("eg")},
                                            {"eb", AlgebraElement::word("eg")}};
    Morphism fold(r2, r1, images);
    CHECK_FALSE(fold.is_algebra_map());
    REQUIRE(fold.algebra_map_witness().has_value());
    CHECK_FALSE(fold.is_grade_preserving());
    CHECK(Morphism::identity(r2).is_algebra_map());
    CHECK(Morphism::zero(r2, r2).is_algebra_map());
}
