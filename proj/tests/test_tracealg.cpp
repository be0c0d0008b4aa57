#include <doctest.h>

#include <set>

#include "diho/builders.hpp"
#include "diho/tracealg.hpp"
#include "support.hpp"

using namespace diho;
using namespace diho::tracealg;
using exactalg::AlgebraElement;
using exactalg::Grade;

namespace {
AlgebraElement word(const std::string& id) { return AlgebraElement::word(id); }
} // namespace

TEST_CASE("reachability algebra of the filled square has the nine pairs") {
    auto r0 = r0_algebra(precubical::filled_square());
    std::set<std::pair<std::string, std::string>> got(r0.pairs.begin(), r0.pairs.end());
    std::set<std::pair<std::string, std::string>> expected = {
        {"1", "1"}, {"2", "2"}, {"3", "3"}, {"4", "4"}, {"4", "2"},
        {"4", "3"}, {"4", "1"}, {"2", "1"}, {"3", "1"}};
    CHECK(got == expected);
    CHECK(r0.algebra->multiply(word("[4,2]"), word("[2,1]")) == word("[4,1]"));
    CHECK(r0.algebra->multiply(word("[4,2]"), word("[3,1]")).is_zero());
}

TEST_CASE("reachability algebra of a discrete complex is diagonal") {
    precubical::PrecubicalSet discrete({{"x", "y"}}, {});
    auto r0 = r0_algebra(discrete);
    CHECK(r0.pairs.size() == 2);
    CHECK(r0.algebra->multiply(word("[x,x]"), word("[y,y]")).is_zero());
}

TEST_CASE("path algebra dimension matrices match the worked examples") {
    auto pa = path_algebra(precubical::empty_square());
    std::vector<std::vector<std::size_t>> expected = {
        {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {2, 1, 1, 1}};
    auto order = pa.algebra->objects();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(pa.algebra->dim({order[i], order[j]}) == expected[i][j]);

    auto holes = path_algebra(precubical::two_holes_left());
    std::vector<std::vector<std::size_t>> nine = {
        {1, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 0, 0, 0},
        {1, 1, 1, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 1, 0, 0, 0, 0, 0},
        {2, 1, 0, 1, 1, 0, 0, 0, 0}, {3, 2, 1, 1, 1, 1, 0, 0, 0},
        {1, 0, 0, 1, 0, 0, 1, 0, 0}, {3, 1, 0, 2, 1, 0, 1, 1, 0},
        {6, 3, 1, 3, 2, 1, 1, 1, 1}};
    auto norder = holes.algebra->objects();
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j)
            CHECK(holes.algebra->dim({norder[i], norder[j]}) == nine[i][j]);
}

TEST_CASE("loop graph path algebra is the truncated polynomial algebra") {
    const std::size_t cap = 5;
    auto pa = path_algebra(precubical::loop_graph(), cap);
    CHECK(pa.truncated);
    CHECK(pa.algebra->dim({"u", "u"}) == cap + 1);
    auto t = [&](std::size_t k) {
        return pa.element({std::string("u"), std::vector<std::string>(k, "t")});
    };
    CHECK(pa.algebra->multiply(t(2), t(3)) == t(5));
    CHECK_THROWS_AS(pa.algebra->multiply(t(3), t(3)), TruncationError);
    CHECK_THROWS_AS(path_algebra(precubical::loop_graph()), ValidationError);
}

TEST_CASE("two-cell sequence algebras") {
    auto square = precubical::filled_square();
    auto two = two_path_algebra(square);
    CHECK(two.algebra->total_dim() == 1);
    CHECK(two.algebra->has_word("C"));

    auto holes = precubical::two_holes_left();
    auto htwo = two_path_algebra(holes);
    CHECK(htwo.algebra->total_dim() == 3);
    CHECK(htwo.algebra->has_word("C"));
    CHECK(htwo.algebra->has_word("D"));
    CHECK(htwo.algebra->has_word("C.D"));
    CHECK(htwo.algebra->multiply(word("C"), word("D")) == word("C.D"));
    CHECK(htwo.algebra->multiply(word("D"), word("C")).is_zero());

    auto none = two_path_algebra(precubical::empty_square());
    CHECK(none.algebra->total_dim() == 0);
}

TEST_CASE("cyclic 2-cell chains are capped like cyclic paths") {
    auto band = testsupport::two_square_band();
    CHECK_THROWS_AS(two_path_algebra(band), ValidationError);
    auto two = two_path_algebra(band, 3);
    CHECK(two.truncated);
    CHECK(two.algebra->total_dim() == 6); // A, B, A.B, B.A, A.B.A, B.A.B
    CHECK(two.algebra->multiply(word("A"), word("B")) == word("A.B"));
    CHECK_THROWS_AS(two.algebra->multiply(word("A.B"), word("A.B")), TruncationError);

    auto pa = path_algebra(band, 6);
    auto d = boundary_maps(band, two, pa);
    CHECK(d.delta0.is_algebra_map());
    CHECK(d.delta0.image("A.B") == word("e1.e2.f1.f2"));
    for (const auto& cell : band.cells(2))
        CHECK(d.delta0.image(cell) - d.delta1.image(cell) == cell_relation(band, pa, cell));
}

TEST_CASE("cell relations give the boundary binomials") {
    auto square = precubical::filled_square();
    auto pa = path_algebra(square);
    auto rel = cell_relation(square, pa, "C");
    CHECK(rel == word("a.c") - word("b.d"));
    CHECK(pa.algebra->grade_of(rel) == Grade{"4", "1"});

    auto holes = precubical::two_holes_left();
    auto hpa = path_algebra(holes);
    CHECK(cell_relation(holes, hpa, "C") == word("i.h") - word("k.d"));
    CHECK(hpa.algebra->grade_of(cell_relation(holes, hpa, "C")) == Grade{"9", "5"});
    CHECK(cell_relation(holes, hpa, "D") == word("f.g") - word("e.b"));

    auto cube = precubical::hollow_cube();
    auto cpa = path_algebra(cube);
    for (const auto& cell : cube.cells(2))
        CHECK_FALSE(cell_relation(cube, cpa, cell).is_zero());
}

TEST_CASE("boundary maps are verified algebra maps matching the relations") {
    auto holes = precubical::two_holes_left();
    auto pa = path_algebra(holes);
    auto two = two_path_algebra(holes);
    auto d = boundary_maps(holes, two, pa);
    CHECK(d.delta0.is_algebra_map());
    CHECK(d.delta1.is_algebra_map());
    CHECK(d.delta0.image("C") == word("i.h"));
    CHECK(d.delta1.image("C") == word("k.d"));
    CHECK(d.delta0.image("C.D") == word("i.h.f.g"));
    CHECK(d.delta1.image("C.D") == word("k.d.e.b"));
    // delta0 - delta1 on single cells equals the cell relation
    for (const auto& cell : holes.cells(2))
        CHECK(d.delta0.image(cell) - d.delta1.image(cell) == cell_relation(holes, pa, cell));
    // algebra-map equation on sequence products
    CHECK(d.delta0.apply(two.algebra->multiply(word("C"), word("D"))) ==
          pa.algebra->multiply(d.delta0.image("C"), d.delta0.image("D")));
}

TEST_CASE("every trace word is graded by a reachable pair") {
    auto holes = precubical::two_holes_left();
    auto pa = path_algebra(holes);
    auto r0 = r0_algebra(holes);
    for (const auto& w : pa.algebra->all_words())
        CHECK(r0.algebra->has_word(reach_word_id(w.source, w.target)));
}

TEST_CASE("morphism verification counts pairs it must skip past the cap") {
    const std::size_t cap = 3;
    auto pa = path_algebra(precubical::loop_graph(), cap);
    exactalg::Morphism id = exactalg::Morphism::identity(pa.algebra);
    CHECK(id.is_algebra_map());
    CHECK(id.skipped_pairs() > 0); // t^2 * t^2 and friends overflow the cap
}

TEST_CASE("prefixed path algebras keep ids disjoint") {
    auto circle = precubical::two_half_circles();
    auto upper = precubical::subcomplex(circle, {"1", "2", "u"});
    auto a = path_algebra(upper, {}, "x:");
    CHECK(a.algebra->has_word("x:u"));
    CHECK(a.algebra->has_word("x:e(1)"));
    CHECK(a.id_of({"1", {"u"}}) == "x:u");
}
