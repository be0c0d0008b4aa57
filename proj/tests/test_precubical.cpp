#include <doctest.h>

#include "diho/builders.hpp"
#include "diho/precubical.hpp"
#include "support.hpp"

using namespace diho;
using namespace diho::precubical;

TEST_CASE("builders produce valid complexes with the expected cell counts") {
    struct Row {
        PrecubicalSet c;
        std::size_t v, e, s;
    };
    std::vector<Row> rows;
    rows.push_back({empty_square(), 4, 4, 0});
    rows.push_back({filled_square(), 4, 4, 1});
    rows.push_back({two_holes_left(), 9, 12, 2});
    rows.push_back({two_holes_right(), 9, 12, 2});
    rows.push_back({loop_graph(), 1, 1, 0});
    rows.push_back({hollow_cube(), 8, 12, 6});
    rows.push_back({two_half_circles(), 2, 2, 0});
    rows.push_back({grid_complex(2, 2, {{0, 0}}), 4, 4, 1});
    rows.push_back({grid_complex(3, 3, {{1, 1}, {0, 0}}), 9, 12, 2});
    for (const auto& r : rows) {
        CHECK(validate(r.c).empty());
        CHECK(r.c.cells(0).size() == r.v);
        CHECK(r.c.cells(1).size() == r.e);
        CHECK(r.c.cells(2).size() == r.s);
    }
    CHECK_THROWS_AS(grid_complex(2, 2, {{1, 0}}), ValidationError);
}

TEST_CASE("the empty precubical set is valid") {
    PrecubicalSet empty({}, {});
    CHECK(validate(empty).empty());
    CHECK(empty.max_dim() == 0);
}

TEST_CASE("a rewired square edge violates exactly one precubical identity") {
    // Take the filled square and rewire the left edge b to end at 2 instead of 3.
    std::vector<std::vector<CellId>> cells = {
        {"1", "2", "3", "4"}, {"a", "b", "c", "d"}, {"C"}};
    std::map<CellId, std::array<std::vector<CellId>, 2>> faces;
    faces["a"] = {{{"4"}, {"2"}}};
    faces["b"] = {{{"4"}, {"2"}}}; // was 4 -> 3
    faces["c"] = {{{"2"}, {"1"}}};
    faces["d"] = {{{"3"}, {"1"}}};
    faces["C"] = {{{"b", "a"}, {"c", "d"}}};
    PrecubicalSet broken(std::move(cells), std::move(faces));
    auto violations = validate(broken);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].cell == "C");
    CHECK(violations[0].message.find("(0,1,1,2)") != std::string::npos);
}

TEST_CASE("json serialization round-trips byte-identically") {
    for (const auto& c : {filled_square(), two_holes_left(), hollow_cube(), loop_graph()}) {
        std::string text = serialize_json(c);
        PrecubicalSet back = parse_json(text);
        CHECK(validate(back).empty());
        CHECK(serialize_json(back) == text);
        CHECK(back.cells(0) == c.cells(0));
        CHECK(back.cells(1) == c.cells(1));
        CHECK(back.cells(2) == c.cells(2));
    }
    CHECK_THROWS_AS(parse_json("not json"), ValidationError);
    CHECK_THROWS_AS(parse_json("{\"cells\": {}}"), ValidationError);
}

TEST_CASE("path enumeration is lexicographic, complete, and monotone") {
    auto sq = empty_square();
    auto paths = enumerate_paths(sq, "4", "1", 4);
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].edges == std::vector<CellId>{"a", "c"});
    CHECK(paths[1].edges == std::vector<CellId>{"b", "d"});

    auto holes = two_holes_left();
    CHECK(enumerate_paths(holes, "9", "1", 12).size() == 6);

    // a vertex to itself in an acyclic complex: only the constant path
    auto self = enumerate_paths(sq, "4", "4", 4);
    REQUIRE(self.size() == 1);
    CHECK(self[0].empty());

    // monotone and stabilizing in the cap
    std::size_t prev = 0;
    for (std::size_t cap = 0; cap <= 6; ++cap) {
        std::size_t n = enumerate_paths(holes, "9", "1", cap).size();
        CHECK(n >= prev);
        prev = n;
    }
    CHECK(prev == 6);
    CHECK(enumerate_paths(holes, "9", "1", 99).size() == 6);

    CHECK_THROWS_AS(enumerate_paths(sq, "nope", "1", 3), ValidationError);
}

TEST_CASE("acyclicity of the 1-skeleton") {
    CHECK(is_acyclic(filled_square()));
    CHECK_FALSE(is_acyclic(loop_graph()));
    CHECK_FALSE(is_acyclic(two_half_circles()));
    PrecubicalSet discrete({{"x", "y"}}, {});
    CHECK(is_acyclic(discrete));
}

TEST_CASE("two-cell corner lemmas hold on every builder") {
    for (const auto& c : {filled_square(), two_holes_left(), two_holes_right(), hollow_cube()}) {
        for (const auto& s : c.cells(2)) {
            CHECK(c.edge_end(c.square_bottom(s)) == c.edge_start(c.square_right(s)));
            CHECK(c.edge_end(c.square_left(s)) == c.edge_start(c.square_top(s)));
            CHECK(c.edge_start(c.square_left(s)) == c.initial_vertex(s));
            CHECK(c.edge_end(c.square_top(s)) == c.final_vertex(s));
        }
    }
}

TEST_CASE("a filled cube passes the three-dimensional identity checks") {
    // Add the solid 3-cell to the cube boundary: d^e_i is the face square
    // with coordinate i frozen, matching the F<axes><value> naming.
    auto hollow = hollow_cube();
    std::vector<std::vector<CellId>> cells(4);
    for (std::size_t n = 0; n <= 2; ++n) cells[n] = hollow.cells(n);
    cells[3] = {"K"};
    auto faces = hollow.faces();
    faces["K"] = {{{"Fyz0", "Fxz0", "Fxy0"}, {"Fyz1", "Fxz1", "Fxy1"}}};
    PrecubicalSet solid(std::move(cells), std::move(faces));
    CHECK(validate(solid).empty());

    // Swapping two of its faces breaks an identity.
    auto bad_faces = solid.faces();
    std::swap(bad_faces["K"][0][0], bad_faces["K"][0][1]);
    std::vector<std::vector<CellId>> cells2(4);
    for (std::size_t n = 0; n <= 2; ++n) cells2[n] = hollow.cells(n);
    cells2[3] = {"K"};
    PrecubicalSet broken(std::move(cells2), std::move(bad_faces));
    CHECK_FALSE(validate(broken).empty());
}

TEST_CASE("cyclically chained squares: a two-square band") {
    auto band = testsupport::two_square_band();
    CHECK(validate(band).empty());
    CHECK_FALSE(is_acyclic(band));
    CHECK(band.initial_vertex("A") == "1");
    CHECK(band.final_vertex("A") == "2");
    CHECK(band.final_vertex("B") == "1");
}

TEST_CASE("subcomplex, relabel and disjoint union") {
    auto circle = two_half_circles();
    auto upper = subcomplex(circle, {"1", "2", "u"});
    CHECK(validate(upper).empty());
    CHECK(upper.cells(1) == std::vector<CellId>{"u"});
    CHECK_THROWS_WITH_AS(subcomplex(filled_square(), {"C", "a", "b", "c", "d"}),
                         doctest::Contains("face-closed"), ValidationError);

    auto pref = relabel_prefix(filled_square(), "A.");
    CHECK(validate(pref).empty());
    CHECK(pref.has_cell("A.C"));
    CHECK(pref.edge_start("A.a") == "A.4");

    CHECK_THROWS_WITH_AS(disjoint_union(filled_square(), empty_square()),
                         doctest::Contains("clash"), ValidationError);
    auto u = disjoint_union(relabel_prefix(filled_square(), "A."),
                            relabel_prefix(empty_square(), "B."));
    CHECK(validate(u).empty());
    CHECK(u.cells(0).size() == 8);
    CHECK(u.cells(2).size() == 1);
}
