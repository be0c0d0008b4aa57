#include "diho/builders.hpp"

namespace diho::precubical {

namespace {

struct Edge {
    CellId id;
    VertexId from;
    VertexId to;
};

struct Square {
    CellId id;
    CellId left, bottom, right, top;
};

PrecubicalSet assemble(std::vector<VertexId> vertices, const std::vector<Edge>& edges,
                       const std::vector<Square>& squares) {
    std::vector<std::vector<CellId>> cells(squares.empty() ? 2 : 3);
    cells[0] = std::move(vertices);
    std::map<CellId, std::array<std::vector<CellId>, 2>> faces;
    for (const auto& e : edges) {
        cells[1].push_back(e.id);
        faces.emplace(e.id, std::array<std::vector<CellId>, 2>{{{e.from}, {e.to}}});
    }
    for (const auto& s : squares) {
        cells[2].push_back(s.id);
        faces.emplace(s.id, std::array<std::vector<CellId>, 2>{
                                {{s.left, s.bottom}, {s.right, s.top}}});
    }
    PrecubicalSet c(std::move(cells), std::move(faces));
    require_valid(c);
    return c;
}

} // namespace

PrecubicalSet grid_complex(std::size_t rows, std::size_t cols,
                           const std::set<std::pair<std::size_t, std::size_t>>& filled) {
    if (rows < 1 || cols < 1) throw ValidationError("grid_complex: empty grid");
    for (const auto& [r, c] : filled)
        if (r + 1 >= rows || c + 1 >= cols)
            throw ValidationError("grid_complex: filled square (" + std::to_string(r) + "," +
                                  std::to_string(c) + ") out of range");
    auto v = [cols](std::size_t r, std::size_t c) {
        return std::to_string(r * cols + c + 1);
    };
    auto h = [](std::size_t r, std::size_t c) {
        return "h" + std::to_string(r) + "_" + std::to_string(c);
    };
    auto w = [](std::size_t r, std::size_t c) {
        return "v" + std::to_string(r) + "_" + std::to_string(c);
    };
    std::vector<VertexId> vertices;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) vertices.push_back(v(r, c));
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c + 1 < cols; ++c) edges.push_back({h(r, c), v(r, c + 1), v(r, c)});
    for (std::size_t r = 0; r + 1 < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) edges.push_back({w(r, c), v(r + 1, c), v(r, c)});
    std::vector<Square> squares;
    for (const auto& [r, c] : filled)
        squares.push_back({"s" + std::to_string(r) + "_" + std::to_string(c),
                           /*left=*/w(r, c + 1), /*bottom=*/h(r + 1, c),
                           /*right=*/w(r, c), /*top=*/h(r, c)});
    return assemble(std::move(vertices), edges, squares);
}

PrecubicalSet loop_graph() { return assemble({"u"}, {{"t", "u", "u"}}, {}); }

PrecubicalSet filled_square() {
    return assemble({"1", "2", "3", "4"},
                    {{"a", "4", "2"}, {"b", "4", "3"}, {"c", "2", "1"}, {"d", "3", "1"}},
                    {{"C", /*left=*/"b", /*bottom=*/"a", /*right=*/"c", /*top=*/"d"}});
}

PrecubicalSet empty_square() {
    return assemble({"1", "2", "3", "4"},
                    {{"a", "4", "2"}, {"b", "4", "3"}, {"c", "2", "1"}, {"d", "3", "1"}}, {});
}

namespace {
std::vector<Edge> two_holes_edges() {
    return {{"a", "3", "2"}, {"b", "2", "1"}, {"c", "6", "3"}, {"d", "6", "5"},
            {"e", "5", "2"}, {"f", "5", "4"}, {"g", "4", "1"}, {"h", "8", "5"},
            {"i", "9", "8"}, {"j", "8", "7"}, {"k", "9", "6"}, {"l", "7", "4"}};
}
std::vector<VertexId> nine() {
    return {"1", "2", "3", "4", "5", "6", "7", "8", "9"};
}
} // namespace

PrecubicalSet two_holes_left() {
    return assemble(nine(), two_holes_edges(),
                    {{"C", /*left=*/"k", /*bottom=*/"i", /*right=*/"h", /*top=*/"d"},
                     {"D", /*left=*/"e", /*bottom=*/"f", /*right=*/"g", /*top=*/"b"}});
}

PrecubicalSet two_holes_right() {
    return assemble(nine(), two_holes_edges(),
                    {{"E", /*left=*/"h", /*bottom=*/"j", /*right=*/"l", /*top=*/"f"},
                     {"F", /*left=*/"c", /*bottom=*/"d", /*right=*/"e", /*top=*/"a"}});
}

PrecubicalSet hollow_cube() {
    std::vector<Edge> edges = {{"e21", "2", "1"}, {"e31", "3", "1"}, {"e42", "4", "2"},
                               {"e43", "4", "3"}, {"e51", "5", "1"}, {"e62", "6", "2"},
                               {"e65", "6", "5"}, {"e73", "7", "3"}, {"e75", "7", "5"},
                               {"e84", "8", "4"}, {"e86", "8", "6"}, {"e87", "8", "7"}};
    std::vector<Square> squares = {
        {"Fxy0", "e86", "e87", "e75", "e65"}, {"Fxy1", "e42", "e43", "e31", "e21"},
        {"Fxz0", "e84", "e87", "e73", "e43"}, {"Fxz1", "e62", "e65", "e51", "e21"},
        {"Fyz0", "e84", "e86", "e62", "e42"}, {"Fyz1", "e73", "e75", "e51", "e31"}};
    return assemble({"1", "2", "3", "4", "5", "6", "7", "8"}, edges, squares);
}

PrecubicalSet two_half_circles() {
    return assemble({"1", "2"}, {{"u", "1", "2"}, {"v", "2", "1"}}, {});
}

} // namespace diho::precubical
