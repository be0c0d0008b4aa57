#include "diho/tracealg.hpp"

#include <algorithm>

namespace diho::tracealg {

using exactalg::BasisWord;
using exactalg::GradedAlgebra;
using exactalg::MulRule;
using exactalg::VerifyLevel;

WordId reach_word_id(const VertexId& x, const VertexId& y) { return "[" + x + "," + y + "]"; }

ReachabilityAlgebra r0_algebra(const PrecubicalSet& c) {
    precubical::require_valid(c);
    const auto& verts = c.vertices();
    // Reflexive-transitive closure of the edge relation.
    std::map<VertexId, std::set<VertexId>> reach;
    for (const auto& v : verts) reach[v].insert(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e : c.cells(1)) {
            const VertexId a = c.edge_start(e), b = c.edge_end(e);
            for (auto& [x, set] : reach) {
                if (!set.count(a)) continue;
                for (const auto& t : reach[b])
                    if (set.insert(t).second) changed = true;
            }
        }
    }
    std::map<Grade, std::vector<BasisWord>> basis;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const auto& x : verts)
        for (const auto& y : verts) {
            if (!reach[x].count(y)) continue;
            basis[{x, y}].push_back({reach_word_id(x, y), x, y});
            pairs.emplace_back(x, y);
        }
    MulRule rule = [](const BasisWord& p, const BasisWord& q) {
        if (p.target != q.source) return AlgebraElement{};
        return AlgebraElement::word(reach_word_id(p.source, q.target));
    };
    ReachabilityAlgebra out;
    out.algebra = std::make_shared<GradedAlgebra>(verts, std::move(basis), std::move(rule),
                                                  VerifyLevel::full);
    out.pairs = std::move(pairs);
    return out;
}

WordId path_word_id(const PathWord& p, const std::string& prefix) {
    if (p.edges.empty()) return prefix + "e(" + p.start + ")";
    WordId id = prefix;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (i) id += '.';
        id += p.edges[i];
    }
    return id;
}

const PathWord& PathAlgebra::path(const WordId& id) const {
    auto it = paths->find(id);
    if (it == paths->end()) throw ValidationError("unknown path word: " + id);
    return it->second;
}

WordId PathAlgebra::id_of(const PathWord& p) const {
    WordId id = path_word_id(p, prefix);
    if (!paths->count(id))
        throw TruncationError("path " + id + " is not in the basis (cap " +
                              std::to_string(max_len) + ")");
    return id;
}

PathAlgebra path_algebra(const PrecubicalSet& c, std::optional<std::size_t> max_len,
                         const std::string& prefix) {
    precubical::require_valid(c);
    const bool cyclic = !precubical::is_acyclic(c);
    if (!max_len) {
        if (cyclic)
            throw ValidationError(
                "path_algebra: cyclic complex requires an explicit length cap");
        max_len = c.cells(1).size();
    }
    const std::size_t cap = *max_len;

    auto paths = std::make_shared<std::map<WordId, PathWord>>();
    std::map<Grade, std::vector<BasisWord>> basis;
    for (const auto& a : c.vertices())
        for (const auto& b : c.vertices())
            for (auto& p : precubical::enumerate_paths(c, a, b, cap)) {
                WordId id = path_word_id(p, prefix);
                basis[{a, b}].push_back({id, a, b});
                paths->emplace(std::move(id), std::move(p));
            }

    std::string pfx = prefix;
    auto shared_paths = std::static_pointer_cast<const std::map<WordId, PathWord>>(paths);
    MulRule rule = [shared_paths, pfx, cap](const BasisWord& x, const BasisWord& y) {
        if (x.target != y.source) return AlgebraElement{};
        const PathWord& px = shared_paths->at(x.id);
        const PathWord& py = shared_paths->at(y.id);
        PathWord joined{px.start, px.edges};
        joined.edges.insert(joined.edges.end(), py.edges.begin(), py.edges.end());
        if (joined.edges.size() > cap)
            throw TruncationError("path product " + x.id + " * " + y.id + " exceeds cap " +
                                  std::to_string(cap));
        WordId id = path_word_id(joined, pfx);
        if (!shared_paths->count(id))
            throw TruncationError("path product " + id + " missing from the basis");
        return AlgebraElement::word(id);
    };

    PathAlgebra out;
    out.algebra = std::make_shared<GradedAlgebra>(c.vertices(), std::move(basis), std::move(rule),
                                                  VerifyLevel::sampled);
    out.paths = shared_paths;
    out.max_len = cap;
    out.truncated = cyclic;
    out.prefix = prefix;
    return out;
}

namespace {
WordId sequence_id(const std::vector<CellId>& cells, const std::string& prefix) {
    WordId id = prefix;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) id += '.';
        id += cells[i];
    }
    return id;
}
} // namespace

const std::vector<CellId>& TwoPathAlgebra::sequence(const WordId& id) const {
    auto it = sequences->find(id);
    if (it == sequences->end()) throw ValidationError("unknown 2-cell sequence: " + id);
    return it->second;
}

WordId TwoPathAlgebra::id_of(const std::vector<CellId>& cells) const {
    WordId id = sequence_id(cells, prefix);
    if (!sequences->count(id))
        throw TruncationError("2-cell sequence " + id + " is not in the basis (cap " +
                              std::to_string(cap) + ")");
    return id;
}

TwoPathAlgebra two_path_algebra(const PrecubicalSet& c, std::optional<std::size_t> cap,
                                const std::string& prefix) {
    precubical::require_valid(c);
    const auto& twocells = c.cells(2);
    // Corner graph: cell A chains to B when final(A) = initial(B).
    bool corner_cyclic = false;
    {
        std::map<CellId, std::size_t> indeg;
        for (const auto& s : twocells) indeg[s] = 0;
        for (const auto& a : twocells)
            for (const auto& b : twocells)
                if (c.final_vertex(a) == c.initial_vertex(b)) ++indeg[b];
        std::vector<CellId> ready;
        for (const auto& [s, d] : indeg)
            if (d == 0) ready.push_back(s);
        std::size_t seen = 0;
        while (!ready.empty()) {
            CellId s = ready.back();
            ready.pop_back();
            ++seen;
            for (const auto& b : twocells)
                if (c.final_vertex(s) == c.initial_vertex(b) && --indeg[b] == 0)
                    ready.push_back(b);
        }
        corner_cyclic = seen != indeg.size();
    }
    if (!cap) {
        if (corner_cyclic)
            throw ValidationError(
                "two_path_algebra: cyclic 2-cell chains require an explicit cap");
        cap = twocells.size();
    }

    std::vector<CellId> sorted = twocells;
    std::sort(sorted.begin(), sorted.end());
    auto seqs = std::make_shared<std::map<WordId, std::vector<CellId>>>();
    std::map<Grade, std::vector<BasisWord>> basis;
    std::vector<CellId> current;
    std::function<void(const CellId&)> dfs = [&](const CellId& last) {
        WordId id = sequence_id(current, prefix);
        VertexId from = c.initial_vertex(current.front());
        VertexId to = c.final_vertex(last);
        basis[{from, to}].push_back({id, from, to});
        seqs->emplace(std::move(id), current);
        if (current.size() == *cap) return;
        for (const auto& b : sorted) {
            if (c.final_vertex(last) != c.initial_vertex(b)) continue;
            current.push_back(b);
            dfs(b);
            current.pop_back();
        }
    };
    for (const auto& s : sorted) {
        current.assign(1, s);
        dfs(s);
    }

    std::string pfx = prefix;
    std::size_t capv = *cap;
    auto shared = std::static_pointer_cast<const std::map<WordId, std::vector<CellId>>>(seqs);
    MulRule rule = [shared, pfx, capv](const BasisWord& x, const BasisWord& y) {
        if (x.target != y.source) return AlgebraElement{};
        std::vector<CellId> joined = shared->at(x.id);
        const auto& tail = shared->at(y.id);
        joined.insert(joined.end(), tail.begin(), tail.end());
        if (joined.size() > capv)
            throw TruncationError("2-cell sequence product " + x.id + " * " + y.id +
                                  " exceeds cap " + std::to_string(capv));
        return AlgebraElement::word(sequence_id(joined, pfx));
    };

    TwoPathAlgebra out;
    out.algebra = std::make_shared<GradedAlgebra>(c.vertices(), std::move(basis), std::move(rule),
                                                  VerifyLevel::sampled);
    out.sequences = shared;
    out.cap = capv;
    out.truncated = corner_cyclic;
    out.prefix = prefix;
    return out;
}

namespace {
PathWord boundary_path(const PrecubicalSet& c, const std::vector<CellId>& cells, bool lower) {
    PathWord p{c.initial_vertex(cells.front()), {}};
    for (const auto& s : cells) {
        if (lower) {
            p.edges.push_back(c.square_bottom(s));
            p.edges.push_back(c.square_right(s));
        } else {
            p.edges.push_back(c.square_left(s));
            p.edges.push_back(c.square_top(s));
        }
    }
    return p;
}
} // namespace

AlgebraElement cell_relation(const PrecubicalSet& c, const PathAlgebra& pa, const CellId& cell) {
    if (c.dim_of(cell) != 2) throw ValidationError(cell + " is not a 2-cell");
    PathWord lower = boundary_path(c, {cell}, true);
    PathWord upper = boundary_path(c, {cell}, false);
    if (lower.start != upper.start || lower.end(c) != upper.end(c))
        throw ValidationError("boundary paths of " + cell +
                                        " do not share endpoints (invalid complex)");
    return pa.element(lower) - pa.element(upper);
}

BoundaryPair boundary_maps(const PrecubicalSet& c, const TwoPathAlgebra& two,
                           const PathAlgebra& pa) {
    std::map<WordId, AlgebraElement> im0, im1;
    for (const auto& w : two.algebra->all_words()) {
        const auto& cells = two.sequence(w.id);
        im0.emplace(w.id, pa.element(boundary_path(c, cells, true)));
        im1.emplace(w.id, pa.element(boundary_path(c, cells, false)));
    }
    BoundaryPair out{Morphism(two.algebra, pa.algebra, std::move(im0)),
                     Morphism(two.algebra, pa.algebra, std::move(im1))};
    if (!out.delta0.is_algebra_map() || !out.delta1.is_algebra_map())
        throw ValidationError("boundary maps failed the algebra-map verification");
    return out;
}

} // namespace diho::tracealg
