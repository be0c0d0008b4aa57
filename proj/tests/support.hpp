// Shared test utilities: independent oracles and small generators.
#ifndef DIHO_TESTS_SUPPORT_HPP
#define DIHO_TESTS_SUPPORT_HPP

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "diho/algebra.hpp"
#include "diho/category.hpp"
#include "diho/morphism.hpp"
#include "diho/precubical.hpp"
#include "diho/simplicial.hpp"

namespace testsupport {

using diho::Integer;
using diho::Rational;

// ---------------------------------------------------------------------------
// Fraction-free integer rank (Bareiss), independent of the library's echelon.
inline std::size_t bareiss_rank(std::vector<std::vector<Integer>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// Brute-force two-sided-ideal rank per grade for a precubical set: enumerate
// every u * r * v padding of every 2-cell relation by raw edge-list
// concatenation, then take the exact integer rank. Never touches the
// library's algebra, ideal, or echelon code.
struct BruteIdeal {
    // quotient dimension at (a, b): #paths - rank of the padded relation span
    std::map<std::pair<std::string, std::string>, std::size_t> quotient_dim;
};

inline BruteIdeal brute_force_ideal_quotient(const diho::precubical::PrecubicalSet& c,
                                             std::size_t max_len) {
    namespace pc = diho::precubical;
    using Path = std::vector<std::string>;
    auto edge_list = [](const pc::PathWord& p) { return p.edges; };

    struct Relation {
        std::string src, dst;
        Path lower, upper; // lower - upper
    };
    std::vector<Relation> rels;
    for (const auto& cell : c.cells(2)) {
        Relation r;
        r.src = c.initial_vertex(cell);
        r.dst = c.final_vertex(cell);
        r.lower = {c.square_bottom(cell), c.square_right(cell)};
        r.upper = {c.square_left(cell), c.square_top(cell)};
        rels.push_back(std::move(r));
    }
    BruteIdeal out;
    for (const auto& a : c.vertices())
        for (const auto& b : c.vertices()) {
            auto paths = pc::enumerate_paths(c, a, b, max_len);
            if (paths.empty()) {
                out.quotient_dim[{a, b}] = 0;
                continue;
            }
            std::map<Path, std::size_t> index;
            for (std::size_t i = 0; i < paths.size(); ++i)
                index.emplace(edge_list(paths[i]), i);
            std::vector<std::vector<Integer>> vectors;
            for (const auto& r : rels) {
                for (const auto& u : pc::enumerate_paths(c, a, r.src, max_len))
                    for (const auto& v : pc::enumerate_paths(c, r.dst, b, max_len)) {
                        Path lo = u.edges, hi = u.edges;
                        lo.insert(lo.end(), r.lower.begin(), r.lower.end());
                        hi.insert(hi.end(), r.upper.begin(), r.upper.end());
                        lo.insert(lo.end(), v.edges.begin(), v.edges.end());
                        hi.insert(hi.end(), v.edges.begin(), v.edges.end());
                        if (lo.size() > max_len || hi.size() > max_len) continue;
                        std::vector<Integer> vec(paths.size(), Integer(0));
                        vec[index.at(lo)] += 1;
                        vec[index.at(hi)] -= 1;
                        vectors.push_back(std::move(vec));
                    }
            }
            out.quotient_dim[{a, b}] = paths.size() - bareiss_rank(vectors);
        }
    return out;
}

// ---------------------------------------------------------------------------
// A cyclic fixture: square A runs 1 -> 2, square B runs 2 -> 1, so both the
// 1-skeleton and the 2-cell corner graph contain directed cycles.
inline diho::precubical::PrecubicalSet two_square_band() {
    namespace pc = diho::precubical;
    std::vector<std::vector<pc::CellId>> cells = {
        {"1", "2", "3", "4", "5", "6"},
        {"e1", "e2", "e3", "e4", "f1", "f2", "f3", "f4"},
        {"A", "B"}};
    std::map<pc::CellId, std::array<std::vector<pc::CellId>, 2>> faces;
    auto edge = [&](const pc::CellId& id, const pc::VertexId& s, const pc::VertexId& t) {
        faces[id] = {{{s}, {t}}};
    };
    edge("e1", "1", "3");
    edge("e2", "3", "2");
    edge("e3", "1", "4");
    edge("e4", "4", "2");
    edge("f1", "2", "5");
    edge("f2", "5", "1");
    edge("f3", "2", "6");
    edge("f4", "6", "1");
    faces["A"] = {{{"e3", "e1"}, {"e2", "e4"}}};
    faces["B"] = {{{"f3", "f1"}, {"f2", "f4"}}};
    return pc::PrecubicalSet(std::move(cells), std::move(faces));
}

// ---------------------------------------------------------------------------
// Truncated simplicial sets with explicit degeneracy closure, in the
// canonical base-times-surjection normal form. Input is a Delta-complex:
// nondegenerate simplices whose faces are arbitrary (possibly degenerate)
// elements of lower dimension.
struct SSetElem {
    std::string base;
    std::vector<int> eta; // monotone surjection [n] ->> [dim base]

    std::string id() const {
        std::string s = base + "(";
        for (std::size_t i = 0; i < eta.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(eta[i]);
        }
        return s + ")";
    }
    bool operator<(const SSetElem& o) const {
        return base != o.base ? base < o.base : eta < o.eta;
    }
    bool operator==(const SSetElem&) const = default;
};

struct SimplicialSet {
    std::size_t depth = 0;
    std::vector<std::vector<SSetElem>> elems; // per level, deterministic order
    std::map<std::string, std::size_t> base_dim;
    std::map<std::string, std::vector<SSetElem>> base_faces; // canonical faces of nondeg cells

    SSetElem degeneracy(const SSetElem& e, std::size_t i) const {
        SSetElem out = e;
        out.eta.insert(out.eta.begin() + static_cast<std::ptrdiff_t>(i) + 1, e.eta[i]);
        return out;
    }

    SSetElem face(const SSetElem& e, std::size_t i) const {
        std::vector<int> nu = e.eta;
        nu.erase(nu.begin() + static_cast<std::ptrdiff_t>(i));
        const std::size_t k = base_dim.at(e.base);
        std::vector<bool> hit(k + 1, false);
        for (int x : nu) hit[static_cast<std::size_t>(x)] = true;
        std::size_t missing = k + 1;
        for (std::size_t j = 0; j <= k; ++j)
            if (!hit[j]) missing = j;
        if (missing == k + 1) return {e.base, nu}; // still surjective
        // One value dropped: compose with the canonical face of the base.
        const SSetElem& b = base_faces.at(e.base)[missing];
        std::vector<int> rho(nu.size());
        for (std::size_t t = 0; t < nu.size(); ++t) {
            int v = nu[t];
            rho[t] = b.eta[static_cast<std::size_t>(v > static_cast<int>(missing) ? v - 1 : v)];
        }
        return {b.base, rho};
    }
};

struct DeltaCell {
    std::string id;
    std::size_t dim;
    std::vector<SSetElem> faces; // dim+1 canonical faces (empty for vertices)
};

inline SSetElem vertex_elem(const std::string& v) { return {v, {0}}; }
inline SSetElem nondeg_elem(const DeltaCell& c) {
    SSetElem e{c.id, {}};
    for (std::size_t i = 0; i <= c.dim; ++i) e.eta.push_back(static_cast<int>(i));
    return e;
}

inline SimplicialSet build_sset(const std::vector<DeltaCell>& cells, std::size_t depth) {
    SimplicialSet s;
    s.depth = depth;
    s.elems.resize(depth + 1);
    for (const auto& c : cells) {
        s.base_dim[c.id] = c.dim;
        s.base_faces[c.id] = c.faces;
        if (c.dim <= depth) s.elems[c.dim].push_back(nondeg_elem(c));
    }
    for (std::size_t n = 1; n <= depth; ++n) {
        std::set<SSetElem> level(s.elems[n].begin(), s.elems[n].end());
        for (const auto& e : s.elems[n - 1])
            for (std::size_t i = 0; i < e.eta.size(); ++i) level.insert(s.degeneracy(e, i));
        s.elems[n].assign(level.begin(), level.end());
    }
    for (std::size_t n = 0; n <= depth; ++n)
        std::sort(s.elems[n].begin(), s.elems[n].end());
    return s;
}

// The six stock complexes used in the Moore/unnormalized comparisons.
inline SimplicialSet sset_point(std::size_t depth) {
    return build_sset({{"v", 0, {}}}, depth);
}
inline SimplicialSet sset_interval(std::size_t depth) {
    return build_sset({{"v", 0, {}},
                       {"w", 0, {}},
                       {"e", 1, {vertex_elem("w"), vertex_elem("v")}}},
                      depth);
}
inline SimplicialSet sset_circle(std::size_t depth) {
    return build_sset({{"v", 0, {}}, {"e", 1, {vertex_elem("v"), vertex_elem("v")}}}, depth);
}
inline SimplicialSet sset_wedge_two_circles(std::size_t depth) {
    return build_sset({{"v", 0, {}},
                       {"e1", 1, {vertex_elem("v"), vertex_elem("v")}},
                       {"e2", 1, {vertex_elem("v"), vertex_elem("v")}}},
                      depth);
}
inline SimplicialSet sset_sphere(std::size_t depth) {
    SSetElem collapsed{"v", {0, 0}}; // s0 of the unique vertex
    return build_sset({{"v", 0, {}}, {"s", 2, {collapsed, collapsed, collapsed}}}, depth);
}
inline SimplicialSet sset_projective_plane(std::size_t depth) {
    auto a = SSetElem{"a", {0, 1}};
    auto b = SSetElem{"b", {0, 1}};
    auto c = SSetElem{"c", {0, 1}};
    return build_sset({{"v", 0, {}},
                       {"w", 0, {}},
                       {"a", 1, {vertex_elem("w"), vertex_elem("v")}},
                       {"b", 1, {vertex_elem("w"), vertex_elem("v")}},
                       {"c", 1, {vertex_elem("v"), vertex_elem("v")}},
                       {"U", 2, {a, b, c}},
                       {"L", 2, {b, a, c}}},
                      depth);
}
inline SimplicialSet sset_klein_bottle(std::size_t depth) {
    // One vertex, loops a, b, c; boundaries a+b-c and a-b+c.
    auto a = SSetElem{"a", {0, 1}};
    auto b = SSetElem{"b", {0, 1}};
    auto c = SSetElem{"c", {0, 1}};
    auto loop = [](const char* id) {
        return DeltaCell{id, 1, {vertex_elem("v"), vertex_elem("v")}};
    };
    return build_sset({{"v", 0, {}}, loop("a"), loop("b"), loop("c"),
                       {"U", 2, {a, c, b}},
                       {"L", 2, {a, b, c}}},
                      depth);
}

// ---------------------------------------------------------------------------
// Free simplicial module on a simplicial set: one graded algebra per level
// with zero multiplication, all words in the single grade (*,*).
inline diho::simplicial::TruncatedSimplicialAlgebra free_simplicial_module(
    const SimplicialSet& s) {
    namespace ea = diho::exactalg;
    diho::simplicial::TruncatedSimplicialAlgebra out;
    ea::MulRule zero = [](const ea::BasisWord&, const ea::BasisWord&) {
        return ea::AlgebraElement{};
    };
    const ea::Grade g{"*", "*"};
    for (std::size_t n = 0; n <= s.depth; ++n) {
        std::map<ea::Grade, std::vector<ea::BasisWord>> basis;
        for (const auto& e : s.elems[n]) basis[g].push_back({e.id(), "*", "*"});
        out.levels.push_back(std::make_shared<ea::GradedAlgebra>(
            std::vector<std::string>{"*"}, std::move(basis), zero, ea::VerifyLevel::none));
    }
    out.faces.resize(s.depth + 1);
    out.degeneracies.resize(s.depth + 1);
    for (std::size_t n = 1; n <= s.depth; ++n)
        for (std::size_t i = 0; i <= n; ++i) {
            std::map<ea::WordId, ea::AlgebraElement> images;
            for (const auto& e : s.elems[n])
                images.emplace(e.id(), ea::AlgebraElement::word(s.face(e, i).id()));
            out.faces[n].emplace_back(out.levels[n], out.levels[n - 1], std::move(images));
        }
    for (std::size_t n = 0; n < s.depth; ++n)
        for (std::size_t i = 0; i <= n; ++i) {
            std::map<ea::WordId, ea::AlgebraElement> images;
            for (const auto& e : s.elems[n])
                images.emplace(e.id(), ea::AlgebraElement::word(s.degeneracy(e, i).id()));
            out.degeneracies[n].emplace_back(out.levels[n], out.levels[n + 1],
                                             std::move(images));
        }
    return out;
}

// Unnormalized chain homology of the simplicial set (alternating-sum
// boundary), assembled directly from the element tables.
inline std::vector<diho::simplicial::ModuleSummary> unnormalized_homology(
    const SimplicialSet& s) {
    namespace ea = diho::exactalg;
    std::vector<std::map<std::string, std::size_t>> index(s.depth + 1);
    for (std::size_t n = 0; n <= s.depth; ++n)
        for (std::size_t i = 0; i < s.elems[n].size(); ++i)
            index[n].emplace(s.elems[n][i].id(), i);
    // boundary[n]: rows = level n-1 coords, cols = level n coords
    std::vector<ea::ZMat> boundary(s.depth + 1);
    for (std::size_t n = 1; n <= s.depth; ++n) {
        boundary[n].assign(s.elems[n - 1].size(), ea::ZVec(s.elems[n].size(), Integer(0)));
        for (std::size_t c = 0; c < s.elems[n].size(); ++c)
            for (std::size_t i = 0; i <= n; ++i) {
                std::size_t r = index[n - 1].at(s.face(s.elems[n][c], i).id());
                boundary[n][r][c] += (i % 2 == 0) ? 1 : -1;
            }
    }
    std::vector<diho::simplicial::ModuleSummary> out(s.depth + 1);
    for (std::size_t n = 0; n <= s.depth; ++n) {
        const std::size_t dim = s.elems[n].size();
        ea::ZMat cycles;
        if (n == 0) {
            cycles.assign(dim, ea::ZVec(dim, Integer(0)));
            for (std::size_t i = 0; i < dim; ++i) cycles[i][i] = 1;
        } else {
            cycles = ea::integer_kernel_basis(boundary[n], dim);
        }
        diho::simplicial::ModuleSummary& h = out[n];
        if (n == s.depth) {
            h.rank = cycles.size();
            continue;
        }
        ea::ZMat bd_rows; // boundaries from level n+1, as vectors in level n
        for (std::size_t c = 0; c < s.elems[n + 1].size(); ++c) {
            ea::ZVec v(dim, Integer(0));
            bool nonzero = false;
            for (std::size_t r = 0; r < dim; ++r) {
                v[r] = boundary[n + 1][r][c];
                nonzero |= v[r] != 0;
            }
            if (nonzero) bd_rows.push_back(std::move(v));
        }
        if (bd_rows.empty()) {
            h.rank = cycles.size();
            continue;
        }
        ea::ZMat in_coords;
        for (const auto& b : bd_rows)
            in_coords.push_back(ea::coords_in_lattice_basis(cycles, b));
        auto snf = ea::smith_normal_form(in_coords);
        h.rank = cycles.size() - snf.rank;
        h.torsion = snf.invariant_factors;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Random finite categories (preorders) and functors between them.
struct RandomPreorder {
    diho::exactalg::CategoryPresentation cat;
    std::vector<std::vector<bool>> leq; // reflexive-transitive relation
};

inline RandomPreorder random_preorder(std::mt19937_64& rng, std::size_t max_objects,
                                      const std::string& tag) {
    std::uniform_int_distribution<std::size_t> nobj(1, max_objects);
    const std::size_t n = nobj(rng);
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    std::bernoulli_distribution coin(0.4);
    for (std::size_t i = 0; i < n; ++i) {
        leq[i][i] = true;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && coin(rng)) leq[i][j] = true;
    }
    for (std::size_t k = 0; k < n; ++k) // transitive closure
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (leq[i][k] && leq[k][j]) leq[i][j] = true;
    RandomPreorder out;
    out.leq = leq;
    auto obj = [&](std::size_t i) { return tag + std::to_string(i); };
    auto mor = [&](std::size_t i, std::size_t j) {
        return tag + std::to_string(i) + ">" + std::to_string(j);
    };
    for (std::size_t i = 0; i < n; ++i) {
        out.cat.objects.push_back(obj(i));
        out.cat.identities.emplace(obj(i), mor(i, i));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (leq[i][j]) out.cat.morphisms.push_back({mor(i, j), obj(i), obj(j)});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (leq[i][j] && leq[j][k])
                    out.cat.composition.emplace(std::make_pair(mor(i, j), mor(j, k)), mor(i, k));
    out.cat.validate();
    return out;
}

// An injective-on-objects functor out of `p`: embed into a copy with the same
// objects (shuffled names) plus extra relations, so images stay composable.
struct RandomFunctor {
    diho::exactalg::CategoryPresentation dom, cod;
    diho::exactalg::FunctorPresentation f;
};

inline RandomFunctor random_injective_functor(std::mt19937_64& rng, std::size_t max_objects) {
    RandomPreorder p = random_preorder(rng, max_objects, "p");
    const std::size_t n = p.cat.objects.size();
    // Extend the relation randomly but keep transitivity, then relabel.
    auto leq = p.leq;
    std::bernoulli_distribution coin(0.3);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && coin(rng)) leq[i][j] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (leq[i][k] && leq[k][j]) leq[i][j] = true;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);

    RandomFunctor out;
    out.dom = p.cat;
    auto obj = [&](std::size_t i) { return "q" + std::to_string(i); };
    auto mor = [&](std::size_t i, std::size_t j) {
        return "q" + std::to_string(i) + ">" + std::to_string(j);
    };
    for (std::size_t i = 0; i < n; ++i) {
        out.cod.objects.push_back(obj(i));
        out.cod.identities.emplace(obj(i), mor(i, i));
    }
    std::vector<std::vector<bool>> qleq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (leq[i][j]) qleq[perm[i]][perm[j]] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (qleq[i][j]) out.cod.morphisms.push_back({mor(i, j), obj(i), obj(j)});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (qleq[i][j] && qleq[j][k])
                    out.cod.composition.emplace(std::make_pair(mor(i, j), mor(j, k)), mor(i, k));
    out.cod.validate();
    for (std::size_t i = 0; i < n; ++i)
        out.f.object_map.emplace("p" + std::to_string(i), obj(perm[i]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (p.leq[i][j])
                out.f.morphism_map.emplace("p" + std::to_string(i) + ">" + std::to_string(j),
                                           mor(perm[i], perm[j]));
    return out;
}

// Random semi-simplicial sets (for free-module simplicial algebras).
inline SimplicialSet random_delta_complex(std::mt19937_64& rng, std::size_t depth) {
    std::uniform_int_distribution<std::size_t> nv(1, 3), ne(0, 4), nt(0, 2);
    std::vector<DeltaCell> cells;
    const std::size_t vcount = nv(rng);
    for (std::size_t i = 0; i < vcount; ++i) cells.push_back({"v" + std::to_string(i), 0, {}});
    std::uniform_int_distribution<std::size_t> pickv(0, vcount - 1);
    struct E {
        std::size_t from, to;
        std::string id;
    };
    std::vector<E> edges;
    const std::size_t ecount = ne(rng);
    for (std::size_t i = 0; i < ecount; ++i) {
        E e{pickv(rng), pickv(rng), "e" + std::to_string(i)};
        // faces: d0 = target vertex, d1 = source vertex
        cells.push_back({e.id, 1,
                         {vertex_elem("v" + std::to_string(e.to)),
                          vertex_elem("v" + std::to_string(e.from))}});
        edges.push_back(e);
    }
    auto edges_between = [&](std::size_t a, std::size_t b) {
        std::vector<std::string> out;
        for (const auto& e : edges)
            if (e.from == a && e.to == b) out.push_back(e.id);
        return out;
    };
    const std::size_t tcount = edges.empty() ? 0 : nt(rng);
    for (std::size_t t = 0; t < tcount; ++t) {
        std::size_t v0 = pickv(rng), v1 = pickv(rng), v2 = pickv(rng);
        auto e2s = edges_between(v0, v1), e1s = edges_between(v0, v2),
             e0s = edges_between(v1, v2);
        if (e2s.empty() || e1s.empty() || e0s.empty()) continue;
        auto pick = [&](const std::vector<std::string>& pool) {
            std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
            return pool[d(rng)];
        };
        auto edge_elem = [](const std::string& id) { return SSetElem{id, {0, 1}}; };
        cells.push_back({"T" + std::to_string(t), 2,
                         {edge_elem(pick(e0s)), edge_elem(pick(e1s)), edge_elem(pick(e2s))}});
    }
    return build_sset(cells, depth);
}

} // namespace testsupport

#endif
