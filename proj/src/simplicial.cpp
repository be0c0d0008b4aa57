#include "diho/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

namespace diho::simplicial {

using exactalg::BasisWord;
using exactalg::EchelonBasis;
using exactalg::GradedAlgebra;
using exactalg::QMat;
using exactalg::QVec;
using exactalg::ZMat;
using exactalg::ZVec;

namespace {

ZMat integral(const QMat& m, const char* what) {
    ZMat out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].resize(m[i].size());
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (!is_integer(m[i][j]))
                throw ValidationError(std::string(what) + ": non-integral matrix entry");
            out[i][j] = numerator(m[i][j]);
        }
    }
    return out;
}

ZMat transpose(const ZMat& m, std::size_t cols) {
    ZMat out(cols, ZVec(m.size(), Integer(0)));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out[j][i] = m[i][j];
    return out;
}

// w = M v for a (rows x cols) matrix stored row-major.
ZVec mat_vec(const ZMat& m, const ZVec& v) {
    ZVec out(m.size(), Integer(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0 && v[j] != 0) out[i] += m[i][j] * v[j];
    return out;
}

bool is_zero(const ZVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::string word_list(const AlgebraElement& e) { return e.to_string(); }

} // namespace

std::vector<std::string> check_simplicial(const TruncatedSimplicialAlgebra& s) {
    std::vector<std::string> out;
    const std::size_t depth = s.depth();
    if (s.levels.empty()) return {"no levels"};
    if (s.faces.size() != s.levels.size()) {
        out.push_back("faces table has wrong height");
        return out;
    }
    for (std::size_t n = 1; n <= depth; ++n)
        if (s.faces[n].size() != n + 1) {
            out.push_back("level " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                          " faces, has " + std::to_string(s.faces[n].size()));
            return out;
        }
    if (!s.faces.empty() && !s.faces[0].empty()) out.push_back("level 0 must have no faces");

    auto check_map = [&](const Morphism& m, const AlgebraPtr& dom, const AlgebraPtr& cod,
                         const std::string& name) {
        if (m.domain() != dom || m.codomain() != cod)
            out.push_back(name + " has wrong endpoints");
        else if (!m.is_algebra_map()) {
            std::string w;
            if (auto p = m.algebra_map_witness()) w = " at (" + p->first + ", " + p->second + ")";
            out.push_back(name + " is not an algebra map" + w);
        }
    };
    for (std::size_t n = 1; n <= depth; ++n)
        for (std::size_t i = 0; i <= n; ++i)
            check_map(s.faces[n][i], s.levels[n], s.levels[n - 1],
                      "d_" + std::to_string(i) + " on level " + std::to_string(n));

    // d_i d_j = d_{j-1} d_i for i < j; one witness per identity is enough.
    for (std::size_t n = 2; n <= depth; ++n)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 0; i < j; ++i)
                for (const auto& w : s.levels[n]->all_words()) {
                    AlgebraElement lhs = s.faces[n - 1][i].apply(s.faces[n][j].image(w.id));
                    AlgebraElement rhs = s.faces[n - 1][j - 1].apply(s.faces[n][i].image(w.id));
                    if (!(lhs == rhs)) {
                        out.push_back("d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                      " != d_" + std::to_string(j - 1) + " d_" +
                                      std::to_string(i) + " on level " + std::to_string(n) +
                                      " at " + w.id);
                        break;
                    }
                }

    if (!s.has_degeneracies()) return out;
    if (s.degeneracies.size() != s.levels.size()) {
        out.push_back("degeneracy table has wrong height");
        return out;
    }
    for (std::size_t n = 0; n < depth; ++n)
        if (s.degeneracies[n].size() != n + 1) {
            out.push_back("level " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                          " degeneracies, has " + std::to_string(s.degeneracies[n].size()));
            return out;
        }
    if (!s.degeneracies[depth].empty())
        out.push_back("top level degeneracies leave the truncation");

    for (std::size_t n = 0; n < depth; ++n)
        for (std::size_t i = 0; i <= n; ++i)
            check_map(s.degeneracies[n][i], s.levels[n], s.levels[n + 1],
                      "s_" + std::to_string(i) + " on level " + std::to_string(n));

    for (std::size_t n = 0; n < depth; ++n) {
        // s_i s_j = s_{j+1} s_i for i <= j (lands two levels up).
        if (n + 2 <= depth)
            for (std::size_t j = 0; j <= n; ++j)
                for (std::size_t i = 0; i <= j; ++i)
                    for (const auto& w : s.levels[n]->all_words()) {
                        AlgebraElement lhs =
                            s.degeneracies[n + 1][i].apply(s.degeneracies[n][j].image(w.id));
                        AlgebraElement rhs =
                            s.degeneracies[n + 1][j + 1].apply(s.degeneracies[n][i].image(w.id));
                        if (!(lhs == rhs)) {
                            out.push_back("s_" + std::to_string(i) + " s_" + std::to_string(j) +
                                          " != s_" + std::to_string(j + 1) + " s_" +
                                          std::to_string(i) + " on level " + std::to_string(n) +
                                          " at " + w.id);
                            break;
                        }
                    }
        // d_i s_j rules on level n.
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = 0; i <= n + 1; ++i)
                for (const auto& w : s.levels[n]->all_words()) {
                    AlgebraElement lhs = s.faces[n + 1][i].apply(s.degeneracies[n][j].image(w.id));
                    AlgebraElement rhs;
                    std::string rhs_name;
                    if (i == j || i == j + 1) {
                        rhs = AlgebraElement::word(w.id);
                        rhs_name = "id";
                    } else if (i < j) {
                        rhs = s.degeneracies[n - 1][j - 1].apply(s.faces[n][i].image(w.id));
                        rhs_name = "s_" + std::to_string(j - 1) + " d_" + std::to_string(i);
                    } else {
                        rhs = s.degeneracies[n - 1][j].apply(s.faces[n][i - 1].image(w.id));
                        rhs_name = "s_" + std::to_string(j) + " d_" + std::to_string(i - 1);
                    }
                    if (!(lhs == rhs)) {
                        out.push_back("d_" + std::to_string(i) + " s_" + std::to_string(j) +
                                      " != " + rhs_name + " on level " + std::to_string(n) +
                                      " at " + w.id);
                        break;
                    }
                }
    }
    return out;
}

std::size_t MooreComplex::dim(std::size_t n, const Grade& g) const {
    if (n >= kernel_basis.size()) return 0;
    auto it = kernel_basis[n].find(g);
    return it == kernel_basis[n].end() ? 0 : it->second.size();
}

MooreComplex moore_normalize(const TruncatedSimplicialAlgebra& s) {
    {
        auto violations = check_simplicial(s);
        if (!violations.empty()) {
            std::ostringstream msg;
            msg << "moore_normalize: input is not simplicial:";
            for (const auto& v : violations) msg << "\n  " << v;
            throw ValidationError(msg.str());
        }
    }
    const std::size_t depth = s.depth();
    for (std::size_t n = 1; n <= depth; ++n)
        for (const auto& d : s.faces[n])
            if (!d.is_grade_preserving())
                throw ValidationError("moore_normalize: face maps must preserve the bigrading");

    MooreComplex m;
    m.base = s;
    m.kernel_basis.resize(depth + 1);
    m.diff.resize(depth + 1);

    for (const Grade& g : s.levels[0]->grades()) {
        std::size_t d0 = s.levels[0]->dim(g);
        ZMat id(d0, ZVec(d0, Integer(0)));
        for (std::size_t i = 0; i < d0; ++i) id[i][i] = 1;
        m.kernel_basis[0].emplace(g, std::move(id));
    }
    for (std::size_t n = 1; n <= depth; ++n) {
        for (const Grade& g : s.levels[n]->grades()) {
            const std::size_t dn = s.levels[n]->dim(g);
            ZMat stacked;
            for (std::size_t i = 0; i < n; ++i) {
                ZMat block = integral(s.faces[n][i].grade_matrix(g), "moore_normalize");
                for (auto& row : block) stacked.push_back(std::move(row));
            }
            ZMat ker = exactalg::integer_kernel_basis(stacked, dn);
            if (!ker.empty()) m.kernel_basis[n].emplace(g, std::move(ker));
        }
    }
    // Differentials in joint-kernel coordinates, with the sign (-1)^n.
    for (std::size_t n = 1; n <= depth; ++n) {
        for (const auto& [g, basis] : m.kernel_basis[n]) {
            ZMat dmat = integral(s.faces[n][n].grade_matrix(g), "moore_normalize");
            auto prev = m.kernel_basis[n - 1].find(g);
            ZMat rows;
            for (const auto& v : basis) {
                ZVec w = mat_vec(dmat, v);
                if (n % 2 == 1)
                    for (auto& x : w) x = -x;
                if (is_zero(w)) {
                    rows.emplace_back(prev == m.kernel_basis[n - 1].end() ? 0 : prev->second.size(),
                                      Integer(0));
                    continue;
                }
                if (prev == m.kernel_basis[n - 1].end())
                    throw ValidationError(
                        "moore_normalize: differential leaves the joint kernel at grade " +
                        exactalg::to_string(g));
                rows.push_back(exactalg::coords_in_lattice_basis(prev->second, w));
            }
            m.diff[n].emplace(g, std::move(rows));
        }
    }
    // d(d(x)) = 0.
    for (std::size_t n = 2; n <= depth; ++n)
        for (const auto& [g, rows] : m.diff[n]) {
            auto lower = m.diff[n - 1].find(g);
            for (const auto& r : rows) {
                if (is_zero(r)) continue;
                if (lower == m.diff[n - 1].end())
                    throw ValidationError("moore_normalize: d(d(x)) != 0 at grade " +
                                          exactalg::to_string(g));
                ZVec acc(lower->second.empty() ? 0 : lower->second[0].size(), Integer(0));
                for (std::size_t k = 0; k < r.size(); ++k)
                    for (std::size_t j = 0; j < acc.size(); ++j)
                        acc[j] += r[k] * lower->second[k][j];
                if (!is_zero(acc))
                    throw ValidationError("moore_normalize: d(d(x)) != 0 at grade " +
                                          exactalg::to_string(g));
            }
        }
    return m;
}

namespace {

// Boundary lattice at level n (rows in level-n coordinates).
std::map<Grade, ZMat> boundary_lattice(const MooreComplex& m, std::size_t n) {
    std::map<Grade, ZMat> out;
    if (n + 1 > m.depth()) return out;
    for (const auto& [g, rows] : m.diff[n + 1]) {
        auto base = m.kernel_basis[n].find(g);
        if (base == m.kernel_basis[n].end()) continue;
        ZMat lat;
        for (const auto& r : rows) {
            ZVec v(base->second.empty() ? 0 : base->second[0].size(), Integer(0));
            for (std::size_t k = 0; k < r.size(); ++k)
                for (std::size_t j = 0; j < v.size(); ++j) v[j] += r[k] * base->second[k][j];
            if (!is_zero(v)) lat.push_back(std::move(v));
        }
        if (!lat.empty()) out.emplace(g, std::move(lat));
    }
    return out;
}

// Cycle lattice at level n in level-n coordinates.
std::map<Grade, ZMat> cycle_lattice(const MooreComplex& m, std::size_t n) {
    std::map<Grade, ZMat> out;
    for (const auto& [g, basis] : m.kernel_basis[n]) {
        ZMat incoords; // cycle coords within the N_n basis
        if (n == 0 || m.diff[n].find(g) == m.diff[n].end()) {
            incoords.assign(basis.size(), ZVec(basis.size(), Integer(0)));
            for (std::size_t i = 0; i < basis.size(); ++i) incoords[i][i] = 1;
        } else {
            const ZMat& rows = m.diff[n].at(g);
            std::size_t cod = rows.empty() ? 0 : rows[0].size();
            incoords = exactalg::integer_kernel_basis(transpose(rows, cod), basis.size());
        }
        ZMat level;
        for (const auto& c : incoords) {
            ZVec v(basis.empty() ? 0 : basis[0].size(), Integer(0));
            for (std::size_t k = 0; k < c.size(); ++k)
                for (std::size_t j = 0; j < v.size(); ++j) v[j] += c[k] * basis[k][j];
            level.push_back(std::move(v));
        }
        if (!level.empty()) out.emplace(g, std::move(level));
    }
    return out;
}

} // namespace

bool verify_properness(const MooreComplex& m, std::size_t n) {
    auto bounds = boundary_lattice(m, n);
    if (bounds.empty()) return true;
    const auto& alg = *m.base.levels[n];
    // Q-span of the boundaries, for membership.
    std::map<Grade, EchelonBasis> span;
    for (const auto& [g, rows] : bounds) {
        EchelonBasis e(alg.dim(g));
        for (const auto& r : rows) {
            QVec q(r.size());
            for (std::size_t i = 0; i < r.size(); ++i) q[i] = Rational(r[i]);
            e.insert(std::move(q));
        }
        span.emplace(g, std::move(e));
    }
    auto contains = [&](const AlgebraElement& x) {
        for (const auto& [g, part] : alg.homogeneous_parts(x)) {
            auto it = span.find(g);
            if (it == span.end()) return false;
            if (!it->second.contains(alg.to_vector(part, g))) return false;
        }
        return true;
    };
    for (const auto& [gb, rows] : bounds)
        for (const auto& b : rows) {
            QVec qb(b.size());
            for (std::size_t i = 0; i < b.size(); ++i) qb[i] = Rational(b[i]);
            AlgebraElement be = alg.from_vector(gb, qb);
            for (const auto& [gz, zbasis] : m.kernel_basis[n])
                for (const auto& z : zbasis) {
                    QVec qz(z.size());
                    for (std::size_t i = 0; i < z.size(); ++i) qz[i] = Rational(z[i]);
                    AlgebraElement ze = alg.from_vector(gz, qz);
                    try {
                        if (!contains(alg.multiply(ze, be)) || !contains(alg.multiply(be, ze)))
                            return false;
                    } catch (const TruncationError&) {
                        continue;
                    }
                }
        }
    return true;
}

std::map<Grade, ModuleSummary> homology(const MooreComplex& m, std::size_t n) {
    if (n > m.depth()) throw ValidationError("homology: level beyond the truncation");
    std::map<Grade, ModuleSummary> out;
    if (n == 0) {
        const auto& level0 = m.base.levels[0];
        std::vector<AlgebraElement> gens;
        if (m.depth() >= 1) {
            const Morphism& d0 = m.base.faces[1][0];
            const Morphism& d1 = m.base.faces[1][1];
            for (const auto& w : m.base.levels[1]->all_words()) {
                AlgebraElement d = d0.image(w.id) - d1.image(w.id);
                for (auto& [g, part] : level0->homogeneous_parts(d)) gens.push_back(part);
            }
        }
        exactalg::IdealBasis ideal = exactalg::two_sided_ideal(level0, gens);
        for (const Grade& g : level0->grades()) {
            ModuleSummary s;
            s.rank = level0->dim(g) - ideal.rank(g);
            auto raw = ideal.raw_rows.find(g);
            if (raw != ideal.raw_rows.end())
                s.torsion = exactalg::smith_normal_form(raw->second).invariant_factors;
            out.emplace(g, std::move(s));
        }
        return out;
    }
    auto cycles = cycle_lattice(m, n);
    auto bounds = boundary_lattice(m, n);
    for (const auto& [g, basis] : m.kernel_basis[n]) {
        ModuleSummary s;
        auto zc = cycles.find(g);
        std::size_t zrank = zc == cycles.end() ? 0 : zc->second.size();
        auto bd = bounds.find(g);
        if (bd == bounds.end()) {
            s.rank = zrank;
        } else {
            if (zc == cycles.end())
                throw ValidationError("homology: boundaries without cycles at grade " +
                                      exactalg::to_string(g));
            ZMat in_cycle_coords;
            for (const auto& b : bd->second)
                in_cycle_coords.push_back(exactalg::coords_in_lattice_basis(zc->second, b));
            auto snf = exactalg::smith_normal_form(in_cycle_coords);
            s.rank = zrank - snf.rank;
            s.torsion = std::move(snf.invariant_factors);
        }
        out.emplace(g, std::move(s));
    }
    return out;
}

EckmannHiltonResult eckmann_hilton_check(const MooreComplex& m, std::size_t n) {
    if (n < 1 || n > m.depth())
        throw ValidationError("eckmann_hilton_check: level must satisfy 1 <= n <= depth");
    EckmannHiltonResult res;
    const auto& alg = *m.base.levels[n];
    auto cycles = cycle_lattice(m, n);
    auto bounds = boundary_lattice(m, n);
    std::vector<std::pair<Grade, AlgebraElement>> cycle_elems;
    for (const auto& [g, rows] : cycles)
        for (const auto& r : rows) {
            QVec q(r.size());
            for (std::size_t i = 0; i < r.size(); ++i) q[i] = Rational(r[i]);
            cycle_elems.emplace_back(g, alg.from_vector(g, q));
        }
    for (const auto& [gx, x] : cycle_elems)
        for (const auto& [gy, y] : cycle_elems) {
            AlgebraElement p;
            try {
                p = alg.multiply(x, y);
            } catch (const TruncationError&) {
                continue;
            }
            ++res.pairs_checked;
            if (p.is_zero()) continue;
            for (const auto& [gp, part] : alg.homogeneous_parts(p)) {
                QVec q = alg.to_vector(part, gp);
                ZVec v(q.size());
                for (std::size_t i = 0; i < q.size(); ++i) {
                    if (!is_integer(q[i]))
                        throw ValidationError("eckmann_hilton_check: non-integral product");
                    v[i] = numerator(q[i]);
                }
                auto bd = bounds.find(gp);
                if (bd == bounds.end() || !exactalg::lattice_contains(bd->second, v)) {
                    res.zero_multiplication = false;
                    res.witness = "cycle product " + word_list(x) + " * " + word_list(y) +
                                  " is not a boundary at grade " + exactalg::to_string(gp);
                    return res;
                }
            }
        }
    return res;
}

namespace {

// Image of a tensor word under the factorwise map pair, expanded
// multilinearly in the target coproduct.
AlgebraElement map_tensor(const WordId& id, const GradedAlgebra& factor_a, const Morphism& fa,
                          const Morphism& fb) {
    std::vector<std::pair<Rational, WordId>> acc{{Rational(1), WordId{}}};
    for (const auto& seg : exactalg::tensor_segments(id)) {
        const Morphism& f = factor_a.has_word(seg) ? fa : fb;
        const AlgebraElement& img = f.image(seg);
        if (img.is_zero()) return {};
        std::vector<std::pair<Rational, WordId>> next;
        for (const auto& [c, frag] : acc)
            for (const auto& [wid, c2] : img.terms())
                next.emplace_back(c * c2, frag.empty() ? wid : frag + "|" + wid);
        acc = std::move(next);
    }
    AlgebraElement out;
    for (auto& [c, wid] : acc) out.add_term(wid, c);
    return out;
}

} // namespace

SimplicialCoproduct simplicial_coproduct(const TruncatedSimplicialAlgebra& s1,
                                         const TruncatedSimplicialAlgebra& s2,
                                         std::size_t word_cap) {
    if (s1.depth() != s2.depth())
        throw ValidationError("simplicial_coproduct: factors must share the truncation depth");
    if (s1.has_degeneracies() != s2.has_degeneracies())
        throw ValidationError("simplicial_coproduct: mixed degeneracy structure");
    const std::size_t depth = s1.depth();
    SimplicialCoproduct out;
    for (std::size_t n = 0; n <= depth; ++n)
        out.level_data.push_back(exactalg::coproduct(s1.levels[n], s2.levels[n], word_cap));
    out.complex.levels.resize(depth + 1);
    for (std::size_t n = 0; n <= depth; ++n) out.complex.levels[n] = out.level_data[n].algebra;
    out.complex.faces.resize(depth + 1);
    for (std::size_t n = 1; n <= depth; ++n)
        for (std::size_t i = 0; i <= n; ++i) {
            std::map<WordId, AlgebraElement> images;
            for (const auto& w : out.complex.levels[n]->all_words()) {
                AlgebraElement img =
                    map_tensor(w.id, *s1.levels[n], s1.faces[n][i], s2.faces[n][i]);
                if (!img.is_zero()) images.emplace(w.id, std::move(img));
            }
            out.complex.faces[n].emplace_back(out.complex.levels[n], out.complex.levels[n - 1],
                                              std::move(images));
        }
    if (s1.has_degeneracies()) {
        out.complex.degeneracies.resize(depth + 1);
        for (std::size_t n = 0; n < depth; ++n)
            for (std::size_t i = 0; i <= n; ++i) {
                std::map<WordId, AlgebraElement> images;
                for (const auto& w : out.complex.levels[n]->all_words()) {
                    AlgebraElement img = map_tensor(w.id, *s1.levels[n], s1.degeneracies[n][i],
                                                    s2.degeneracies[n][i]);
                    if (!img.is_zero()) images.emplace(w.id, std::move(img));
                }
                out.complex.degeneracies[n].emplace_back(out.complex.levels[n],
                                                         out.complex.levels[n + 1],
                                                         std::move(images));
            }
    }
    auto violations = check_simplicial(out.complex);
    if (!violations.empty())
        throw Error("simplicial_coproduct: result failed verification: " + violations.front());
    return out;
}

TraceComplex trace_complex(const PrecubicalSet& c, std::optional<std::size_t> max_len,
                           std::optional<std::size_t> seq_cap, const std::string& prefix) {
    TraceComplex out{c, {}, tracealg::path_algebra(c, max_len, prefix), {}};
    if (!seq_cap && out.paths.truncated)
        seq_cap = std::max<std::size_t>(out.paths.max_len / 2, 1);
    out.sequences = tracealg::two_path_algebra(c, seq_cap, prefix);
    tracealg::BoundaryPair d = tracealg::boundary_maps(c, out.sequences, out.paths);
    out.simplicial.levels = {out.paths.algebra, out.sequences.algebra};
    out.simplicial.faces.resize(2);
    out.simplicial.faces[1].push_back(std::move(d.delta0));
    out.simplicial.faces[1].push_back(std::move(d.delta1));
    return out;
}

namespace {

void require_subcomplex(const PrecubicalSet& sub, const PrecubicalSet& ambient) {
    for (std::size_t n = 0; n <= sub.max_dim(); ++n)
        for (const auto& id : sub.cells(n)) {
            if (!ambient.has_cell(id) || ambient.dim_of(id) != n)
                throw ValidationError("subcomplex inclusion violated: cell " + id);
            for (int eps = 0; eps <= 1 && n > 0; ++eps)
                for (std::size_t i = 1; i <= n; ++i)
                    if (sub.face(id, eps, i) != ambient.face(id, eps, i))
                        throw ValidationError("subcomplex inclusion violated: faces of " + id);
        }
}

Morphism embed_paths(const tracealg::PathAlgebra& sub, const tracealg::PathAlgebra& ambient) {
    std::map<WordId, AlgebraElement> images;
    for (const auto& [id, p] : *sub.paths)
        images.emplace(id, AlgebraElement::word(ambient.id_of(p)));
    return Morphism(sub.algebra, ambient.algebra, std::move(images));
}

Morphism embed_sequences(const tracealg::TwoPathAlgebra& sub,
                         const tracealg::TwoPathAlgebra& ambient) {
    std::map<WordId, AlgebraElement> images;
    for (const auto& [id, cells] : *sub.sequences)
        images.emplace(id, AlgebraElement::word(ambient.id_of(cells)));
    return Morphism(sub.algebra, ambient.algebra, std::move(images));
}

} // namespace

FoldMap fold_map_h(const TraceComplex& s1, const TraceComplex& s2, const TraceComplex& ambient,
                   std::size_t word_cap) {
    require_subcomplex(s1.complex, ambient.complex);
    require_subcomplex(s2.complex, ambient.complex);
    FoldMap out{simplicial_coproduct(s1.simplicial, s2.simplicial, word_cap), {}};
    Morphism embeds[2][2] = {
        {embed_paths(s1.paths, ambient.paths), embed_paths(s2.paths, ambient.paths)},
        {embed_sequences(s1.sequences, ambient.sequences),
         embed_sequences(s2.sequences, ambient.sequences)}};
    for (std::size_t n = 0; n <= 1; ++n) {
        const auto& cop = out.coproduct.complex.levels[n];
        const auto& target = ambient.simplicial.levels[n];
        std::map<WordId, AlgebraElement> images;
        for (const auto& w : cop->all_words()) {
            AlgebraElement acc;
            bool first = true;
            for (const auto& seg : exactalg::tensor_segments(w.id)) {
                const Morphism& e =
                    s1.simplicial.levels[n]->has_word(seg) ? embeds[n][0] : embeds[n][1];
                AlgebraElement img = e.image(seg);
                acc = first ? img : target->multiply(acc, img);
                first = false;
                if (acc.is_zero()) break;
            }
            if (!acc.is_zero()) images.emplace(w.id, std::move(acc));
        }
        out.h.emplace_back(cop, target, std::move(images));
    }
    for (std::size_t n = 0; n <= 1; ++n)
        if (!out.h[n].is_algebra_map())
            throw Error("fold map failed the algebra-map verification at level " +
                        std::to_string(n));
    return out;
}

std::size_t GradedModule::dim(const Grade& g) const {
    auto it = dims.find(g);
    return it == dims.end() ? 0 : it->second;
}

GradedModule module_of(const AlgebraPtr& a) {
    GradedModule m;
    for (const Grade& g : a->grades()) m.dims[g] = a->dim(g);
    return m;
}

GradedLinearMap linear_map_of(const Morphism& m, const std::string& label) {
    if (!m.is_grade_preserving())
        throw ValidationError("linear_map_of: morphism must preserve grades");
    GradedLinearMap out;
    out.label = label;
    out.domain = module_of(m.domain());
    out.codomain = module_of(m.codomain());
    for (const Grade& g : m.domain()->grades()) out.blocks[g] = m.grade_matrix(g);
    return out;
}

GradedLinearMap zero_into(const GradedModule& target, const std::string& label) {
    return GradedLinearMap{label, {}, target, {}};
}

GradedLinearMap onto_zero(const GradedModule& source, const std::string& label) {
    return GradedLinearMap{label, source, {}, {}};
}

GradedLinearMap inclusion_of(const std::map<Grade, EchelonBasis>& sub,
                             const GradedModule& ambient, const std::string& label) {
    GradedLinearMap out;
    out.label = label;
    out.codomain = ambient;
    for (const auto& [g, basis] : sub) {
        if (basis.rank() == 0) continue;
        out.domain.dims[g] = basis.rank();
        QMat block(ambient.dim(g), QVec(basis.rank(), Rational(0)));
        for (std::size_t k = 0; k < basis.rank(); ++k)
            for (std::size_t j = 0; j < basis.ambient(); ++j) block[j][k] = basis.rows()[k][j];
        out.blocks.emplace(g, std::move(block));
    }
    return out;
}

std::vector<ExactnessPosition> exactness_check(const std::vector<GradedLinearMap>& maps) {
    std::vector<ExactnessPosition> out;
    for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
        const GradedLinearMap& in = maps[k];
        const GradedLinearMap& next = maps[k + 1];
        ExactnessPosition pos;
        pos.at = "between " + in.label + " and " + next.label;
        pos.exact = true;
        if (in.codomain.dims != next.domain.dims) {
            pos.exact = false;
            pos.detail = "middle modules disagree";
            out.push_back(std::move(pos));
            continue;
        }
        for (const auto& [g, dim] : in.codomain.dims) {
            if (dim == 0) continue;
            // Image = column span of the incoming block.
            EchelonBasis image(dim);
            auto bi = in.blocks.find(g);
            if (bi != in.blocks.end() && !bi->second.empty()) {
                const QMat& b = bi->second;
                for (std::size_t c = 0; c < b[0].size(); ++c) {
                    QVec col(dim, Rational(0));
                    for (std::size_t r = 0; r < dim; ++r) col[r] = b[r][c];
                    image.insert(std::move(col));
                }
            }
            // Kernel of the outgoing block.
            QMat outgoing;
            auto bo = next.blocks.find(g);
            if (bo != next.blocks.end()) outgoing = bo->second;
            QMat ker = exactalg::nullspace(outgoing, dim);
            EchelonBasis kernel(dim);
            for (auto& row : ker) kernel.insert(std::move(row));
            bool ok = image.rank() == kernel.rank();
            if (ok)
                for (const auto& row : image.rows())
                    if (!kernel.contains(row)) {
                        ok = false;
                        break;
                    }
            if (!ok) {
                pos.exact = false;
                pos.detail += "grade " + exactalg::to_string(g) + ": im rank " +
                              std::to_string(image.rank()) + ", ker rank " +
                              std::to_string(kernel.rank()) + "; ";
            }
        }
        out.push_back(std::move(pos));
    }
    return out;
}

bool LesReport::all_ok() const {
    if (!block_sum_ok || !fold_surjective_level0 || !fold_surjective_level1) return false;
    for (const auto& p : degree1)
        if (!p.exact) return false;
    return true;
}

std::string LesReport::to_json() const {
    nlohmann::json doc;
    doc["ha1_left"] = nlohmann::json::parse(left.to_json());
    doc["ha1_right"] = nlohmann::json::parse(right.to_json());
    doc["ha1_union"] = nlohmann::json::parse(combined.to_json());
    doc["block_sum_ok"] = block_sum_ok;
    doc["block_mismatches"] = block_mismatches;
    nlohmann::json seq = nlohmann::json::array();
    for (const auto& p : degree1)
        seq.push_back({{"at", p.at}, {"exact", p.exact}, {"detail", p.detail}});
    doc["degree1_sequence"] = std::move(seq);
    doc["fold_surjective_level0"] = fold_surjective_level0;
    doc["fold_surjective_level1"] = fold_surjective_level1;
    doc["all_ok"] = all_ok();
    return doc.dump(2) + "\n";
}

namespace {
bool fold_surjective(const Morphism& h) {
    auto span = exactalg::image_span(h);
    for (const Grade& g : h.codomain()->grades()) {
        auto it = span.find(g);
        std::size_t r = it == span.end() ? 0 : it->second.rank();
        if (r != h.codomain()->dim(g)) return false;
    }
    return true;
}
} // namespace

LesReport disjoint_union_les_report(const PrecubicalSet& c1, const PrecubicalSet& c2,
                                    dihomology::QuotientMode mode, std::size_t word_cap,
                                    std::optional<std::size_t> max_len) {
    PrecubicalSet u = precubical::disjoint_union(c1, c2);
    precubical::require_valid(u);
    LesReport rep;
    auto h1 = dihomology::ha1(c1, mode, max_len);
    auto h2 = dihomology::ha1(c2, mode, max_len);
    auto hu = dihomology::ha1(u, mode, max_len);
    rep.left = h1.dimension_matrix();
    rep.right = h2.dimension_matrix();
    rep.combined = hu.dimension_matrix();

    rep.block_sum_ok = true;
    std::set<precubical::VertexId> v1(c1.vertices().begin(), c1.vertices().end());
    std::set<precubical::VertexId> v2(c2.vertices().begin(), c2.vertices().end());
    for (const auto& a : u.vertices())
        for (const auto& b : u.vertices()) {
            dihomology::DimensionMatrix::Entry expected;
            if (v1.count(a) && v1.count(b)) expected = rep.left.at(a, b);
            else if (v2.count(a) && v2.count(b)) expected = rep.right.at(a, b);
            const auto& got = rep.combined.at(a, b);
            if (!(got == expected)) {
                rep.block_sum_ok = false;
                rep.block_mismatches.push_back("grade (" + a + "," + b + ")");
            }
        }

    TraceComplex t1 = trace_complex(c1, max_len);
    TraceComplex t2 = trace_complex(c2, max_len);
    TraceComplex tu = trace_complex(u, max_len);
    FoldMap fold = fold_map_h(t1, t2, tu, word_cap);
    rep.fold_surjective_level0 = fold_surjective(fold.h[0]);
    rep.fold_surjective_level1 = fold_surjective(fold.h[1]);

    auto ker = exactalg::kernel(fold.h[0]);
    GradedModule cop_module = module_of(fold.coproduct.complex.levels[0]);
    GradedModule ker_module;
    for (const auto& [g, basis] : ker)
        if (basis.rank() > 0) ker_module.dims[g] = basis.rank();
    std::vector<GradedLinearMap> seq;
    seq.push_back(zero_into(ker_module, "0"));
    seq.push_back(inclusion_of(ker, cop_module, "ker h"));
    seq.push_back(linear_map_of(fold.h[0], "h"));
    seq.push_back(onto_zero(module_of(tu.paths.algebra), "0"));
    rep.degree1 = exactness_check(seq);
    return rep;
}

} // namespace diho::simplicial
