#include "diho/dihomology.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <sstream>

#include <nlohmann/json.hpp>

namespace diho::dihomology {

using exactalg::QVec;

QuotientMode parse_mode(const std::string& name) {
    if (name == "ideal") return QuotientMode::ideal;
    if (name == "image") return QuotientMode::image;
    if (name == "local") return QuotientMode::local;
    throw ValidationError("unknown quotient mode: " + name + " (ideal|image|local)");
}

std::string to_string(QuotientMode mode) {
    switch (mode) {
        case QuotientMode::ideal: return "ideal";
        case QuotientMode::image: return "image";
        case QuotientMode::local: return "local";
    }
    return "?";
}

const DimensionMatrix::Entry& DimensionMatrix::at(const VertexId& a, const VertexId& b) const {
    auto ia = std::find(order.begin(), order.end(), a);
    auto ib = std::find(order.begin(), order.end(), b);
    if (ia == order.end() || ib == order.end())
        throw ValidationError("vertex not in matrix order");
    return entries[static_cast<std::size_t>(ia - order.begin())]
                  [static_cast<std::size_t>(ib - order.begin())];
}

std::vector<std::vector<std::size_t>> DimensionMatrix::ranks() const {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& row : entries) {
        std::vector<std::size_t> r;
        for (const auto& e : row) r.push_back(e.rank);
        out.push_back(std::move(r));
    }
    return out;
}

std::string DimensionMatrix::to_json() const {
    nlohmann::json doc;
    doc["order"] = order;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : entries) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& e : row) {
            nlohmann::json cell;
            cell["rank"] = e.rank;
            nlohmann::json tors = nlohmann::json::array();
            for (const auto& d : e.torsion) tors.push_back(d.str());
            cell["torsion"] = std::move(tors);
            r.push_back(std::move(cell));
        }
        rows.push_back(std::move(r));
    }
    doc["entries"] = std::move(rows);
    return doc.dump(2) + "\n";
}

namespace {
std::string entry_text(const DimensionMatrix::Entry& e) {
    std::string s;
    if (e.rank == 0 && e.torsion.empty()) return "0";
    if (e.rank == 1) s = "R";
    else if (e.rank > 1) s = "R^" + std::to_string(e.rank);
    for (const auto& d : e.torsion) {
        if (!s.empty()) s += "+";
        s += "Z/" + d.str();
    }
    return s;
}
} // namespace

std::string DimensionMatrix::pretty() const {
    const std::size_t n = order.size();
    std::vector<std::vector<std::string>> text(n + 1, std::vector<std::string>(n + 1));
    for (std::size_t j = 0; j < n; ++j) text[0][j + 1] = order[j];
    for (std::size_t i = 0; i < n; ++i) {
        text[i + 1][0] = order[i];
        for (std::size_t j = 0; j < n; ++j) text[i + 1][j + 1] = entry_text(entries[i][j]);
    }
    std::vector<std::size_t> width(n + 1, 0);
    for (const auto& row : text)
        for (std::size_t j = 0; j <= n; ++j) width[j] = std::max(width[j], row[j].size());
    std::ostringstream os;
    for (const auto& row : text) {
        for (std::size_t j = 0; j <= n; ++j) {
            if (j) os << "  ";
            os << std::string(width[j] - row[j].size(), ' ') << row[j];
        }
        os << "\n";
    }
    return os.str();
}

HomologyPresentation::HomologyPresentation(tracealg::PathAlgebra base, QuotientMode mode,
                                           std::map<Grade, EchelonBasis> relations,
                                           std::map<Grade, exactalg::ZMat> raw_relations,
                                           unsigned jobs)
    : base_(std::move(base)), mode_(mode) {
    relations_ = std::make_shared<const std::map<Grade, EchelonBasis>>(std::move(relations));
    for (const Grade& g : base_.algebra->grades()) {
        auto words = base_.algebra->basis(g);
        auto it = relations_->find(g);
        std::vector<WordId> reps;
        if (it == relations_->end()) {
            for (const auto& w : words) reps.push_back(w.id);
        } else {
            for (std::size_t j : it->second.non_pivots()) reps.push_back(words[j].id);
        }
        reps_.emplace(g, std::move(reps));
    }
    // Integer SNF of the raw relation lattice, per grade (independent tasks).
    std::vector<std::pair<Grade, const exactalg::ZMat*>> tasks;
    for (const auto& [g, rows] : raw_relations) tasks.emplace_back(g, &rows);
    std::vector<SnfReport> reports(tasks.size());
    auto run = [&](std::size_t k) { reports[k] = exactalg::smith_normal_form(*tasks[k].second); };
    if (jobs <= 1 || tasks.size() <= 1) {
        for (std::size_t k = 0; k < tasks.size(); ++k) run(k);
    } else {
        std::vector<std::future<void>> futs;
        std::atomic<std::size_t> next{0};
        for (unsigned t = 0; t < jobs; ++t)
            futs.push_back(std::async(std::launch::async, [&] {
                for (std::size_t k = next++; k < tasks.size(); k = next++) run(k);
            }));
        for (auto& f : futs) f.get();
    }
    for (std::size_t k = 0; k < tasks.size(); ++k) {
        // Q-rank and Z-rank of the same span must agree.
        if (reports[k].rank != relation_rank(tasks[k].first))
            throw Error("relation rank mismatch between Q and Z at grade " +
                        exactalg::to_string(tasks[k].first));
        snf_.emplace(tasks[k].first, std::move(reports[k]));
    }
}

std::size_t HomologyPresentation::relation_rank(const Grade& g) const {
    auto it = relations_->find(g);
    return it == relations_->end() ? 0 : it->second.rank();
}

const std::vector<WordId>& HomologyPresentation::representatives(const Grade& g) const {
    static const std::vector<WordId> empty;
    auto it = reps_.find(g);
    return it == reps_.end() ? empty : it->second;
}

const SnfReport& HomologyPresentation::snf(const Grade& g) const {
    static const SnfReport empty;
    auto it = snf_.find(g);
    return it == snf_.end() ? empty : it->second;
}

std::size_t HomologyPresentation::dim(const Grade& g) const {
    return base_.algebra->dim(g) - relation_rank(g);
}

DimensionMatrix HomologyPresentation::dimension_matrix() const {
    DimensionMatrix out;
    out.order = base_.algebra->objects();
    const std::size_t n = out.order.size();
    out.entries.assign(n, std::vector<DimensionMatrix::Entry>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Grade g{out.order[i], out.order[j]};
            out.entries[i][j].rank = dim(g);
            out.entries[i][j].torsion = snf(g).invariant_factors;
        }
    return out;
}

AlgebraElement HomologyPresentation::normal_form(const AlgebraElement& x) const {
    AlgebraElement out;
    for (const auto& [g, part] : base_.algebra->homogeneous_parts(x)) {
        auto it = relations_->find(g);
        if (it == relations_->end()) {
            out += part;
            continue;
        }
        out += base_.algebra->from_vector(g, it->second.reduce(base_.algebra->to_vector(part, g)));
    }
    return out;
}

bool HomologyPresentation::class_equal(const AlgebraElement& p, const AlgebraElement& q) const {
    AlgebraElement d = p - q;
    if (d.is_zero()) return true;
    Grade gp = base_.algebra->grade_of(p);
    Grade gq = base_.algebra->grade_of(q);
    if (gp != gq)
        throw ValidationError("class_equal: grade mismatch " + exactalg::to_string(gp) + " vs " +
                              exactalg::to_string(gq));
    return normal_form(d).is_zero();
}

bool HomologyPresentation::class_equal(const precubical::PathWord& p,
                                       const precubical::PathWord& q) const {
    return class_equal(base_.element(p), base_.element(q));
}

AlgebraElement HomologyPresentation::multiply_classes(const AlgebraElement& x,
                                                      const AlgebraElement& y) const {
    if (mode_ != QuotientMode::ideal)
        throw ValidationError("multiply_classes requires ideal mode: " + to_string(mode_) +
                              "-mode relations are not a two-sided ideal");
    return normal_form(base_.algebra->multiply(normal_form(x), normal_form(y)));
}

tracealg::ReachabilityAlgebra ha0(const PrecubicalSet& c) { return tracealg::r0_algebra(c); }

DimensionMatrix ha0_matrix(const PrecubicalSet& c) {
    auto r0 = ha0(c);
    DimensionMatrix out;
    out.order = r0.algebra->objects();
    const std::size_t n = out.order.size();
    out.entries.assign(n, std::vector<DimensionMatrix::Entry>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.entries[i][j].rank = r0.algebra->dim({out.order[i], out.order[j]});
    return out;
}

HomologyPresentation ha1(const PrecubicalSet& c, QuotientMode mode,
                         std::optional<std::size_t> max_len, unsigned jobs) {
    precubical::require_valid(c);
    tracealg::PathAlgebra base = tracealg::path_algebra(c, max_len);

    std::vector<AlgebraElement> gens;
    for (const auto& cell : c.cells(2)) gens.push_back(tracealg::cell_relation(c, base, cell));

    std::map<Grade, EchelonBasis> span;
    std::map<Grade, exactalg::ZMat> raw;
    auto add_relation = [&](const AlgebraElement& rel) {
        if (rel.is_zero()) return;
        Grade g = base.algebra->grade_of(rel);
        QVec v = base.algebra->to_vector(rel, g);
        exactalg::ZVec zv(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!is_integer(v[i])) throw Error("relation vector is not integral");
            zv[i] = numerator(v[i]);
        }
        raw[g].push_back(std::move(zv));
        auto it = span.find(g);
        if (it == span.end()) it = span.emplace(g, EchelonBasis(v.size())).first;
        it->second.insert(std::move(v));
    };

    switch (mode) {
        case QuotientMode::local:
            for (const auto& r : gens) add_relation(r);
            break;
        case QuotientMode::image: {
            // delta0 - delta1 over all pure 2-cell sequences; the sequence cap
            // keeps delta images within the path cap.
            std::optional<std::size_t> seq_cap;
            if (base.truncated) seq_cap = std::max<std::size_t>(base.max_len / 2, 1);
            tracealg::TwoPathAlgebra two = tracealg::two_path_algebra(c, seq_cap);
            tracealg::BoundaryPair d = tracealg::boundary_maps(c, two, base);
            for (const auto& w : two.algebra->all_words())
                add_relation(d.delta0.image(w.id) - d.delta1.image(w.id));
            break;
        }
        case QuotientMode::ideal: {
            exactalg::IdealBasis ideal = exactalg::two_sided_ideal(base.algebra, gens);
            return HomologyPresentation(std::move(base), mode, std::move(ideal.span),
                                        std::move(ideal.raw_rows), jobs);
        }
    }
    return HomologyPresentation(std::move(base), mode, std::move(span), std::move(raw), jobs);
}

DimensionMatrix restricted_matrix(const HomologyPresentation& h,
                                  const std::vector<VertexId>& subset) {
    const auto& all = h.base().algebra->objects();
    for (const auto& v : subset)
        if (std::find(all.begin(), all.end(), v) == all.end())
            throw ValidationError("restricted_matrix: unknown vertex " + v);
    DimensionMatrix out;
    out.order = subset;
    const std::size_t n = subset.size();
    out.entries.assign(n, std::vector<DimensionMatrix::Entry>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Grade g{subset[i], subset[j]};
            out.entries[i][j].rank = h.dim(g);
            out.entries[i][j].torsion = h.snf(g).invariant_factors;
        }
    return out;
}

DimensionMatrix path_matrix(const tracealg::PathAlgebra& pa) {
    DimensionMatrix out;
    out.order = pa.algebra->objects();
    const std::size_t n = out.order.size();
    out.entries.assign(n, std::vector<DimensionMatrix::Entry>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.entries[i][j].rank = pa.algebra->dim({out.order[i], out.order[j]});
    return out;
}

} // namespace diho::dihomology
