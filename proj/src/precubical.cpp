#include "diho/precubical.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

namespace diho::precubical {

PrecubicalSet::PrecubicalSet(std::vector<std::vector<CellId>> cells,
                             std::map<CellId, std::array<std::vector<CellId>, 2>> faces)
    : cells_(std::move(cells)), faces_(std::move(faces)) {
    while (!cells_.empty() && cells_.back().empty()) cells_.pop_back();
    for (std::size_t n = 0; n < cells_.size(); ++n)
        for (const auto& id : cells_[n])
            if (!dim_.emplace(id, n).second)
                throw ValidationError("duplicate cell id: " + id);
}

const std::vector<CellId>& PrecubicalSet::cells(std::size_t n) const {
    static const std::vector<CellId> empty;
    return n < cells_.size() ? cells_[n] : empty;
}

std::size_t PrecubicalSet::dim_of(const CellId& id) const {
    auto it = dim_.find(id);
    if (it == dim_.end()) throw ValidationError("unknown cell: " + id);
    return it->second;
}

const CellId& PrecubicalSet::face(const CellId& id, int eps, std::size_t i) const {
    std::size_t n = dim_of(id);
    if (n == 0 || i < 1 || i > n)
        throw ValidationError("face index " + std::to_string(i) + " out of range for cell " + id);
    auto it = faces_.find(id);
    if (it == faces_.end() || it->second[static_cast<std::size_t>(eps)].size() != n)
        throw ValidationError("missing face table for cell " + id);
    return it->second[static_cast<std::size_t>(eps)][i - 1];
}

std::vector<Violation> validate(const PrecubicalSet& c) {
    std::vector<Violation> out;
    for (std::size_t n = 1; n <= c.max_dim(); ++n) {
        for (const auto& id : c.cells(n)) {
            auto it = c.faces().find(id);
            if (it == c.faces().end()) {
                out.push_back({id, "no face table"});
                continue;
            }
            bool refs_ok = true;
            for (int eps = 0; eps <= 1; ++eps) {
                const auto& row = it->second[static_cast<std::size_t>(eps)];
                if (row.size() != n) {
                    out.push_back({id, "face row for eps=" + std::to_string(eps) + " has " +
                                           std::to_string(row.size()) + " entries, expected " +
                                           std::to_string(n)});
                    refs_ok = false;
                    continue;
                }
                for (std::size_t i = 1; i <= n; ++i) {
                    const CellId& f = row[i - 1];
                    if (!c.has_cell(f) || c.dim_of(f) != n - 1) {
                        out.push_back({id, "face d^" + std::to_string(eps) + "_" +
                                               std::to_string(i) + " = " + f +
                                               " is not an existing " + std::to_string(n - 1) +
                                               "-cell"});
                        refs_ok = false;
                    }
                }
            }
            if (!refs_ok) continue;
            // d^e_i d^h_j = d^h_{j-1} d^e_i for i < j.
            for (std::size_t j = 2; j <= n; ++j)
                for (std::size_t i = 1; i < j; ++i)
                    for (int e = 0; e <= 1; ++e)
                        for (int h = 0; h <= 1; ++h) {
                            const CellId& lhs = c.face(c.face(id, h, j), e, i);
                            const CellId& rhs = c.face(c.face(id, e, i), h, j - 1);
                            if (lhs != rhs) {
                                std::ostringstream msg;
                                msg << "precubical identity fails at (e,h,i,j)=(" << e << ","
                                    << h << "," << i << "," << j << "): d^" << e << "_" << i
                                    << " d^" << h << "_" << j << " = " << lhs << " but d^" << h
                                    << "_" << j - 1 << " d^" << e << "_" << i << " = " << rhs;
                                out.push_back({id, msg.str()});
                            }
                        }
        }
    }
    // Corner lemmas for 2-cells (consequences of the identities, asserted
    // explicitly: they are what path concatenation relies on).
    for (const auto& id : c.cells(2)) {
        bool seen = false;
        for (const auto& v : out)
            if (v.cell == id) seen = true;
        if (seen) continue;
        if (c.edge_end(c.square_bottom(id)) != c.edge_start(c.square_right(id)))
            out.push_back({id, "end of bottom edge differs from start of right edge"});
        if (c.edge_end(c.square_left(id)) != c.edge_start(c.square_top(id)))
            out.push_back({id, "end of left edge differs from start of top edge"});
    }
    return out;
}

const PrecubicalSet& require_valid(const PrecubicalSet& c) {
    auto violations = validate(c);
    if (violations.empty()) return c;
    std::ostringstream msg;
    msg << "invalid precubical set (" << violations.size() << " violations):";
    for (const auto& v : violations) msg << "\n  [" << v.cell << "] " << v.message;
    throw ValidationError(msg.str());
}

PrecubicalSet parse_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("cells"))
        throw ValidationError("expected an object with \"dims\" and \"cells\"");
    std::size_t dims = doc.at("dims").get<std::size_t>();
    std::vector<std::vector<CellId>> cells(dims + 1);
    const auto& jc = doc.at("cells");
    for (std::size_t n = 0; n <= dims; ++n) {
        auto key = std::to_string(n);
        if (jc.contains(key)) cells[n] = jc.at(key).get<std::vector<CellId>>();
    }
    std::map<CellId, std::array<std::vector<CellId>, 2>> faces;
    if (doc.contains("faces"))
        for (const auto& [cell, rows] : doc.at("faces").items()) {
            std::array<std::vector<CellId>, 2> fr;
            if (rows.contains("0")) fr[0] = rows.at("0").get<std::vector<CellId>>();
            if (rows.contains("1")) fr[1] = rows.at("1").get<std::vector<CellId>>();
            faces.emplace(cell, std::move(fr));
        }
    return PrecubicalSet(std::move(cells), std::move(faces));
}

std::string serialize_json(const PrecubicalSet& c) {
    nlohmann::json doc;
    doc["dims"] = c.max_dim();
    nlohmann::json jc = nlohmann::json::object();
    for (std::size_t n = 0; n <= c.max_dim(); ++n) jc[std::to_string(n)] = c.cells(n);
    doc["cells"] = std::move(jc);
    nlohmann::json jf = nlohmann::json::object();
    for (std::size_t n = 1; n <= c.max_dim(); ++n)
        for (const auto& id : c.cells(n)) {
            auto it = c.faces().find(id);
            if (it == c.faces().end()) continue;
            jf[id] = {{"0", it->second[0]}, {"1", it->second[1]}};
        }
    doc["faces"] = std::move(jf);
    return doc.dump(2) + "\n";
}

std::vector<PathWord> enumerate_paths(const PrecubicalSet& c, const VertexId& a,
                                      const VertexId& b, std::size_t max_len) {
    if (!c.has_cell(a) || c.dim_of(a) != 0) throw ValidationError("unknown vertex: " + a);
    if (!c.has_cell(b) || c.dim_of(b) != 0) throw ValidationError("unknown vertex: " + b);
    // Outgoing edges per vertex, sorted by edge id: depth-first emission is then
    // lexicographic on edge-id sequences with prefixes first.
    std::map<VertexId, std::vector<CellId>> outgoing;
    for (const auto& e : c.cells(1)) outgoing[c.edge_start(e)].push_back(e);
    for (auto& [v, es] : outgoing) std::sort(es.begin(), es.end());

    std::vector<PathWord> found;
    std::vector<CellId> current;
    std::function<void(const VertexId&)> dfs = [&](const VertexId& at) {
        if (at == b) found.push_back({a, current});
        if (current.size() == max_len) return;
        auto it = outgoing.find(at);
        if (it == outgoing.end()) return;
        for (const auto& e : it->second) {
            current.push_back(e);
            dfs(c.edge_end(e));
            current.pop_back();
        }
    };
    dfs(a);
    return found;
}

bool is_acyclic(const PrecubicalSet& c) {
    std::map<VertexId, std::size_t> indeg;
    for (const auto& v : c.vertices()) indeg[v] = 0;
    for (const auto& e : c.cells(1)) ++indeg[c.edge_end(e)];
    std::vector<VertexId> ready;
    for (const auto& [v, d] : indeg)
        if (d == 0) ready.push_back(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
        VertexId v = ready.back();
        ready.pop_back();
        ++seen;
        for (const auto& e : c.cells(1))
            if (c.edge_start(e) == v && --indeg[c.edge_end(e)] == 0)
                ready.push_back(c.edge_end(e));
    }
    return seen == indeg.size();
}

PrecubicalSet subcomplex(const PrecubicalSet& c, const std::set<CellId>& keep) {
    std::vector<std::vector<CellId>> cells(c.max_dim() + 1);
    std::map<CellId, std::array<std::vector<CellId>, 2>> faces;
    for (std::size_t n = 0; n <= c.max_dim(); ++n)
        for (const auto& id : c.cells(n)) {
            if (!keep.count(id)) continue;
            cells[n].push_back(id);
            if (n == 0) continue;
            auto it = c.faces().find(id);
            if (it == c.faces().end()) throw ValidationError("missing face table for " + id);
            for (int eps = 0; eps <= 1; ++eps)
                for (const auto& f : it->second[static_cast<std::size_t>(eps)])
                    if (!keep.count(f))
                        throw ValidationError("subcomplex is not face-closed: " + id +
                                              " needs " + f);
            faces.emplace(id, it->second);
        }
    return PrecubicalSet(std::move(cells), std::move(faces));
}

PrecubicalSet relabel(const PrecubicalSet& c, const std::map<CellId, CellId>& names) {
    auto rename = [&names](const CellId& id) {
        auto it = names.find(id);
        return it == names.end() ? id : it->second;
    };
    std::vector<std::vector<CellId>> cells(c.max_dim() + 1);
    std::map<CellId, std::array<std::vector<CellId>, 2>> faces;
    for (std::size_t n = 0; n <= c.max_dim(); ++n)
        for (const auto& id : c.cells(n)) {
            cells[n].push_back(rename(id));
            if (n == 0) continue;
            auto row = c.faces().at(id);
            for (int eps = 0; eps <= 1; ++eps)
                for (auto& f : row[static_cast<std::size_t>(eps)]) f = rename(f);
            faces.emplace(rename(id), std::move(row));
        }
    return PrecubicalSet(std::move(cells), std::move(faces));
}

PrecubicalSet relabel_prefix(const PrecubicalSet& c, const std::string& prefix) {
    std::map<CellId, CellId> names;
    for (std::size_t n = 0; n <= c.max_dim(); ++n)
        for (const auto& id : c.cells(n)) names.emplace(id, prefix + id);
    return relabel(c, names);
}

PrecubicalSet disjoint_union(const PrecubicalSet& a, const PrecubicalSet& b) {
    std::size_t dims = std::max(a.max_dim(), b.max_dim());
    std::vector<std::vector<CellId>> cells(dims + 1);
    std::map<CellId, std::array<std::vector<CellId>, 2>> faces;
    for (std::size_t n = 0; n <= dims; ++n) {
        for (const auto& id : a.cells(n)) cells[n].push_back(id);
        for (const auto& id : b.cells(n)) {
            if (a.has_cell(id))
                throw ValidationError("disjoint_union: cell id clash: " + id +
                                      " (relabel one side first)");
            cells[n].push_back(id);
        }
    }
    for (const auto& [id, row] : a.faces()) faces.emplace(id, row);
    for (const auto& [id, row] : b.faces()) faces.emplace(id, row);
    return PrecubicalSet(std::move(cells), std::move(faces));
}

} // namespace diho::precubical
