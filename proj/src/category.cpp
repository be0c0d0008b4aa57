#include "diho/category.hpp"

#include <algorithm>
#include <set>

namespace diho::exactalg {

const CategoryPresentation::Arrow& CategoryPresentation::arrow(const WordId& id) const {
    for (const auto& m : morphisms)
        if (m.id == id) return m;
    throw ValidationError("unknown morphism: " + id);
}

void CategoryPresentation::validate() const {
    std::set<VertexId> objs(objects.begin(), objects.end());
    if (objs.size() != objects.size()) throw ValidationError("duplicate object id");
    std::map<WordId, const Arrow*> by_id;
    for (const auto& m : morphisms) {
        if (!by_id.emplace(m.id, &m).second)
            throw ValidationError("duplicate morphism id: " + m.id);
        if (!objs.count(m.source) || !objs.count(m.target))
            throw ValidationError("morphism " + m.id + " has an unknown endpoint");
    }
    for (const auto& v : objects) {
        auto it = identities.find(v);
        if (it == identities.end()) throw ValidationError("object " + v + " has no identity");
        auto a = by_id.find(it->second);
        if (a == by_id.end() || a->second->source != v || a->second->target != v)
            throw ValidationError("identity of " + v + " is not an endomorphism of " + v);
    }
    // The table covers exactly the composable pairs, with correct endpoints.
    for (const auto& f : morphisms)
        for (const auto& g : morphisms) {
            auto it = composition.find({f.id, g.id});
            if (f.target != g.source) {
                if (it != composition.end())
                    throw ValidationError("composite defined for non-composable pair (" + f.id +
                                          ", " + g.id + ")");
                continue;
            }
            if (it == composition.end())
                throw ValidationError("missing composite for (" + f.id + ", " + g.id + ")");
            auto h = by_id.find(it->second);
            if (h == by_id.end())
                throw ValidationError("composite of (" + f.id + ", " + g.id +
                                      ") is not a morphism: " + it->second);
            if (h->second->source != f.source || h->second->target != g.target)
                throw ValidationError("composite of (" + f.id + ", " + g.id +
                                      ") has wrong endpoints");
        }
    for (const auto& f : morphisms) {
        if (composition.at({identities.at(f.source), f.id}) != f.id)
            throw ValidationError("left identity law fails for " + f.id);
        if (composition.at({f.id, identities.at(f.target)}) != f.id)
            throw ValidationError("right identity law fails for " + f.id);
    }
    for (const auto& f : morphisms)
        for (const auto& g : morphisms) {
            if (f.target != g.source) continue;
            for (const auto& h : morphisms) {
                if (g.target != h.source) continue;
                const WordId& fg_h = composition.at({composition.at({f.id, g.id}), h.id});
                const WordId& f_gh = composition.at({f.id, composition.at({g.id, h.id})});
                if (fg_h != f_gh)
                    throw ValidationError("composition is not associative at (" + f.id + ", " +
                                          g.id + ", " + h.id + ")");
            }
        }
}

AlgebraPtr convolution_algebra(const CategoryPresentation& cat) {
    cat.validate();
    std::map<Grade, std::vector<BasisWord>> basis;
    for (const auto& m : cat.morphisms)
        basis[{m.source, m.target}].push_back({m.id, m.source, m.target});
    std::map<std::pair<WordId, WordId>, AlgebraElement> table;
    for (const auto& [pair, h] : cat.composition) table.emplace(pair, AlgebraElement::word(h));
    return std::make_shared<GradedAlgebra>(cat.objects, std::move(basis),
                                           table_rule(std::move(table)), VerifyLevel::full);
}

CategoryPresentation free_category(const std::vector<VertexId>& objects,
                                   const std::vector<CategoryPresentation::Arrow>& arrows) {
    CategoryPresentation cat;
    cat.objects = objects;
    // Path enumeration only terminates on acyclic quivers; refuse cycles upfront
    // (Kahn peeling).
    {
        std::map<VertexId, std::size_t> indeg;
        for (const auto& v : objects) indeg[v] = 0;
        for (const auto& a : arrows) ++indeg[a.target];
        std::vector<VertexId> ready;
        for (const auto& [v, d] : indeg)
            if (d == 0) ready.push_back(v);
        std::size_t seen = 0;
        while (!ready.empty()) {
            VertexId v = ready.back();
            ready.pop_back();
            ++seen;
            for (const auto& a : arrows)
                if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
        }
        if (seen != indeg.size())
            throw ValidationError("free_category: quiver has a directed cycle");
    }
    std::map<WordId, std::vector<WordId>> path_of; // morphism id -> arrow ids
    for (const auto& v : objects) {
        WordId id = "id(" + v + ")";
        cat.morphisms.push_back({id, v, v});
        cat.identities.emplace(v, id);
        path_of.emplace(id, std::vector<WordId>{});
    }
    auto join = [](const std::vector<WordId>& seq) {
        WordId id;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (i) id += '.';
            id += seq[i];
        }
        return id;
    };
    std::vector<CategoryPresentation::Arrow> frontier;
    for (const auto& a : arrows) {
        CategoryPresentation::Arrow m{a.id, a.source, a.target};
        cat.morphisms.push_back(m);
        path_of.emplace(a.id, std::vector<WordId>{a.id});
        frontier.push_back(m);
    }
    std::size_t guard = arrows.size() * arrows.size() + arrows.size() + 4;
    while (!frontier.empty()) {
        std::vector<CategoryPresentation::Arrow> next;
        for (const auto& p : frontier) {
            if (path_of.at(p.id).size() > guard)
                throw ValidationError("free_category: quiver has a directed cycle");
            for (const auto& a : arrows) {
                if (p.target != a.source) continue;
                auto seq = path_of.at(p.id);
                seq.push_back(a.id);
                WordId id = join(seq);
                cat.morphisms.push_back({id, p.source, a.target});
                path_of.emplace(id, seq);
                next.push_back({id, p.source, a.target});
            }
        }
        frontier = std::move(next);
    }
    for (const auto& f : cat.morphisms)
        for (const auto& g : cat.morphisms) {
            if (f.target != g.source) continue;
            auto seq = path_of.at(f.id);
            const auto& tail = path_of.at(g.id);
            seq.insert(seq.end(), tail.begin(), tail.end());
            cat.composition.emplace(std::make_pair(f.id, g.id),
                                    seq.empty() ? cat.identities.at(f.source) : join(seq));
        }
    cat.validate();
    return cat;
}

LinearizedFunctor linearize_functor(const CategoryPresentation& dom,
                                    const CategoryPresentation& cod,
                                    const FunctorPresentation& f) {
    dom.validate();
    cod.validate();
    for (const auto& v : dom.objects) {
        auto it = f.object_map.find(v);
        if (it == f.object_map.end())
            throw ValidationError("functor: no image for object " + v);
        if (std::find(cod.objects.begin(), cod.objects.end(), it->second) == cod.objects.end())
            throw ValidationError("functor: image object " + it->second + " is not in the codomain");
    }
    for (const auto& m : dom.morphisms) {
        auto it = f.morphism_map.find(m.id);
        if (it == f.morphism_map.end())
            throw ValidationError("functor: no image for morphism " + m.id);
        const auto& img = cod.arrow(it->second);
        if (img.source != f.object_map.at(m.source) || img.target != f.object_map.at(m.target))
            throw ValidationError("functor: image of " + m.id + " has wrong endpoints");
    }
    for (const auto& [v, e] : dom.identities)
        if (f.morphism_map.at(e) != cod.identities.at(f.object_map.at(v)))
            throw ValidationError("functor: identity of " + v + " is not sent to an identity");
    for (const auto& [pair, h] : dom.composition) {
        const WordId& lhs = f.morphism_map.at(h);
        const WordId& rhs =
            cod.composition.at({f.morphism_map.at(pair.first), f.morphism_map.at(pair.second)});
        if (lhs != rhs)
            throw ValidationError("functor: composition not preserved at (" + pair.first + ", " +
                                  pair.second + ")");
    }

    std::set<VertexId> images;
    bool injective = true;
    for (const auto& v : dom.objects) injective &= images.insert(f.object_map.at(v)).second;

    AlgebraPtr da = convolution_algebra(dom);
    AlgebraPtr ca = convolution_algebra(cod);
    std::map<WordId, AlgebraElement> word_images;
    for (const auto& m : dom.morphisms)
        word_images.emplace(m.id, AlgebraElement::word(f.morphism_map.at(m.id)));
    Morphism phi(da, ca, std::move(word_images));
    LinearizedFunctor out{phi, phi.is_algebra_map(), phi.algebra_map_witness(), injective};
    return out;
}

} // namespace diho::exactalg
