#include "diho/products.hpp"

#include <algorithm>

namespace diho::exactalg {

std::size_t tensor_leaves(const WordId& id) {
    return static_cast<std::size_t>(std::count(id.begin(), id.end(), '|')) + 1;
}

std::vector<WordId> tensor_segments(const WordId& id) {
    std::vector<WordId> segs;
    std::size_t start = 0;
    while (true) {
        std::size_t bar = id.find('|', start);
        if (bar == std::string::npos) {
            segs.push_back(id.substr(start));
            break;
        }
        segs.push_back(id.substr(start, bar - start));
        start = bar + 1;
    }
    return segs;
}

CoproductAlgebra coproduct(AlgebraPtr a, AlgebraPtr b, std::size_t word_cap) {
    if (word_cap < 1) throw ValidationError("coproduct: word_cap must be at least 1");
    std::vector<BasisWord> words[2] = {a->all_words(), b->all_words()};
    for (const auto& w : words[0])
        if (b->has_word(w.id))
            throw ValidationError("coproduct: factors share basis word " + w.id);

    std::vector<VertexId> objects = a->objects();
    for (const auto& v : b->objects())
        if (std::find(objects.begin(), objects.end(), v) == objects.end()) objects.push_back(v);

    // Alternating tensor words with at most word_cap leaf segments, depth-first.
    std::map<Grade, std::vector<BasisWord>> basis;
    std::vector<WordId> segs;
    auto emit = [&](const BasisWord& first, const BasisWord& last) {
        WordId id;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            if (i) id += '|';
            id += segs[i];
        }
        basis[{first.source, last.target}].push_back({id, first.source, last.target});
    };
    std::function<void(int, const BasisWord&, const BasisWord&, std::size_t)> extend =
        [&](int last_factor, const BasisWord& first, const BasisWord& last, std::size_t leaves) {
            emit(first, last);
            int nf = 1 - last_factor;
            for (const auto& w : words[nf]) {
                std::size_t wl = tensor_leaves(w.id);
                if (leaves + wl > word_cap) continue;
                segs.push_back(w.id);
                extend(nf, first, w, leaves + wl);
                segs.pop_back();
            }
        };
    for (int f = 0; f < 2; ++f) {
        for (const auto& w : words[f]) {
            std::size_t wl = tensor_leaves(w.id);
            if (wl > word_cap) continue;
            segs.assign(1, w.id);
            extend(f, w, w, wl);
        }
    }

    // Per-word boundary data, resolved once: leaf counts, boundary leaves and
    // the id fragments around them. Multiplication is then lookups and joins.
    struct Meta {
        int first_fac, last_fac;
        std::size_t leaves;
        WordId first_leaf, last_leaf;
        WordId head_bar; // id minus the last leaf, with trailing '|'
        WordId tail_bar; // id minus the first leaf, with leading '|'
    };
    auto meta = std::make_shared<std::map<WordId, Meta>>();
    for (const auto& [g, ws] : basis)
        for (const auto& w : ws) {
            std::vector<WordId> leaves = tensor_segments(w.id);
            Meta m;
            m.leaves = leaves.size();
            m.first_leaf = leaves.front();
            m.last_leaf = leaves.back();
            m.first_fac = a->has_word(m.first_leaf) ? 0 : 1;
            m.last_fac = a->has_word(m.last_leaf) ? 0 : 1;
            m.head_bar = w.id.substr(0, w.id.size() - m.last_leaf.size());
            m.tail_bar = w.id.substr(m.first_leaf.size());
            meta->emplace(w.id, std::move(m));
        }
    auto shared_meta = std::static_pointer_cast<const std::map<WordId, Meta>>(meta);

    MulRule rule = [a, b, word_cap, shared_meta](const BasisWord& x, const BasisWord& y) {
        const Meta& mx = shared_meta->at(x.id);
        const Meta& my = shared_meta->at(y.id);
        if (mx.last_fac != my.first_fac) {
            if (mx.leaves + my.leaves > word_cap)
                throw TruncationError("coproduct product of " + x.id + " and " + y.id +
                                      " exceeds word cap " + std::to_string(word_cap));
            return AlgebraElement::word(x.id + "|" + y.id);
        }
        const GradedAlgebra* f = mx.last_fac == 0 ? a.get() : b.get();
        AlgebraElement merged = f->mul_words(f->word(mx.last_leaf), f->word(my.first_leaf));
        AlgebraElement out;
        for (const auto& [mid, c] : merged.terms()) {
            if (mx.leaves - 1 + tensor_leaves(mid) + my.leaves - 1 > word_cap)
                throw TruncationError("coproduct product of " + x.id + " and " + y.id +
                                      " exceeds word cap " + std::to_string(word_cap));
            out.add_term(mx.head_bar + mid + my.tail_bar, c);
        }
        return out;
    };

    CoproductAlgebra out;
    out.algebra = std::make_shared<GradedAlgebra>(std::move(objects), std::move(basis),
                                                  std::move(rule), VerifyLevel::sampled);
    out.factor_a = std::move(a);
    out.factor_b = std::move(b);
    out.word_cap = word_cap;
    return out;
}

namespace {
Morphism inject(const AlgebraPtr& factor, const AlgebraPtr& cop) {
    std::map<WordId, AlgebraElement> images;
    for (const auto& w : factor->all_words()) images.emplace(w.id, AlgebraElement::word(w.id));
    return Morphism(factor, cop, std::move(images));
}
} // namespace

Morphism CoproductAlgebra::inject_a() const { return inject(factor_a, algebra); }
Morphism CoproductAlgebra::inject_b() const { return inject(factor_b, algebra); }

AlgebraPtr direct_product(AlgebraPtr a, AlgebraPtr b) {
    std::vector<VertexId> objects = a->objects();
    for (const auto& v : b->objects())
        if (std::find(objects.begin(), objects.end(), v) == objects.end()) objects.push_back(v);
    std::map<Grade, std::vector<BasisWord>> basis;
    for (const auto& w : a->all_words())
        basis[w.grade()].push_back({product_tag_left(w.id), w.source, w.target});
    for (const auto& w : b->all_words())
        basis[w.grade()].push_back({product_tag_right(w.id), w.source, w.target});

    MulRule rule = [a, b](const BasisWord& x, const BasisWord& y) {
        bool xl = x.id.rfind("l:", 0) == 0, yl = y.id.rfind("l:", 0) == 0;
        if (xl != yl) return AlgebraElement{};
        const GradedAlgebra& f = xl ? *a : *b;
        AlgebraElement p = f.mul_words(f.word(x.id.substr(2)), f.word(y.id.substr(2)));
        AlgebraElement out;
        for (const auto& [id, c] : p.terms())
            out.add_term(xl ? product_tag_left(id) : product_tag_right(id), c);
        return out;
    };
    return std::make_shared<GradedAlgebra>(std::move(objects), std::move(basis), std::move(rule),
                                           VerifyLevel::sampled);
}

} // namespace diho::exactalg
