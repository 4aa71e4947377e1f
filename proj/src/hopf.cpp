#include "hopfgal/hopf.hpp"

namespace hopfgal {

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b,
                         const std::vector<PresPtr>& legs) {
    if (a.rank() != b.rank()) throw std::invalid_argument("tensor_mul: rank mismatch");
    TensorElement r(a.rank());
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms()) {
            // multiply leg words, distributing over the normal forms
            std::vector<std::pair<std::vector<Word>, Scalar>> acc{{{}, ca * cb}};
            for (int i = 0; i < a.rank(); ++i) {
                Element ni = legs.at(i)->normal_form_word(la[i].concat(lb[i]));
                std::vector<std::pair<std::vector<Word>, Scalar>> next;
                for (const auto& [pref, c] : acc)
                    for (const auto& [w, cw] : ni.terms()) {
                        auto p = pref;
                        p.push_back(w);
                        next.push_back({std::move(p), c * cw});
                    }
                acc = std::move(next);
            }
            for (auto& [l, c] : acc) r.add(l, c);
        }
    return r;
}

HopfPresentation::HopfPresentation(PresPtr alg, std::vector<TensorElement> coproducts,
                                   std::vector<Scalar> counits, std::vector<Element> antipodes)
    : alg_(std::move(alg)), cop_(std::move(coproducts)), counit_(std::move(counits)),
      antipode_(std::move(antipodes)) {
    if (cop_.size() != alg_->gen_count() || counit_.size() != alg_->gen_count() ||
        antipode_.size() != alg_->gen_count())
        throw std::invalid_argument("HopfPresentation: table sizes do not match generators");
    for (size_t i = 0; i < cop_.size(); ++i) {
        TensorElement t(2);
        for (const auto& [l, c] : cop_[i].terms()) {
            Element e1 = alg_->normal_form_word(l[0]);
            Element e2 = alg_->normal_form_word(l[1]);
            for (const auto& [w1, c1] : e1.terms())
                for (const auto& [w2, c2] : e2.terms()) t.add({w1, w2}, c * c1 * c2);
        }
        cop_[i] = std::move(t);
        antipode_[i] = alg_->normal_form(antipode_[i]);
    }
    group_like_ = true;
    for (size_t i = 0; i < cop_.size(); ++i) {
        TensorElement gl(2);
        gl.add({Word::single((GenId)i), Word::single((GenId)i)}, Scalar(1));
        if (cop_[i] != gl || !counit_[i].is_one()) {
            group_like_ = false;
            break;
        }
    }
}

TensorElement HopfPresentation::coproduct_word(const Word& w) const {
    if (group_like_) {
        TensorElement t(2);
        t.add({w, w}, Scalar(1));
        return t;
    }
    auto it = cop_cache_.find(w);
    if (it != cop_cache_.end()) return it->second;
    TensorElement t(2);
    if (w.empty()) {
        t.add({Word::one(), Word::one()}, Scalar(1));
    } else if (w.size() == 1) {
        t = cop_.at(w.g[0]);
    } else {
        Word left(std::vector<GenId>(w.g.begin(), w.g.begin() + w.size() / 2));
        Word right(std::vector<GenId>(w.g.begin() + w.size() / 2, w.g.end()));
        t = tensor_mul(coproduct_word(left), coproduct_word(right), {alg_, alg_});
    }
    cop_cache_.emplace(w, t);
    return t;
}

TensorElement HopfPresentation::coproduct(const Element& e) const {
    TensorElement r(2);
    for (const auto& [w, c] : e.terms()) r = r + coproduct_word(w) * c;
    return r;
}

TensorElement HopfPresentation::iterated_coproduct_word(const Word& w, int n) const {
    if (n < 1) throw std::invalid_argument("iterated_coproduct: n >= 1");
    if (n == 1) return coproduct_word(w);
    if (group_like_) {
        TensorElement t(n + 1);
        t.add(std::vector<Word>((size_t)n + 1, w), Scalar(1));
        return t;
    }
    auto key = std::make_pair(w, n);
    auto it = itcop_cache_.find(key);
    if (it != itcop_cache_.end()) return it->second;
    // Delta^n = (id x Delta) o Delta^{n-1}: expand the last leg
    TensorElement prev = iterated_coproduct_word(w, n - 1);
    TensorElement t(n + 1);
    for (const auto& [l, c] : prev.terms()) {
        TensorElement dl = coproduct_word(l.back());
        for (const auto& [l2, c2] : dl.terms()) {
            std::vector<Word> legs(l.begin(), l.end() - 1);
            legs.push_back(l2[0]);
            legs.push_back(l2[1]);
            t.add(legs, c * c2);
        }
    }
    itcop_cache_.emplace(key, t);
    return t;
}

TensorElement HopfPresentation::iterated_coproduct(const Element& e, int n) const {
    TensorElement r(n + 1);
    for (const auto& [w, c] : e.terms()) r = r + iterated_coproduct_word(w, n) * c;
    return r;
}

Scalar HopfPresentation::counit_word(const Word& w) const {
    Scalar s(1);
    for (GenId g : w.g) s *= counit_.at(g);
    return s;
}

Scalar HopfPresentation::counit(const Element& e) const {
    Scalar s;
    for (const auto& [w, c] : e.terms()) s += c * counit_word(w);
    return s;
}

Element HopfPresentation::antipode_word(const Word& w) const {
    auto it = antipode_cache_.find(w);
    if (it != antipode_cache_.end()) return it->second;
    Element r = Element::unit();
    for (size_t i = w.size(); i-- > 0;) r = alg_->mul(r, antipode_.at(w.g[i]));
    antipode_cache_.emplace(w, r);
    return r;
}

Element HopfPresentation::antipode(const Element& e) const {
    Element r;
    for (const auto& [w, c] : e.terms()) r = r + antipode_word(w) * c;
    return r;
}

bool HopfPresentation::is_cocommutative() const {
    for (size_t i = 0; i < cop_.size(); ++i) {
        TensorElement flip(2);
        for (const auto& [l, c] : cop_[i].terms()) flip.add({l[1], l[0]}, c);
        if (flip != cop_[i]) return false;
    }
    return true;
}

LinearMap LinearMap::from_table(HopfPtr dom, PresPtr cod, std::map<Word, Element> table, int degree) {
    for (const Word& w : dom->alg()->basis(degree))
        if (!table.count(w))
            throw std::invalid_argument("LinearMap: table not total on basis up to degree " +
                                        std::to_string(degree) + " (missing " +
                                        dom->alg()->word_str(w) + ")");
    LinearMap f;
    f.domain = std::move(dom);
    f.codomain = std::move(cod);
    f.policy = Policy::TableOnly;
    f.table = std::move(table);
    f.table_degree = degree;
    return f;
}

LinearMap LinearMap::multiplicative(HopfPtr dom, PresPtr cod, std::map<Word, Element> gen_images) {
    LinearMap f;
    f.domain = std::move(dom);
    f.codomain = std::move(cod);
    f.policy = Policy::Multiplicative;
    f.table = std::move(gen_images);
    return f;
}

Element LinearMap::apply_word(const Word& w) const {
    if (policy == Policy::TableOnly) {
        auto it = table.find(w);
        if (it == table.end())
            throw std::out_of_range("LinearMap: word outside table: " + domain->alg()->word_str(w));
        return it->second;
    }
    Element r = Element::unit();
    if (policy == Policy::Multiplicative) {
        for (GenId g : w.g) r = codomain->mul(r, table.at(Word::single(g)));
    } else {
        for (size_t i = w.size(); i-- > 0;) r = codomain->mul(r, table.at(Word::single(w.g[i])));
    }
    return r;
}

Element LinearMap::apply(const Element& e) const {
    Element r;
    for (const auto& [w, c] : e.terms()) r = r + apply_word(w) * c;
    return r;
}

LinearMap convolve(const LinearMap& f, const LinearMap& g) {
    if (f.domain != g.domain) throw CodomainMismatch("convolve: domain mismatch");
    if (f.codomain != g.codomain) throw CodomainMismatch("convolve: codomain mismatch");
    int degree = 0;
    if (f.policy == LinearMap::Policy::TableOnly) degree = f.table_degree;
    if (g.policy == LinearMap::Policy::TableOnly)
        degree = degree == 0 ? g.table_degree : std::min(degree, g.table_degree);
    if (degree == 0) degree = 3;
    std::map<Word, Element> table;
    for (const Word& w : f.domain->alg()->basis(degree)) {
        Element v;
        for (const auto& [legs, c] : f.domain->coproduct_word(w).terms())
            v = v + f.codomain->mul(f.apply_word(legs[0]), g.apply_word(legs[1])) * c;
        table[w] = v;
    }
    return LinearMap::from_table(f.domain, f.codomain, std::move(table), degree);
}

LinearMap convolution_unit(HopfPtr dom, PresPtr cod, int degree) {
    std::map<Word, Element> table;
    for (const Word& w : dom->alg()->basis(degree))
        table[w] = Element::unit(dom->counit_word(w));
    return LinearMap::from_table(std::move(dom), std::move(cod), std::move(table), degree);
}

Report check_bialgebra_axioms(const HopfPresentation& H, int max_degree) {
    Report rep;
    const auto& A = H.alg();
    auto basis = A->basis(max_degree);

    {
        bool ok = true;
        std::string witness;
        for (const Word& w : basis) {
            TensorElement d = H.coproduct_word(w);
            TensorElement left(3), right(3);
            for (const auto& [l, c] : d.terms()) {
                for (const auto& [l1, c1] : H.coproduct_word(l[0]).terms())
                    left.add({l1[0], l1[1], l[1]}, c * c1);
                for (const auto& [l2, c2] : H.coproduct_word(l[1]).terms())
                    right.add({l[0], l2[0], l2[1]}, c * c2);
            }
            if (left != right) {
                ok = false;
                witness = A->word_str(w);
                break;
            }
        }
        rep.check(ok, "coassociativity", "(Delta x id)Delta = (id x Delta)Delta", witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (const Word& w : basis) {
            Element l, r;
            for (const auto& [legs, c] : H.coproduct_word(w).terms()) {
                l.add(legs[1], c * H.counit_word(legs[0]));
                r.add(legs[0], c * H.counit_word(legs[1]));
            }
            Element e(w);
            if (l != e || r != e) {
                ok = false;
                witness = A->word_str(w);
                break;
            }
        }
        rep.check(ok, "counitality", "(eps x id)Delta = id = (id x eps)Delta", witness);
    }
    {
        bool okd = true, oke = true;
        std::string wd, we;
        for (const Word& u : basis) {
            for (const Word& v : basis) {
                if (A->degree(u) + A->degree(v) > max_degree) continue;
                Element uv = A->mul(Element(u), Element(v));
                if (okd) {
                    TensorElement lhs = H.coproduct(uv);
                    TensorElement rhs = tensor_mul(H.coproduct_word(u), H.coproduct_word(v), {A, A});
                    if (lhs != rhs) {
                        okd = false;
                        wd = "(" + A->word_str(u) + ", " + A->word_str(v) + ")";
                    }
                }
                if (oke && H.counit(uv) != H.counit_word(u) * H.counit_word(v)) {
                    oke = false;
                    we = "(" + A->word_str(u) + ", " + A->word_str(v) + ")";
                }
                if (!okd && !oke) break;
            }
            if (!okd && !oke) break;
        }
        rep.check(okd, "coproduct_multiplicative", "Delta(uv) = Delta(u)Delta(v)", wd);
        rep.check(oke, "counit_multiplicative", "eps(uv) = eps(u)eps(v)", we);
    }
    {
        bool ok = true;
        std::string witness;
        for (const Word& w : basis) {
            Element l, r;
            for (const auto& [legs, c] : H.coproduct_word(w).terms()) {
                l = l + A->mul(H.antipode_word(legs[0]), Element(legs[1])) * c;
                r = r + A->mul(Element(legs[0]), H.antipode_word(legs[1])) * c;
            }
            Element e = Element::unit(H.counit_word(w));
            if (l != e || r != e) {
                ok = false;
                witness = A->word_str(w) + " -> m(S x id)Delta = " + A->str(l);
                break;
            }
        }
        rep.check(ok, "antipode_axiom", "m(S x id)Delta = eta eps = m(id x S)Delta", witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (const Word& u : basis) {
            for (const Word& v : basis) {
                if (A->degree(u) + A->degree(v) > max_degree) continue;
                Element lhs = H.antipode(A->mul(Element(u), Element(v)));
                Element rhs = A->mul(H.antipode_word(v), H.antipode_word(u));
                if (lhs != rhs) {
                    ok = false;
                    witness = "(" + A->word_str(u) + ", " + A->word_str(v) + ")";
                    break;
                }
            }
            if (!ok) break;
        }
        rep.check(ok, "antipode_antimultiplicative", "S(uv) = S(v)S(u)", witness);
    }
    return rep;
}

}  // namespace hopfgal
