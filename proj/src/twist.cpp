#include "hopfgal/twist.hpp"

namespace hopfgal {

SigmaMap::SigmaMap(PresPtr orig, std::function<Element(const Element&, const Element&)> deformed_mul)
    : orig_(std::move(orig)), mul_(std::move(deformed_mul)) {}

Scalar SigmaMap::operator()(const Word& w) const {
    if (w.size() <= 1) return Scalar(1);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    Word rest(std::vector<GenId>(w.g.begin() + 1, w.g.end()));
    Element ev = mul_(Element(Word::single(w.g[0])), Element(rest) * (*this)(rest));
    // the deformed evaluation must be a unit multiple of the straight one
    Element nf = orig_->normal_form_word(w);
    Scalar s;
    if (ev.is_zero() && nf.is_zero()) {
        s = Scalar(1);
    } else {
        bool ok = !ev.is_zero() && !nf.is_zero();
        if (ok) {
            const auto& lead_ev = *ev.terms().rbegin();
            const auto& lead_nf = *nf.terms().rbegin();
            ok = lead_ev.first == lead_nf.first && lead_nf.second.is_unit_monomial() &&
                 lead_ev.second.is_unit_monomial();
            if (ok) {
                s = lead_ev.second * lead_nf.second.inverse_unit();
                ok = ev == nf * s;
            }
        }
        if (!ok)
            throw RewriteSynthesisFailed(orig_->name() + ": deformed product of " +
                                         orig_->word_str(w) +
                                         " is not a unit multiple of itself: " + orig_->str(ev));
    }
    memo_.emplace(w, s);
    return s;
}

Element SigmaMap::to_deformed(const Element& e) const {
    Element r;
    for (const auto& [w, c] : e.terms()) r.add(w, c * (*this)(w).inverse_unit());
    return r;
}

Element SigmaMap::to_original(const Element& e) const {
    Element r;
    for (const auto& [w, c] : e.terms()) r.add(w, c * (*this)(w));
    return r;
}

std::pair<PresPtr, SigmaPtr> synthesize_twisted_presentation(
    const PresPtr& orig, const std::string& name,
    std::function<Element(const Element&, const Element&)> new_mul) {
    auto sigma = std::make_shared<SigmaMap>(orig, new_mul);
    std::vector<Generator> gens;
    for (GenId g = 0; g < orig->gen_count(); ++g) gens.push_back(orig->gen(g));
    auto p = std::make_shared<AlgebraPresentation>(name, std::move(gens));
    for (const auto& rule : orig->rules()) {
        // deformed evaluation of the lhs word re-expressed over deformed
        // words: w0 -> sum e_u sigma(u)^{-1} u
        Element ev = Element::unit();
        for (size_t i = rule.lhs.size(); i-- > 0;)
            ev = new_mul(Element(Word::single(rule.lhs.g[i])), ev);
        try {
            p->add_rule(rule.lhs, sigma->to_deformed(ev));
        } catch (const std::invalid_argument& e) {
            throw RewriteSynthesisFailed(std::string("twist synthesis: ") + e.what());
        }
    }
    if (orig->has_star()) {
        std::vector<Element> star;
        for (GenId g = 0; g < orig->gen_count(); ++g)
            star.push_back(sigma->to_deformed(orig->star(Element(Word::single(g)))));
        p->set_star(std::move(star));
    }
    if (orig->linear_oracle()) {
        // diagonal rescaling keeps the row echelon reduced: each row of the
        // filtered ideal re-expressed over deformed words, pivot renormalized
        const auto& base = *orig->linear_oracle();
        auto oracle = std::make_shared<LinearOracle>();
        oracle->degree = base.degree;
        oracle->words = base.words;
        oracle->index = base.index;
        for (const auto& [pivot, row] : base.echelon.rows()) {
            Scalar piv_sigma = (*sigma)(base.words[pivot]);
            SparseRow scaled;
            for (const auto& [col, v] : row)
                scaled[col] = v * FracScalar(piv_sigma * (*sigma)(base.words[col]).inverse_unit());
            oracle->echelon.insert(std::move(scaled));
        }
        p->set_linear_oracle(oracle);
    }
    p->finalize_rules();
    // the deformed normal words must coincide with the original ones
    for (GenId a = 0; a < orig->gen_count(); ++a)
        for (GenId b = 0; b < orig->gen_count(); ++b) {
            Word w(std::vector<GenId>{a, b});
            if (orig->is_normal_word(w) != p->is_normal_word(w))
                throw RewriteSynthesisFailed(name + ": twisted rules change the normal basis at " +
                                             orig->word_str(w));
        }
    return {p, sigma};
}

namespace {

// m_gamma = gamma * m * gbar evaluated as a staged contraction: one
// coproduct split at a time so the cocycle's zero pattern prunes early
class TwistedMul {
public:
    TwistedMul(HopfPtr H, FormPtr gamma, FormPtr gbar)
        : H_(std::move(H)), gamma_(std::move(gamma)), gbar_(std::move(gbar)) {}

    Element operator()(const Element& x, const Element& y) const {
        Element r;
        for (const auto& [wx, cx] : x.terms())
            for (const auto& [wy, cy] : y.terms()) r = r + words(wx, wy) * (cx * cy);
        return r;
    }

private:
    HopfPtr H_;
    FormPtr gamma_, gbar_;
    mutable std::map<std::pair<Word, Word>, Element> memo_, tail_memo_;

    Element words(const Word& wx, const Word& wy) const {
        auto key = std::make_pair(wx, wy);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Element r;
        for (const auto& [lx, cx] : H_->coproduct_word(wx).terms())
            for (const auto& [ly, cy] : H_->coproduct_word(wy).terms()) {
                Scalar a = gamma_->eval_words(lx[0], ly[0]);
                if (a.is_zero()) continue;
                r = r + tail(lx[1], ly[1]) * (cx * cy * a);
            }
        memo_.emplace(std::move(key), r);
        return r;
    }

    Element tail(const Word& u, const Word& v) const {
        auto key = std::make_pair(u, v);
        auto it = tail_memo_.find(key);
        if (it != tail_memo_.end()) return it->second;
        Element r;
        for (const auto& [lu, cu] : H_->coproduct_word(u).terms())
            for (const auto& [lv, cv] : H_->coproduct_word(v).terms()) {
                Scalar b = gbar_->eval_words(lu[1], lv[1]);
                if (b.is_zero()) continue;
                r = r + H_->mul(Element(lu[0]), Element(lv[0])) * (cu * cv * b);
            }
        tail_memo_.emplace(std::move(key), r);
        return r;
    }
};

// a *_gamma a' = a0 a'0 gbar(a1 (x) a'1)
Element twisted_module_product(const ComoduleAlgebra& A, const BilinearForm& gbar, const Element& x,
                               const Element& y) {
    Element r;
    for (const auto& [lx, cx] : A.coact(x).terms())
        for (const auto& [ly, cy] : A.coact(y).terms()) {
            Scalar b = gbar.eval_words(lx[1], ly[1]);
            if (b.is_zero()) continue;
            r = r + A.alg()->mul(Element(lx[0]), Element(ly[0])) * (cx * cy * b);
        }
    return r;
}

}  // namespace

TwistContext TwistContext::make(HopfPtr H, FormPtr gamma, int check_degree) {
    if (gamma->host() != H) throw HostMismatch("TwistContext: cocycle lives on a different Hopf algebra");
    Report r = check_form(*gamma, FormCheckMode::Cocycle, check_degree);
    if (!r.all_pass())
        throw std::invalid_argument("TwistContext: form fails the 2-cocycle condition:\n" + r.text());
    TwistContext ctx;
    ctx.H_ = H;
    ctx.gamma_ = gamma;
    ctx.gamma_bar_ = std::make_shared<BilinearForm>(invert_form(*gamma, check_degree));
    ctx.u_ = std::make_shared<Functional>(H, Functional::Kind::U, ctx.gamma_);
    ctx.ubar_ = std::make_shared<Functional>(H, Functional::Kind::UBar, ctx.gamma_bar_);
    ctx.degree_ = check_degree;
    return ctx;
}

const HopfPtr& TwistContext::twisted_hopf() const {
    if (lazy_->twisted) return lazy_->twisted;
    auto tm = std::make_shared<TwistedMul>(H_, gamma_, gamma_bar_);
    auto mg = [tm](const Element& x, const Element& y) { return (*tm)(x, y); };
    auto [alg, sigma] = synthesize_twisted_presentation(H_->alg(), H_->alg()->name() + "_tw", mg);
    // coalgebra unchanged as linear maps; tables re-expressed leg by leg
    std::vector<TensorElement> cop;
    std::vector<Scalar> counit;
    std::vector<Element> antip;
    for (GenId g = 0; g < H_->alg()->gen_count(); ++g) {
        TensorElement t(2);
        for (const auto& [l, c] : H_->coproduct_word(Word::single(g)).terms())
            t.add(l, c * (*sigma)(l[0]).inverse_unit() * (*sigma)(l[1]).inverse_unit());
        cop.push_back(std::move(t));
        counit.push_back(H_->counit_word(Word::single(g)));
        // S_gamma = u_gamma * S * ubar_gamma
        Element sg;
        for (const auto& [l, c] : H_->iterated_coproduct_word(Word::single(g), 2).terms())
            sg = sg + H_->antipode_word(l[1]) * (c * u_->eval(Element(l[0])) * ubar_->eval(Element(l[2])));
        antip.push_back(sigma->to_deformed(sg));
    }
    lazy_->sigma = sigma;
    lazy_->twisted =
        std::make_shared<HopfPresentation>(alg, std::move(cop), std::move(counit), std::move(antip));
    return lazy_->twisted;
}

const SigmaPtr& TwistContext::sigma() const {
    twisted_hopf();
    return lazy_->sigma;
}

FormPtr TwistContext::gamma_on_twisted() const {
    if (!lazy_->gamma_tw) {
        SigmaPtr s = sigma();
        lazy_->gamma_tw = std::make_shared<BilinearForm>(BilinearForm::scaled(
            twisted_hopf(), gamma_, [s](const Word& w) { return (*s)(w); }));
    }
    return lazy_->gamma_tw;
}

FormPtr TwistContext::gamma_bar_on_twisted() const {
    if (!lazy_->gamma_bar_tw) {
        SigmaPtr s = sigma();
        lazy_->gamma_bar_tw = std::make_shared<BilinearForm>(BilinearForm::scaled(
            twisted_hopf(), gamma_bar_, [s](const Word& w) { return (*s)(w); }));
    }
    return lazy_->gamma_bar_tw;
}

BilinearForm TwistContext::twist_rform(const FormPtr& R) const {
    if (R->host() != H_) throw HostMismatch("twist_rform: R-form lives on a different Hopf algebra");
    SigmaPtr s = sigma();
    auto r_tw = std::make_shared<BilinearForm>(
        BilinearForm::scaled(twisted_hopf(), R, [s](const Word& w) { return (*s)(w); }));
    return BilinearForm::composite(
        twisted_hopf(), {{gamma_on_twisted(), true}, {r_tw, false}, {gamma_bar_on_twisted(), false}});
}

HopfPtr twist_hopf(const TwistContext& ctx) { return ctx.twisted_hopf(); }

TwistedComodule twist_comodule_algebra(const ComoduleAlgebra& A, const TwistContext& ctx) {
    if (A.host() != ctx.hopf())
        throw HostMismatch("twist_comodule_algebra: comodule over a different Hopf algebra");
    ComoduleAlgebra Acopy = A;
    FormPtr gbar = ctx.gamma_bar();
    auto ma = [Acopy, gbar](const Element& x, const Element& y) {
        return twisted_module_product(Acopy, *gbar, x, y);
    };
    auto [alg, sigma] = synthesize_twisted_presentation(A.alg(), A.alg()->name() + "_tw", ma);
    const SigmaPtr& sigmaH = ctx.sigma();
    std::vector<TensorElement> co;
    for (GenId g = 0; g < A.alg()->gen_count(); ++g) {
        TensorElement t(2);
        for (const auto& [l, c] : A.coact_word(Word::single(g)).terms())
            t.add(l, c * (*sigma)(l[0]).inverse_unit() * (*sigmaH)(l[1]).inverse_unit());
        co.push_back(std::move(t));
    }
    return {ComoduleAlgebra(alg, ctx.twisted_hopf(), std::move(co)), sigma};
}

BraidedHopf twist_braided(const BraidedHopf& B, const TwistContext& ctx) {
    if (B.host_hopf() != ctx.hopf())
        throw HostMismatch("twist_braided: braided Hopf algebra over a different host");
    auto rg = std::make_shared<BilinearForm>(ctx.twist_rform(B.host_rform()));
    SigmaPtr s = ctx.sigma();
    return BraidedHopf::twisted(B, ctx.gamma(), ctx.gamma_bar(), ctx.twisted_hopf(), rg,
                                [s](const Word& w) { return (*s)(w); });
}

TensorElement phi_iso(const TensorElement& t, const ComodCarrier& V, const ComodCarrier& W,
                      const BilinearForm& gamma_or_inverse, bool forward) {
    (void)forward;
    TensorElement r(2);
    for (const auto& [l, c] : t.terms())
        for (const auto& [lv, cv] : V.coact_word(l[0]).terms())
            for (const auto& [lw, cw] : W.coact_word(l[1]).terms()) {
                Scalar s = gamma_or_inverse.eval_words(lv[1], lw[1]);
                if (s.is_zero()) continue;
                r.add({lv[0], lw[0]}, c * cv * cw * s);
            }
    return r;
}

Element q_map(const Element& h, const TwistContext& ctx, bool forward) {
    const HopfPresentation& H = *ctx.hopf();
    const SigmaPtr& sigma = ctx.sigma();
    if (forward) {
        // Q: h -> h3 u(h1) gbar(S(h2) (x) h4), input over the twisted basis
        Element x = sigma->to_original(h);
        Element r;
        for (const auto& [w, c] : x.terms())
            for (const auto& [l, cl] : H.iterated_coproduct_word(w, 3).terms()) {
                Scalar a = ctx.u().eval(Element(l[0]));
                if (a.is_zero()) continue;
                Scalar b = ctx.gamma_bar()->eval(H.antipode_word(l[1]), Element(l[3]));
                if (b.is_zero()) continue;
                r = r + Element(l[2]) * (c * cl * a * b);
            }
        return r;
    }
    // Q^{-1}: h -> h3 ubar(h2) gamma(S(h1) (x) h4), output over the twisted basis
    Element r;
    for (const auto& [w, c] : h.terms())
        for (const auto& [l, cl] : H.iterated_coproduct_word(w, 3).terms()) {
            Scalar a = ctx.u_bar().eval(Element(l[1]));
            if (a.is_zero()) continue;
            Scalar b = ctx.gamma()->eval(H.antipode_word(l[0]), Element(l[3]));
            if (b.is_zero()) continue;
            r = r + Element(l[2]) * (c * cl * a * b);
        }
    return sigma->to_deformed(r);
}

}  // namespace hopfgal
