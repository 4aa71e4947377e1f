#include "hopfgal/braided.hpp"

namespace hopfgal {

BraidedHopf BraidedHopf::plain(HopfPtr carrier, FormPtr rform) {
    BraidedHopf b;
    b.carrier_ = carrier;
    b.rform_ = rform;
    b.host_hopf_ = carrier;
    b.host_rform_ = rform;
    return b;
}

BraidedHopf BraidedHopf::twisted(const BraidedHopf& base, FormPtr gamma, FormPtr gamma_bar,
                                 HopfPtr twisted_host, FormPtr twisted_rform,
                                 std::function<Scalar(const Word&)> host_sigma) {
    if (base.twisted_) throw std::invalid_argument("BraidedHopf::twisted: base must be plain");
    BraidedHopf b = base;
    b.twisted_ = true;
    b.gamma_ = std::move(gamma);
    b.gamma_bar_ = std::move(gamma_bar);
    b.host_hopf_ = std::move(twisted_host);
    b.host_rform_ = std::move(twisted_rform);
    b.host_sigma_ = std::move(host_sigma);
    b.prod_memo_.clear();
    b.antipode_memo_.clear();
    return b;
}

FormPtr BraidedHopf::rform_on_carrier() const {
    if (!twisted_) return host_rform_;
    auto sig = host_sigma_;
    return std::make_shared<BilinearForm>(BilinearForm::scaled(
        carrier_, host_rform_, [sig](const Word& w) { return sig(w).inverse_unit(); }));
}

TensorElement BraidedHopf::ad_word(const Word& w) const {
    auto it = ad_memo_.find(w);
    if (it != ad_memo_.end()) return it->second;
    TensorElement r(2);
    for (const auto& [l, c] : carrier_->iterated_coproduct_word(w, 2).terms()) {
        Element tail = carrier_->mul(carrier_->antipode_word(l[0]), Element(l[2]));
        for (const auto& [tw, tc] : tail.terms()) r.add({l[1], tw}, c * tc);
    }
    ad_memo_.emplace(w, r);
    return r;
}

TensorElement BraidedHopf::ad(const Element& e) const {
    TensorElement r(2);
    for (const auto& [w, c] : e.terms()) r = r + ad_word(w) * c;
    return r;
}

TensorElement BraidedHopf::ad2(const Element& e) const {
    TensorElement r(3);
    for (const auto& [l, c] : ad(e).terms())
        for (const auto& [l0, c0] : ad_word(l[0]).terms()) r.add({l0[0], l0[1], l[1]}, c * c0);
    return r;
}

Element BraidedHopf::product_words(const Word& a, const Word& b) const {
    auto key = std::make_pair(a, b);
    auto it = prod_memo_.find(key);
    if (it != prod_memo_.end()) return it->second;
    Element r;
    if (!twisted_) {
        r = plain_product_words(a, b);
    } else {
        // h .u_g k = h(0) .u k(0) gbar(h(1) (x) k(1)) over the Ad legs
        for (const auto& [lh, ch] : ad_word(a).terms())
            for (const auto& [lk, ck] : ad_word(b).terms()) {
                Scalar v = gamma_bar_->eval_words(lh[1], lk[1]);
                if (v.is_zero()) continue;
                r = r + plain_product_words(lh[0], lk[0]) * (ch * ck * v);
            }
    }
    prod_memo_.emplace(std::move(key), r);
    return r;
}

Element BraidedHopf::plain_product_words(const Word& a, const Word& b) const {
    auto key = std::make_pair(a, b);
    auto it = plain_prod_memo_.find(key);
    if (it != plain_prod_memo_.end()) return it->second;
    // h .u k = h2 k2 R(S(h1) h3 (x) S(k1))
    Element r;
    for (const auto& [lh, ch] : carrier_->iterated_coproduct_word(a, 2).terms()) {
        Element harg = carrier_->mul(carrier_->antipode_word(lh[0]), Element(lh[2]));
        for (const auto& [lk, ck] : carrier_->coproduct_word(b).terms()) {
            Scalar v = rform_->eval(harg, carrier_->antipode_word(lk[0]));
            if (v.is_zero()) continue;
            r = r + carrier_->mul(Element(lh[1]), Element(lk[1])) * (ch * ck * v);
        }
    }
    plain_prod_memo_.emplace(std::move(key), r);
    return r;
}

Element BraidedHopf::product(const Element& a, const Element& b) const {
    Element r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) r = r + product_words(wa, wb) * (ca * cb);
    return r;
}

TensorElement BraidedHopf::coproduct(const Element& e) const {
    if (!twisted_) return carrier_->coproduct(e);
    // (cc-twist): c -> (c1)(0) (x) (c2)(0)  gamma((c1)(1) (x) (c2)(1))
    TensorElement r(2);
    for (const auto& [w, c] : e.terms())
        for (const auto& [l, cl] : carrier_->coproduct_word(w).terms())
            for (const auto& [a1, c1] : ad_word(l[0]).terms())
                for (const auto& [a2, c2] : ad_word(l[1]).terms()) {
                    Scalar v = gamma_->eval_words(a1[1], a2[1]);
                    if (v.is_zero()) continue;
                    r.add({a1[0], a2[0]}, c * cl * c1 * c2 * v);
                }
    return r;
}

Element BraidedHopf::antipode_word(const Word& w) const {
    auto it = antipode_memo_.find(w);
    if (it != antipode_memo_.end()) return it->second;
    // Sb(h) = S(h2) R(S^2(h3) S(h1) (x) h4); the twist keeps the same antipode
    Element r;
    for (const auto& [l, c] : carrier_->iterated_coproduct_word(w, 3).terms()) {
        Element arg = carrier_->mul(carrier_->antipode(carrier_->antipode_word(l[2])),
                                    carrier_->antipode_word(l[0]));
        Scalar v = rform_->eval(arg, Element(l[3]));
        if (v.is_zero()) continue;
        r = r + carrier_->antipode_word(l[1]) * (c * v);
    }
    antipode_memo_.emplace(w, r);
    return r;
}

Element BraidedHopf::antipode(const Element& e) const {
    Element r;
    for (const auto& [w, c] : e.terms()) r = r + antipode_word(w) * c;
    return r;
}

namespace {

// braiding on B (x) B with the adjoint coaction:  v (x) w -> w(0) (x) v(0) R(v(1) (x) w(1))
TensorElement psi_bb(const BraidedHopf& B, const Word& v, const Word& w, const BilinearForm& R) {
    TensorElement r(2);
    for (const auto& [lv, cv] : B.ad_word(v).terms())
        for (const auto& [lw, cw] : B.ad_word(w).terms()) {
            Scalar s = R.eval_words(lv[1], lw[1]);
            if (s.is_zero()) continue;
            r.add({lw[0], lv[0]}, cv * cw * s);
        }
    return r;
}

}  // namespace

Report check_braided(const BraidedHopf& B, int max_degree) {
    Report rep;
    const PresPtr& A = B.alg();
    FormPtr Rcb = B.rform_on_carrier();
    const BilinearForm& R = *Rcb;
    BilinearForm Rbar = invert_form(R, max_degree);
    auto basis = A->basis(max_degree);
    auto pair_str = [&](const Word& u, const Word& v) {
        return "(" + A->word_str(u) + ", " + A->word_str(v) + ")";
    };

    // product associativity and unit
    {
        bool ok = true;
        std::string witness;
        Element one = Element::unit();
        for (const Word& u : basis) {
            if (B.product(one, Element(u)) != Element(u) || B.product(Element(u), one) != Element(u)) {
                ok = false;
                witness = A->word_str(u);
                break;
            }
        }
        rep.check(ok, "braided_unit", "(hpr)", witness);
        ok = true;
        for (const Word& u : basis) {
            for (const Word& v : basis) {
                for (const Word& w : basis) {
                    if (A->degree(u) + A->degree(v) + A->degree(w) > max_degree) continue;
                    if (B.product(B.product(Element(u), Element(v)), Element(w)) !=
                        B.product(Element(u), B.product(Element(v), Element(w)))) {
                        ok = false;
                        witness = "(" + A->word_str(u) + ", " + A->word_str(v) + ", " + A->word_str(w) + ")";
                        break;
                    }
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        rep.check(ok, "braided_associativity", "(hpr)", witness);
    }

    // reconstruction of the straight product, plain case only
    if (!B.is_twisted()) {
        bool ok = true;
        std::string witness;
        for (const Word& h : basis) {
            for (const Word& k : basis) {
                if (A->degree(h) + A->degree(k) > max_degree) continue;
                Element rhs;
                for (const auto& [lh, ch] : B.carrier()->iterated_coproduct_word(h, 2).terms()) {
                    Element harg = B.carrier()->mul(B.carrier()->antipode_word(lh[0]), Element(lh[2]));
                    for (const auto& [lk, ck] : B.carrier()->coproduct_word(k).terms()) {
                        Scalar v = R.eval(harg, Element(lk[0]));
                        if (v.is_zero()) continue;
                        rhs = rhs + B.product_words(lh[1], lk[1]) * (ch * ck * v);
                    }
                }
                if (rhs != A->mul(Element(h), Element(k))) {
                    ok = false;
                    witness = pair_str(h, k);
                    break;
                }
            }
            if (!ok) break;
        }
        rep.check(ok, "product_reconstruction", "(hpr-inv)", witness);
    }

    // braided commutativity, three equivalent forms
    {
        bool c1 = true, c2 = true, c3 = true, equiv = true;
        std::string w1, w2, w3;
        BilinearForm Qf = BilinearForm::composite(B.carrier(), {{Rcb, true}, {Rcb, false}});
        for (const Word& h : basis) {
            for (const Word& k : basis) {
                if (A->degree(h) + A->degree(k) > max_degree) continue;
                Element prod = B.product_words(h, k);
                // (H-braid-comm): k(0) .u h2 R(k(1) (x) h1) = h1 .u k(0) Rbar(h2 (x) k(1))
                Element lhs, rhs;
                for (const auto& [lk, ck] : B.ad_word(k).terms())
                    for (const auto& [lh, ch] : B.carrier()->coproduct_word(h).terms()) {
                        Scalar a = R.eval_words(lk[1], lh[0]);
                        if (!a.is_zero()) lhs = lhs + B.product_words(lk[0], lh[1]) * (ck * ch * a);
                        Scalar b = Rbar.eval_words(lh[1], lk[1]);
                        if (!b.is_zero()) rhs = rhs + B.product_words(lh[0], lk[0]) * (ck * ch * b);
                    }
                bool e1 = lhs == rhs;
                // (H-braid-commQ): h .u k = k(0) .u h2 R(k(1) (x) h1) R(h3 (x) k(2))
                Element q;
                for (const auto& [lk, ck] : B.ad2(Element(k)).terms())
                    for (const auto& [lh, ch] : B.carrier()->iterated_coproduct_word(h, 2).terms()) {
                        Scalar a = R.eval_words(lk[1], lh[0]);
                        if (a.is_zero()) continue;
                        Scalar b = R.eval_words(lh[2], lk[2]);
                        if (b.is_zero()) continue;
                        q = q + B.product_words(lk[0], lh[1]) * (ck * ch * a * b);
                    }
                bool e2 = q == prod;
                // (H-braid-commQQ): h .u k = k(0) .u (h2)(0) R((h2)(1) (x) k(2)) Q(h1 (x) k(1))
                Element qq;
                for (const auto& [lk, ck] : B.ad2(Element(k)).terms())
                    for (const auto& [lh, ch] : B.carrier()->coproduct_word(h).terms())
                        for (const auto& [lh2, ch2] : B.ad_word(lh[1]).terms()) {
                            Scalar a = Qf.eval_words(lh[0], lk[1]);
                            if (a.is_zero()) continue;
                            Scalar b = R.eval_words(lh2[1], lk[2]);
                            if (b.is_zero()) continue;
                            qq = qq + B.product_words(lk[0], lh2[0]) * (ck * ch * ch2 * a * b);
                        }
                bool e3 = qq == prod;
                if (c1 && !e1) { c1 = false; w1 = pair_str(h, k); }
                if (c2 && !e2) { c2 = false; w2 = pair_str(h, k); }
                if (c3 && !e3) { c3 = false; w3 = pair_str(h, k); }
                if (e1 != e2 || e2 != e3) {
                    equiv = false;
                }
            }
        }
        rep.check(c1, "braided_commutative", "(H-braid-comm)", w1);
        rep.check(c2, "braided_commutative_Q", "(H-braid-commQ)", w2);
        rep.check(c3, "braided_commutative_QQ", "(H-braid-commQQ)", w3);
        rep.check(equiv, "three_form_equivalence", "(H-braid-comm)<=>(H-braid-commQ)<=>(H-braid-commQQ)",
                  "forms disagree on some basis pair");
    }

    // coproduct is an algebra map into the braided tensor square
    {
        bool ok = true;
        std::string witness;
        for (const Word& h : basis) {
            for (const Word& k : basis) {
                if (A->degree(h) + A->degree(k) > max_degree) continue;
                TensorElement lhs = B.coproduct(B.product_words(h, k));
                TensorElement dh = B.coproduct(Element(h));
                TensorElement dk = B.coproduct(Element(k));
                TensorElement rhs(2);
                for (const auto& [lh, ch] : dh.terms())
                    for (const auto& [lk, ck] : dk.terms()) {
                        // (x1 (x) y1) dot (x2 (x) y2) = x1 x2(0) (x) y1(0) y2 R(y1(1) (x) x2(1))
                        for (const auto& [ax, cx] : B.ad_word(lk[0]).terms())
                            for (const auto& [ay, cy] : B.ad_word(lh[1]).terms()) {
                                Scalar v = R.eval_words(ay[1], ax[1]);
                                if (v.is_zero()) continue;
                                Element p1 = B.product_words(lh[0], ax[0]);
                                Element p2 = B.product_words(ay[0], lk[1]);
                                for (const auto& [w1, c1] : p1.terms())
                                    for (const auto& [w2, c2] : p2.terms())
                                        rhs.add({w1, w2}, ch * ck * cx * cy * v * c1 * c2);
                            }
                    }
                if (lhs != rhs) {
                    ok = false;
                    witness = pair_str(h, k);
                    break;
                }
            }
            if (!ok) break;
        }
        rep.check(ok, "coproduct_braided_algebra_map", "(cop-braid)", witness);
    }

    // braided antipode axiom
    {
        bool ok = true;
        std::string witness;
        for (const Word& h : basis) {
            Element l, r;
            for (const auto& [legs, c] : B.coproduct(Element(h)).terms()) {
                l = l + B.product(Element(legs[0]), B.antipode_word(legs[1])) * c;
                r = r + B.product(B.antipode_word(legs[0]), Element(legs[1])) * c;
            }
            Element e = Element::unit(B.carrier()->counit_word(h));
            if (l != e || r != e) {
                ok = false;
                witness = A->word_str(h);
                break;
            }
        }
        rep.check(ok, "braided_antipode_axiom", "(bantipode)", witness);
    }

    // braided antipode is a braided anti-algebra and anti-coalgebra map
    {
        bool oka = true, okc = true;
        std::string wa, wc;
        for (const Word& h : basis) {
            for (const Word& k : basis) {
                if (A->degree(h) + A->degree(k) > max_degree) continue;
                if (oka) {
                    Element lhs = B.antipode(B.product_words(h, k));
                    Element rhs;
                    for (const auto& [l, c] : psi_bb(B, h, k, R).terms())
                        rhs = rhs + B.product(B.antipode_word(l[0]), B.antipode_word(l[1])) * c;
                    if (lhs != rhs) {
                        oka = false;
                        wa = pair_str(h, k);
                    }
                }
            }
            if (okc) {
                TensorElement lhs = B.coproduct(B.antipode_word(h));
                TensorElement rhs(2);
                for (const auto& [l, c] : B.coproduct(Element(h)).terms())
                    for (const auto& [pl, pc] : psi_bb(B, l[0], l[1], R).terms()) {
                        Element s1 = B.antipode_word(pl[0]);
                        Element s2 = B.antipode_word(pl[1]);
                        for (const auto& [w1, c1] : s1.terms())
                            for (const auto& [w2, c2] : s2.terms()) rhs.add({w1, w2}, c * pc * c1 * c2);
                    }
                if (lhs != rhs) {
                    okc = false;
                    wc = A->word_str(h);
                }
            }
        }
        rep.check(oka, "antipode_braided_antimultiplicative", "(SmmRSS)", wa);
        rep.check(okc, "antipode_braided_anticomultiplicative", "(SmmRSS)", wc);
    }

    // cotriangular host: the braided Hopf algebra is quasi-commutative
    {
        Report ct = check_form(R, FormCheckMode::Cotriangular, std::min(max_degree, 2));
        if (ct.all_pass()) {
            bool ok = true;
            std::string witness;
            for (const Word& h : basis) {
                for (const Word& k : basis) {
                    if (A->degree(h) + A->degree(k) > max_degree) continue;
                    Element lhs = B.product_words(h, k);
                    Element rhs;
                    for (const auto& [lh, ch] : B.ad_word(h).terms())
                        for (const auto& [lk, ck] : B.ad_word(k).terms()) {
                            Scalar v = Rbar.eval_words(lk[1], lh[1]);
                            if (v.is_zero()) continue;
                            rhs = rhs + B.product_words(lk[0], lh[0]) * (ch * ck * v);
                        }
                    if (lhs != rhs) {
                        ok = false;
                        witness = pair_str(h, k);
                        break;
                    }
                }
                if (!ok) break;
            }
            rep.check(ok, "cotriangular_quasi_commutative", "(qcomm1)", witness);
        } else {
            rep.info("cotriangular_quasi_commutative", "skipped: R-form is not cotriangular", "(qcomm1)");
        }
    }
    return rep;
}

}  // namespace hopfgal
