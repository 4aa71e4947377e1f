#include "doctest.h"
#include "hopfgal/catalog.hpp"

using namespace hopfgal;
using namespace hopfgal::catalog;

TEST_CASE("adjoint coaction: group-likes are Ad-trivial, Z2 is cocommutative") {
    auto kz = build_example("kz_rq");
    BraidedHopf B = BraidedHopf::plain(kz.H, kz.forms.at("R_q"));
    GenId g = kz.H->alg()->gen_id("g");
    TensorElement ad = B.ad_word(Word::single(g));
    TensorElement expect(2);
    expect.add({Word::single(g), Word::one()}, Scalar(1));
    CHECK(ad == expect);
    CHECK(B.ad(Element::unit()) == TensorElement::outer(Element::unit(), Element::unit()));

    auto z2 = build_example("zmod2_point");
    BraidedHopf Bz = BraidedHopf::plain(z2.H, z2.forms.at("R"));
    GenId pe = z2.H->alg()->gen_id("pe");
    TensorElement adp = Bz.ad_word(Word::single(pe));
    TensorElement expp(2);
    expp.add({Word::single(pe), Word::one()}, Scalar(1));
    CHECK(adp == expp);
}

TEST_CASE("braided product: trivial R gives the plain product; K[Z] kills the R factor") {
    auto z2 = build_example("zmod2_point");
    BraidedHopf Bz = BraidedHopf::plain(z2.H, z2.forms.at("R"));
    const auto& P = z2.H->alg();
    for (const Word& u : P->basis(2))
        for (const Word& v : P->basis(2))
            CHECK(Bz.product_words(u, v) == P->mul(Element(u), Element(v)));

    auto kz = build_example("kz_rq");
    BraidedHopf Bk = BraidedHopf::plain(kz.H, kz.forms.at("R_q"));
    GenId g = kz.H->alg()->gen_id("g");
    Word g2(std::vector<GenId>{g, g});
    Word g3(std::vector<GenId>{g, g, g});
    CHECK(Bk.product_words(g2, g3) ==
          Element(Word(std::vector<GenId>{g, g, g, g, g})));
}

TEST_CASE("braided product of GL_q(2) generators against a hand-rolled Sweedler oracle") {
    auto b = build_example("quantum_plane_glq2");
    BraidedHopf B = BraidedHopf::plain(b.H, b.forms.at("R"));
    const auto& P = b.H->alg();
    const auto& R = *b.forms.at("R");
    GenId gen[2][2] = {{P->gen_id("a"), P->gen_id("b")}, {P->gen_id("c"), P->gen_id("d")}};
    // oracle: h .u k = h2 k2 R(S(h1) h3 (x) S(k1)) expanded with the explicit
    // matrix legs Delta^2(u_ij) = sum u_ik (x) u_kl (x) u_lj
    auto oracle = [&](int i, int j, int k, int l) {
        Element acc;
        for (int m = 0; m < 2; ++m)
            for (int n = 0; n < 2; ++n)
                for (int r = 0; r < 2; ++r) {
                    Element left = P->mul(b.H->antipode_word(Word::single(gen[i][m])),
                                          Element(Word::single(gen[n][j])));
                    Scalar v = R.eval(left, b.H->antipode_word(Word::single(gen[k][r])));
                    if (v.is_zero()) continue;
                    acc = acc + P->mul(Element(Word::single(gen[m][n])),
                                       Element(Word::single(gen[r][l]))) * v;
                }
        return acc;
    };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    CHECK(B.product_words(Word::single(gen[i][j]), Word::single(gen[k][l])) ==
                          oracle(i, j, k, l));
}

TEST_CASE("braided antipode: trivial R reduces to S; group-likes invert") {
    auto z2 = build_example("zmod2_point");
    BraidedHopf Bz = BraidedHopf::plain(z2.H, z2.forms.at("R"));
    for (const Word& w : z2.H->alg()->basis(2))
        CHECK(Bz.antipode_word(w) == z2.H->antipode_word(w));
    auto kz = build_example("kz_rq");
    BraidedHopf Bk = BraidedHopf::plain(kz.H, kz.forms.at("R_q"));
    GenId g = kz.H->alg()->gen_id("g"), gi = kz.H->alg()->gen_id("gi");
    CHECK(Bk.antipode_word(Word::single(g)) == Element(Word::single(gi)));
}

TEST_CASE("braided suite on K[Z] with R_q and on the trivial Z2 example") {
    auto kz = build_example("kz_rq");
    BraidedHopf Bk = BraidedHopf::plain(kz.H, kz.forms.at("R_q"));
    Report rk = check_braided(Bk, 3);
    CHECK_MESSAGE(rk.all_pass(), rk.text());
    auto z2 = build_example("zmod2_point");
    BraidedHopf Bz = BraidedHopf::plain(z2.H, z2.forms.at("R"));
    Report rz = check_braided(Bz, 3);
    CHECK_MESSAGE(rz.all_pass(), rz.text());
}

TEST_CASE("braided suite on GL_q(2): braided commutative, not quasi-commutative") {
    auto b = build_example("quantum_plane_glq2");
    BraidedHopf B = BraidedHopf::plain(b.H, b.forms.at("R"));
    Report r = check_braided(B, 2);
    // everything except the cotriangular row must pass; (qcomm1) is skipped
    // because R is not cotriangular
    bool qcomm_skipped = false;
    for (const auto& row : r.rows) {
        if (row.id == "cotriangular_quasi_commutative") {
            qcomm_skipped = row.verdict == ReportRow::Verdict::Info;
            continue;
        }
        CHECK_MESSAGE(row.verdict == ReportRow::Verdict::Pass, row.id, ": ", row.detail);
    }
    CHECK(qcomm_skipped);
    // (qcomm1) genuinely fails for H-underline of GL_q(2): check directly
    BilinearForm Rbar = invert_form(*b.forms.at("R"), 2);
    const auto& P = b.H->alg();
    GenId a = P->gen_id("a"), bb = P->gen_id("b");
    Element lhs = B.product_words(Word::single(a), Word::single(bb));
    Element rhs;
    for (const auto& [lh, ch] : B.ad_word(Word::single(bb)).terms())
        for (const auto& [lk, ck] : B.ad_word(Word::single(a)).terms()) {
            Scalar v = Rbar.eval_words(lh[1], lk[1]);
            if (v.is_zero()) continue;
            rhs = rhs + B.product_words(lh[0], lk[0]) * (ch * ck * v);
        }
    CHECK(lhs != rhs);
}

TEST_CASE("comodule axioms and coaction extension") {
    auto b = build_example("quantum_plane_glq2");
    Report r = check_comodule(*b.A, ComoduleCheckMode::Axioms, 3);
    CHECK_MESSAGE(r.all_pass(), r.text());
    const auto& A = *b.A;
    const auto& P = A.alg();
    GenId x1 = P->gen_id("x1"), x2 = P->gen_id("x2");
    // delta(1) = 1 (x) 1
    CHECK(A.coact(Element::unit()) == TensorElement::outer(Element::unit(), Element::unit()));
    // delta(x1 x2) is the multiplicative extension, normal-formed
    TensorElement d12 = A.coact_word(Word(std::vector<GenId>{x1, x2}));
    TensorElement expect = tensor_mul(A.coact_word(Word::single(x1)), A.coact_word(Word::single(x2)),
                                      {P, b.H->alg()});
    CHECK(d12 == expect);
}

TEST_CASE("coinvariants: regular coactions over a point, graded degree-0 part") {
    auto kz = build_example("kz_rq");
    auto ck = coinvariants(*kz.A, 3);
    REQUIRE(ck.size() == 1);
    CHECK(ck[0] == Element::unit());
    auto z2 = build_example("zmod2_point");
    auto cz = coinvariants(*z2.A, 3);
    REQUIRE(cz.size() == 1);
    CHECK(cz[0] == Element::unit());
    auto gr = build_example("graded_strong");
    auto cg = coinvariants(*gr.A, 3);
    // 1, g^2, g^-2
    CHECK(cg.size() == 3);
    for (const auto& e : cg) {
        REQUIRE(e.terms().size() == 1);
        CHECK(e.terms().begin()->first.size() % 2 == 0);
    }
}

TEST_CASE("quantum plane is quasi-commutative for R and not for the rescaled family") {
    auto b = build_example("quantum_plane_glq2");
    Report good = check_comodule(*b.A, ComoduleCheckMode::QuasiCommutative, 3, b.forms.at("R").get());
    CHECK_MESSAGE(good.all_pass(), good.text());
    Report bad = check_comodule(*b.A, ComoduleCheckMode::QuasiCommutative, 2, b.forms.at("R_lambda").get());
    CHECK_FALSE(bad.all_pass());
}

TEST_CASE("the regular comodule (H, ., Delta) is qc iff R is trivial") {
    auto kz = build_example("kz_rq");
    Report bad = check_comodule(*kz.A, ComoduleCheckMode::QuasiCommutative, 2, kz.forms.at("R_q").get());
    CHECK_FALSE(bad.all_pass());
    Report good = check_comodule(*kz.A, ComoduleCheckMode::QuasiCommutative, 2, kz.forms.at("R").get());
    CHECK_MESSAGE(good.all_pass(), good.text());
}

TEST_CASE("braided tensor product: associativity and trivial-R componentwise product") {
    auto b = build_example("quantum_plane_glq2");
    FormPtr R = b.forms.at("R");
    BraidedTensorAlgebra AA = braided_tensor_product(*b.A, *b.A, R);
    const auto& P = b.A->alg();
    auto basis = P->basis(1);
    // associator coherence on elementary triples via the two bracketings:
    // ((x y) z and x (y z) computed with the same rank-2 carrier
    for (const Word& u : basis)
        for (const Word& v : basis)
            for (const Word& w : basis) {
                TensorElement x = AA.embed(Element(u), Element(v));
                TensorElement y = AA.embed(Element(w), Element(Word::one()));
                TensorElement z = AA.embed(Element(Word::one()), Element(w));
                CHECK(AA.mul(AA.mul(x, y), z) == AA.mul(x, AA.mul(y, z)));
            }
    // trivial R: componentwise
    auto kz = build_example("kz_rq");
    BraidedTensorAlgebra KK = braided_tensor_product(*kz.A, *kz.A, kz.forms.at("R"));
    GenId g = kz.H->alg()->gen_id("g");
    TensorElement p = KK.mul(KK.embed(Element(Word::single(g)), Element::unit()),
                             KK.embed(Element::unit(), Element(Word::single(g))));
    CHECK(p == KK.embed(Element(Word::single(g)), Element(Word::single(g))));
}

TEST_CASE("delta-underline is an algebra map into A bot H-underline (prop:deltaund)") {
    auto kz = build_example("kz_rq");
    BraidedHopf Hu = BraidedHopf::plain(kz.H, kz.forms.at("R_q"));
    BraidedTensorAlgebra AH(carrier(*kz.A), carrier(Hu), kz.forms.at("R_q"));
    const auto& P = kz.A->alg();
    for (const Word& u : P->basis(2))
        for (const Word& v : P->basis(2)) {
            if (P->degree(u) + P->degree(v) > 3) continue;
            TensorElement lhs = AH.mul(kz.A->coact_word(u), kz.A->coact_word(v));
            TensorElement rhs = kz.A->coact(P->mul(Element(u), Element(v)));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("balanced tensor over a nontrivial central base reduces representatives") {
    auto gr = build_example("graded_strong");
    const Extension& E = *gr.ext;
    const auto& P = gr.A->alg();
    GenId g = P->gen_id("g"), gi = P->gen_id("gi");
    // g^2 (x) gi  ==  1 (x) g  modulo the ideal (g^2 is coinvariant)
    TensorElement x = TensorElement::outer(Element(Word(std::vector<GenId>{g, g})),
                                           Element(Word::single(gi)));
    TensorElement y = TensorElement::outer(Element::unit(),
                                           P->mul(Element(Word(std::vector<GenId>{g, g})),
                                                  Element(Word::single(gi))));
    CHECK(E.balanced().equal_mod_ideal(x, y));
    CHECK_FALSE(E.balanced().equal_mod_ideal(
        x, TensorElement::outer(Element::unit(), Element(Word::single(gi)))));
}

TEST_CASE("composed coactions on A (x) H reproduce the tensor coaction") {
    // carriers: basis of A (x) H up to degree 1 for K[Z]; delta1 = (m3),
    // delta2 = (m1); their composition is (AHcoact)
    auto kz = build_example("kz_rq");
    const auto& H = kz.H;
    const auto& P = H->alg();
    auto abasis = P->basis(1);
    std::vector<std::pair<Word, Word>> pairs;
    for (const Word& u : abasis)
        for (const Word& v : abasis) pairs.push_back({u, v});
    auto index_of = [&](const Word& u, const Word& v) {
        for (size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i].first == u && pairs[i].second == v) return (int)i;
        return -1;
    };
    ModuleCoaction m3{H, (int)pairs.size(), {}};
    m3.mat.resize(pairs.size());
    ModuleCoaction m1 = m3;
    for (size_t i = 0; i < pairs.size(); ++i) {
        const auto& [u, h] = pairs[i];
        // (m3): a (x) h -> a (x) h1 (x) h2
        for (const auto& [l, c] : H->coproduct_word(h).terms()) {
            int j = index_of(u, l[0]);
            REQUIRE(j >= 0);
            m3.mat[i][j] = m3.mat[i].count(j) ? m3.mat[i][j] + Element(l[1]) * c : Element(l[1]) * c;
        }
        // (m1): a (x) h -> a0 (x) h2 (x) a1 S(h1)
        for (const auto& [la, ca] : kz.A->coact_word(u).terms())
            for (const auto& [lh, ch] : H->coproduct_word(h).terms()) {
                int j = index_of(la[0], lh[1]);
                REQUIRE(j >= 0);
                Element v = H->mul(Element(la[1]), H->antipode_word(lh[0])) * (ca * ch);
                m1.mat[i][j] = m1.mat[i].count(j) ? m1.mat[i][j] + v : v;
            }
    }
    std::string w;
    CHECK(m1.comodule_axioms(&w));
    CHECK(m3.comodule_axioms(&w));
    ModuleCoaction composed = compose_coactions(m3, m1, true);
    // expected: (AHcoact): a (x) h -> a0 (x) h2 (x) a1 S(h1) h3
    for (size_t i = 0; i < pairs.size(); ++i) {
        const auto& [u, h] = pairs[i];
        std::map<int, Element> expect;
        for (const auto& [la, ca] : kz.A->coact_word(u).terms())
            for (const auto& [lh, ch] : H->iterated_coproduct_word(h, 2).terms()) {
                int j = index_of(la[0], lh[1]);
                REQUIRE(j >= 0);
                Element v = H->mul(H->mul(Element(la[1]), H->antipode_word(lh[0])), Element(lh[2])) *
                            (ca * ch);
                auto it = expect.find(j);
                if (it == expect.end())
                    expect.emplace(j, v);
                else
                    it->second = it->second + v;
            }
        for (auto& [j, e] : expect)
            if (e.is_zero()) expect.erase(j);
        std::map<int, Element> got = composed.mat[i];
        for (auto it = got.begin(); it != got.end();)
            it = it->second.is_zero() ? got.erase(it) : std::next(it);
        CHECK(got == expect);
    }
    // incompatible coactions are rejected with a witness
    ModuleCoaction broken = m1;
    if (!broken.mat.empty() && !broken.mat[0].empty()) {
        broken.mat[0].begin()->second = broken.mat[0].begin()->second * Scalar(2);
        bool threw = false;
        try {
            compose_coactions(m3, broken, true);
        } catch (const IncompatibleCoactions&) {
            threw = true;
        } catch (const std::exception&) {
            threw = true;
        }
        CHECK(threw);
    }
}
