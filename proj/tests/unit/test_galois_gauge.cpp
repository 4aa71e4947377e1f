#include "doctest.h"
#include "hopfgal/catalog.hpp"

#include <set>

using namespace hopfgal;
using namespace hopfgal::catalog;

TEST_CASE("canonical map values") {
    auto kz = build_example("kz_rq");
    const Extension& E = *kz.ext;
    const auto& P = kz.A->alg();
    GenId g = P->gen_id("g"), gi = P->gen_id("gi");
    // chi(a (x) 1) = a (x) 1
    TensorElement x = TensorElement::outer(Element(Word::single(g)), Element::unit());
    TensorElement expect(2);
    expect.add({Word::single(g), Word::one()}, Scalar(1));
    CHECK(canonical_map(x, E) == expect);
    // chi(g^a (x) g^b) = g^{a+b} (x) g^b with a = -1, b = 2
    TensorElement y = TensorElement::outer(Element(Word::single(gi)),
                                           Element(Word(std::vector<GenId>{g, g})));
    TensorElement expect2(2);
    expect2.add({Word::single(g), Word(std::vector<GenId>{g, g})}, Scalar(1));
    CHECK(canonical_map(y, E) == expect2);

    auto z2 = build_example("zmod2_point");
    const auto& Pz = z2.A->alg();
    GenId pe = Pz->gen_id("pe");
    Element pu = Element::unit() - Element(Word::single(pe));
    // chi(pe (x) pu) = pe pu(0) (x) pu(1) = pe x pu rewritten over the basis
    TensorElement v = TensorElement::outer(Element(Word::single(pe)), pu);
    TensorElement img = canonical_map(v, *z2.ext);
    // oracle via function tables: chi(pe x pu)(s,t) = pe(s) pu(st):
    // = delta_{s,e} delta_{st,u} = pe (x) pu
    TensorElement expect3(2);
    for (const auto& [w1, c1] : Element(Word::single(pe)).terms())
        for (const auto& [w2, c2] : pu.terms()) expect3.add({w1, w2}, c1 * c2);
    CHECK(img == expect3);
}

TEST_CASE("translation map: cleft formula and chi o tau = 1 (x) id") {
    auto kz = build_example("kz_rq");
    const Extension& E = *kz.ext;
    const auto& P = kz.A->alg();
    GenId g = P->gen_id("g"), gi = P->gen_id("gi");
    Word g2(std::vector<GenId>{g, g});
    TensorElement t = translation_map(Element(g2), E);
    TensorElement expect(2);
    expect.add({Word(std::vector<GenId>{gi, gi}), g2}, Scalar(1));
    CHECK(t == expect);
    CHECK(translation_map(Element::unit(), E) ==
          TensorElement::outer(Element::unit(), Element::unit()));
    for (const Word& h : kz.H->alg()->basis(3)) {
        TensorElement target(2);
        target.add({Word::one(), h}, Scalar(1));
        CHECK(canonical_map(translation_map(Element(h), E), E) == target);
    }
}

TEST_CASE("galois suite passes on kz_rq, zmod2_point and graded_strong") {
    for (const char* name : {"kz_rq", "zmod2_point", "graded_strong"}) {
        auto b = build_example(name);
        Report r = check_galois_suite(*b.ext, b.galois_degree);
        CHECK_MESSAGE(r.all_pass(), name, ":\n", r.text());
    }
}

TEST_CASE("corrupted coaction: bijectivity fails with a rank gap") {
    auto kz = build_example("kz_rq");
    // drop the coaction of gi to the trivial one: delta(gi) = gi (x) 1
    const auto& P = kz.A->alg();
    GenId g = P->gen_id("g"), gi = P->gen_id("gi");
    std::vector<TensorElement> co;
    {
        TensorElement t1(2);
        t1.add({Word::single(g), Word::single(g)}, Scalar(1));
        co.push_back(t1);
        TensorElement t2(2);
        t2.add({Word::single(gi), Word::one()}, Scalar(1));
        co.push_back(t2);
    }
    // the corrupted coaction is not even a comodule map; build the raw
    // extension pieces and check the rank directly
    ComoduleAlgebra bad(P, kz.H, co);
    Extension E = Extension::make(bad, kz.forms.at("R"), 2);
    Report r = check_galois_suite(E, 2);
    bool inj_failed = false;
    for (const auto& row : r.rows)
        if (row.id == "canonical_injective" && row.verdict == ReportRow::Verdict::Fail)
            inj_failed = true;
    CHECK_MESSAGE(inj_failed, r.text());
}

TEST_CASE("twisted extension of the torus passes the galois suite") {
    auto b = build_example("torus_theta(2)");
    TwistContext ctx = TwistContext::make(b.H, b.gamma, b.gamma_degree);
    Extension Eg = twist_extension(*b.ext, ctx);
    Report r = check_galois_suite(Eg, 2);
    CHECK_MESSAGE(r.all_pass(), r.text());
}

TEST_CASE("twist diagram commutes for kz_rq and torus_theta(2)") {
    for (const char* name : {"kz_rq", "torus_theta(2)"}) {
        auto b = build_example(name);
        TwistContext ctx = TwistContext::make(b.H, b.gamma, b.gamma_degree);
        Report r = check_twist_diagram(*b.ext, ctx, 2);
        CHECK_MESSAGE(r.all_pass(), name, ":\n", r.text());
    }
    // trivial cocycle: diagram trivially commutes
    auto z2 = build_example("zmod2_point");
    TwistContext ctx = TwistContext::make(z2.H, z2.gamma, 2);
    Report r = check_twist_diagram(*z2.ext, ctx, 2);
    CHECK_MESSAGE(r.all_pass(), r.text());
}

TEST_CASE("zmod2 gauge group: exactly identity and swap") {
    auto b = build_example("zmod2_point");
    const Extension& E = *b.ext;
    GaugeSolution sol = solve_gauge(E, 1);
    REQUIRE(sol.closed_form);
    REQUIRE(sol.solutions.size() == 2);
    for (const auto& f : sol.solutions) {
        Report r = verify_gauge(f, E, 3);
        CHECK_MESSAGE(r.all_pass(), r.text());
    }
    // through theta: identity and swap matrices on the projection basis
    const auto& P = b.A->alg();
    GenId pe = P->gen_id("pe");
    std::vector<Element> images;
    for (const auto& f : sol.solutions) images.push_back(theta(f, E).gen_images[pe]);
    Element id_img(Word::single(pe));
    Element swap_img = Element::unit() - Element(Word::single(pe));  // pu
    bool has_id = false, has_swap = false;
    for (const auto& im : images) {
        if (im == id_img) has_id = true;
        if (im == swap_img) has_swap = true;
    }
    CHECK(has_id);
    CHECK(has_swap);
    // group law: swap * swap = unit
    const GaugeElement* swap = nullptr;
    for (const auto& f : sol.solutions)
        if (theta(f, E).gen_images[pe] == swap_img) swap = &f;
    REQUIRE(swap);
    GaugeElement sq = gauge_convolve(*swap, *swap, E);
    CHECK(sq == gauge_unit(E));
    // vertical side: swap o swap = id
    VerticalAutomorphism F = theta(*swap, E);
    CHECK(vertical_compose(F, F, E) == VerticalAutomorphism::identity(P));
}

TEST_CASE("zmod2 linear contrast family: 1-parameter, excluded locus 2a = 1") {
    auto b = build_example("zmod2_point");
    LinearGaugeFamily fam = linear_gauge_family(*b.ext, 3);
    CHECK(fam.dimension == 1);
    CHECK(fam.parameter == "a");
    Scalar expect = Scalar(2) * Scalar::parameter("a") - Scalar(1);
    CHECK((fam.determinant == expect || fam.determinant == -expect));
}

TEST_CASE("torus gauge family and theta round trips") {
    auto b = build_example("torus_theta(2)");
    const Extension& E = *b.ext;
    GaugeSolution sol = solve_gauge(E, 1);
    REQUIRE(sol.closed_form);
    REQUIRE(sol.solutions.size() == 1);
    CHECK(sol.family_params.size() == 2);
    const GaugeElement& f = sol.solutions[0];
    Report r = verify_gauge(f, E, 2);
    CHECK_MESSAGE(r.all_pass(), r.text());
    // F(t_j) = lam_j t_j
    VerticalAutomorphism F = theta(f, E);
    const auto& P = b.A->alg();
    GenId t1 = P->gen_id("t1");
    CHECK(F.gen_images[t1] == Element(Word::single(t1), Scalar::parameter("lam1")));
    Report rv = verify_vertical(F, E, 2);
    CHECK_MESSAGE(rv.all_pass(), rv.text());
    // theta round trips
    GaugeElement f2 = theta_inverse(F, E);
    CHECK(f2 == f);
    VerticalAutomorphism F2 = theta(f2, E);
    CHECK(F2 == F);
    // theta maps convolution to composition
    GaugeElement ff = gauge_convolve(f, f, E);
    CHECK(theta(ff, E) == vertical_compose(F, F, E));
    // vertical inverse via (inv-F): t_j -> lam_j^{-1} t_j, and F F^{-1} = id
    VerticalAutomorphism Fi = vertical_invert(F, E);
    CHECK(Fi.gen_images[t1] == Element(Word::single(t1), Scalar::parameter("lam1", -1)));
    CHECK(vertical_compose(F, Fi, E) == VerticalAutomorphism::identity(P));
    CHECK(vertical_compose(Fi, F, E) == VerticalAutomorphism::identity(P));
    // gauge convolution inverse: f o S-underline sends t_j to lam_j^{-1}
    GaugeElement fi = gauge_invert(f, E);
    CHECK(gauge_convolve(f, fi, E) == gauge_unit(E));
}

TEST_CASE("gauge transport to the twisted torus is a group isomorphism onto the family") {
    auto b = build_example("torus_theta(2)");
    const Extension& E = *b.ext;
    TwistContext ctx = TwistContext::make(b.H, b.gamma, b.gamma_degree);
    Extension Eg = twist_extension(E, ctx);
    GaugeSolution sol = solve_gauge(E, 1);
    GaugeSolution solg = solve_gauge(Eg, 1);
    REQUIRE(sol.solutions.size() == 1);
    REQUIRE(solg.solutions.size() == 1);
    // the twisted family has the same unit-parameter shape
    CHECK(solg.family_params == sol.family_params);
    GaugeElement tf = transport_twist(sol.solutions[0], E, Eg, ctx);
    Report r = verify_gauge(tf, Eg, 2);
    CHECK_MESSAGE(r.all_pass(), r.text());
    // transport hits exactly the twisted family (group-likes: Q = id)
    CHECK(tf == solg.solutions[0]);
    // homomorphism property on the family: transport(f * f) = transport(f) * transport(f)
    GaugeElement lhs = transport_twist(gauge_convolve(sol.solutions[0], sol.solutions[0], E), E, Eg, ctx);
    GaugeElement rhs = gauge_convolve(tf, tf, Eg);
    CHECK(lhs == rhs);
    // the commuting square theta_{A_gamma} o Gamma_Q = Gamma o theta_A
    VerticalAutomorphism left = theta(tf, Eg);
    VerticalAutomorphism right = transport_twist(theta(sol.solutions[0], E), E, Eg, ctx);
    CHECK(left == right);
}

TEST_CASE("graded example: two vertical automorphisms g -> +-g") {
    auto b = build_example("graded_strong");
    const Extension& E = *b.ext;
    GaugeSolution sol = solve_gauge(E, 1);
    REQUIRE(sol.closed_form);
    CHECK(sol.solutions.size() == 2);
    for (const auto& f : sol.solutions) {
        Report r = verify_gauge(f, E, 2);
        CHECK_MESSAGE(r.all_pass(), r.text());
        VerticalAutomorphism F = theta(f, E);
        Report rv = verify_vertical(F, E, 2);
        CHECK_MESSAGE(rv.all_pass(), rv.text());
    }
}

TEST_CASE("SO(4) gauge: constraint system plus verified character candidates") {
    auto b = build_example("so2n_twisted(2)");
    const Extension& E = *b.ext;
    GaugeSolution sol = solve_gauge(E, 1);
    CHECK_FALSE(sol.closed_form);
    CHECK(sol.constraints.unknowns.size() == 16);
    CHECK(!sol.constraints.equations.empty());
    // identity matrix: alpha(M_IJ) = delta_IJ
    std::map<ParamId, Scalar> identity_assign;
    std::map<GenId, Scalar> alpha;
    const auto& HP = b.H->alg();
    for (GenId g = 0; g < HP->gen_count(); ++g) {
        std::string pname = "x_" + HP->gen(g).name;
        std::string nm = HP->gen(g).name;
        bool diag = nm == "a11" || nm == "a22" || nm == "as11" || nm == "as22";
        identity_assign[param_id(pname)] = diag ? Scalar(1) : Scalar();
        alpha[g] = diag ? Scalar(1) : Scalar();
    }
    CHECK(sol.constraints.satisfied_by(identity_assign));
    GaugeElement f = gauge_from_character(alpha, E);
    // identity character gives the unit gauge element
    CHECK(f == gauge_unit(E));
    // a maximal-torus character alpha(M) = diag(m1, m2, m1^-1, m2^-1)
    std::map<ParamId, Scalar> torus_assign;
    std::map<GenId, Scalar> alpha_t;
    for (GenId g = 0; g < HP->gen_count(); ++g) {
        std::string nm = HP->gen(g).name;
        Scalar v;
        if (nm == "a11") v = Scalar::parameter("m1");
        else if (nm == "a22") v = Scalar::parameter("m2");
        else if (nm == "as11") v = Scalar::parameter("m1", -1);
        else if (nm == "as22") v = Scalar::parameter("m2", -1);
        torus_assign[param_id("x_" + nm)] = v;
        alpha_t[g] = v;
    }
    CHECK(sol.constraints.satisfied_by(torus_assign));
    GaugeElement ft = gauge_from_character(alpha_t, E);
    Report r = verify_gauge(ft, E, 1);
    CHECK_MESSAGE(r.all_pass(), r.text());
    // transport to the twisted extension stays a gauge element; star
    // compatibility only survives up to unit phases, which is reported
    TwistContext ctx = TwistContext::make(b.H, b.gamma, b.gamma_degree);
    Extension Eg = twist_extension(E, ctx);
    GaugeElement tft = transport_twist(ft, E, Eg, ctx);
    Report rg = verify_gauge(tft, Eg, 1, false);
    CHECK_MESSAGE(rg.all_pass(), rg.text());
}

TEST_CASE("tensor extension of two zmod2 bundles: gauge group of order 4 splits") {
    auto b = build_example("zmod2_point");
    TensorExtension T = tensor_extension(*b.ext, *b.ext);
    Report r = check_galois_suite(T.E, 2);
    CHECK_MESSAGE(r.all_pass(), r.text());
    GaugeSolution sol = solve_gauge(T.E, 1);
    REQUIRE(sol.closed_form);
    CHECK(sol.solutions.size() == 4);
    std::set<std::string> split_pairs;
    for (const auto& f : sol.solutions) {
        VerticalAutomorphism F = theta(f, T.E);
        Report rv = verify_vertical(F, T.E, 2);
        CHECK_MESSAGE(rv.all_pass(), rv.text());
        auto [F1, F2] = product_gauge_split(F, T);
        Report r1 = verify_vertical(F1, *b.ext, 2);
        Report r2 = verify_vertical(F2, *b.ext, 2);
        CHECK_MESSAGE(r1.all_pass(), r1.text());
        CHECK_MESSAGE(r2.all_pass(), r2.text());
        // reassembly is exact
        CHECK(product_gauge_assemble(F1, F2, T) == F);
        std::string key;
        for (const auto& e : F1.gen_images) key += b.A->alg()->str(e) + ";";
        key += "|";
        for (const auto& e : F2.gen_images) key += b.A->alg()->str(e) + ";";
        split_pairs.insert(key);
    }
    CHECK(split_pairs.size() == 4);  // 2 x 2 distinct pairs
}

TEST_CASE("K[Z] x K[Z] tensor extension is Galois over the point") {
    auto b = build_example("kz_rq");
    TensorExtension T = tensor_extension(*b.ext, *b.ext);
    Report r = check_galois_suite(T.E, 2);
    CHECK_MESSAGE(r.all_pass(), r.text());
    GaugeSolution sol = solve_gauge(T.E, 1);
    REQUIRE(sol.closed_form);
    CHECK(sol.solutions.size() == 1);
    CHECK(sol.family_params.size() == 2);
}

TEST_CASE("aut transport under a comodule-algebra isomorphism (conjugation)") {
    auto b = build_example("torus_theta(2)");
    const Extension& E = *b.ext;
    const auto& P = b.A->alg();
    // omega: t_j -> mu_j t_j is an H-comodule algebra automorphism
    VerticalAutomorphism omega;
    for (GenId g = 0; g < P->gen_count(); ++g) {
        std::string nm = P->gen(g).name;
        bool star = nm.back() == 's';
        std::string idx = star ? nm.substr(1, nm.size() - 2) : nm.substr(1);
        Scalar mu = Scalar::parameter("mu" + idx, star ? -1 : 1);
        omega.gen_images.push_back(Element(Word::single(g), mu));
    }
    GaugeSolution sol = solve_gauge(E, 1);
    VerticalAutomorphism F = theta(sol.solutions[0], E);
    VerticalAutomorphism omega_inv = vertical_invert(omega, E);
    VerticalAutomorphism conj = vertical_compose(vertical_compose(omega_inv, F, E), omega, E);
    // omega F omega^{-1} is vertical again (and equals F for the abelian torus)
    Report r = verify_vertical(conj, E, 2);
    CHECK_MESSAGE(r.all_pass(), r.text());
    CHECK(conj == F);
}

TEST_CASE("trivial quasi-commutative extensions force the trivial R-form (lem:ban)") {
    // checker implication: the zmod2 extension is trivial (j is an algebra
    // map) and quasi-commutative, and indeed R(gen (x) gen) = eps eps
    auto b = build_example("zmod2_point");
    const auto& H = b.H;
    for (GenId x = 0; x < H->alg()->gen_count(); ++x)
        for (GenId y = 0; y < H->alg()->gen_count(); ++y)
            CHECK(b.forms.at("R")->eval_words(Word::single(x), Word::single(y)) ==
                  H->counit_word(Word::single(x)) * H->counit_word(Word::single(y)));
}
