#include "doctest.h"
#include "hopfgal/catalog.hpp"

#include <chrono>

using namespace hopfgal;
using namespace hopfgal::catalog;

TEST_CASE("free algebra normal forms in the quantum plane") {
    auto b = build_example("quantum_plane_glq2");
    const auto& P = b.A->alg();
    GenId x1 = P->gen_id("x1"), x2 = P->gen_id("x2");
    // raw x2 x1 -> q^-1 x1 x2
    Element nf = P->normal_form(Element(Word({std::vector<GenId>{x2, x1}})));
    Element expect(Word(std::vector<GenId>{x1, x2}), Scalar::parameter("q", -1));
    CHECK(nf == expect);
    // empty word is the unit
    CHECK(P->normal_form(Element::unit()) == Element::unit());
    // idempotence of normal_form
    CHECK(P->normal_form(nf) == nf);
}

TEST_CASE("function algebra on Z2: products of projections") {
    auto b = build_example("zmod2_point");
    const auto& P = b.H->alg();
    GenId pe = P->gen_id("pe"), pu = P->gen_id("pu");
    // oracle: pointwise multiplication of the function tables on Z2
    // pe = (1,0), pu = (0,1): pe*pu = (0,0) = 0, pe*pe = pe
    CHECK(P->mul(Element(Word::single(pe)), Element(Word::single(pu))).is_zero());
    CHECK(P->mul(Element(Word::single(pe)), Element(Word::single(pe))) ==
          P->normal_form(Element(Word::single(pe))));
    // basis: with pu eliminated the degree-1 basis is {1, pe}
    auto basis = P->basis(1);
    CHECK(basis.size() == 2);
}

TEST_CASE("K[Z] group law and basis") {
    auto b = build_example("kz_rq");
    const auto& P = b.H->alg();
    GenId g = P->gen_id("g"), gi = P->gen_id("gi");
    // g^3 * g^-1 = g^2
    Element g3(Word(std::vector<GenId>{g, g, g}));
    Element gim(Word::single(gi));
    CHECK(P->mul(g3, gim) == Element(Word(std::vector<GenId>{g, g})));
    // unit acts trivially
    CHECK(P->mul(Element::unit(), g3) == g3);
    // degree-2 basis: 1, g, gi, g^2, gi^2
    CHECK(P->basis(2).size() == 5);
}

TEST_CASE("catalog rule sets resolve their overlap ambiguities") {
    for (const char* name : {"zmod2_point", "kz_rq", "torus_theta(2)", "graded_strong"}) {
        auto b = build_example(name);
        auto issues = b.H->alg()->check_overlaps(5);
        CHECK_MESSAGE(issues.empty(), name, ": ", issues.size(), " unresolved overlaps");
    }
    auto glq = build_example("quantum_plane_glq2");
    auto issues = glq.H->alg()->check_overlaps(6);
    CHECK_MESSAGE(issues.empty(), "GLq2: ", issues.size(), " unresolved overlaps");
    CHECK(glq.A->alg()->check_overlaps(5).empty());
    auto uq2 = build_example("uq2_presentation");
    CHECK(uq2.H->alg()->check_overlaps(6).empty());
}

TEST_CASE("star is an anti-multiplicative involution on catalog presentations") {
    for (const char* name : {"kz_rq", "torus_theta(2)", "uq2_presentation"}) {
        auto b = build_example(name);
        const auto& P = b.H->alg();
        auto basis = P->basis(2);
        for (const Word& u : basis) {
            CHECK(P->star(P->star(Element(u))) == P->normal_form(Element(u)));
            for (const Word& v : basis) {
                if (P->degree(u) + P->degree(v) > 2) continue;
                CHECK(P->star(P->mul(Element(u), Element(v))) ==
                      P->mul(P->star(Element(v)), P->star(Element(u))));
            }
        }
    }
}

TEST_CASE("multiplication is associative and unital on catalog bases") {
    for (const char* name : {"zmod2_point", "kz_rq", "quantum_plane_glq2"}) {
        auto b = build_example(name);
        const auto& P = b.H->alg();
        auto basis = P->basis(2);
        for (const Word& u : basis)
            for (const Word& v : basis)
                for (const Word& w : basis) {
                    if (P->degree(u) + P->degree(v) + P->degree(w) > 4) continue;
                    CHECK(P->mul(P->mul(Element(u), Element(v)), Element(w)) ==
                          P->mul(Element(u), P->mul(Element(v), Element(w))));
                }
    }
}

TEST_CASE("quantum plane basis matches the PBW ordering") {
    auto b = build_example("quantum_plane_glq2");
    const auto& P = b.A->alg();
    auto basis = P->basis(2);
    // 1, x1, x2, x1^2, x1 x2, x2^2
    CHECK(basis.size() == 6);
    for (const Word& w : basis) CHECK(std::is_sorted(w.g.begin(), w.g.end()));
}

TEST_CASE("so2n commutative quotient is confluent at working degree") {
    auto t0 = std::chrono::steady_clock::now();
    auto b = build_example("so2n_twisted(2)");
    auto t1 = std::chrono::steady_clock::now();
    MESSAGE("SO(4) construction: ",
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count(), " ms");
    const auto& P = b.H->alg();
    CHECK(P->gen_count() == 16);
    // a degree-2 identity: sum_K M_K0 M_sig(K),1 = Q_01 = 0 rewrites to zero
    Element r;
    for (int K = 0; K < 4; ++K) {
        GenId u = P->gen_id(K == 0   ? "a11"
                            : K == 1 ? "a21"
                            : K == 2 ? "bs11"
                                     : "bs21");
        GenId v = P->gen_id(K == 0   ? "bs12"
                            : K == 1 ? "bs22"
                            : K == 2 ? "a12"
                                     : "a22");
        r = r + P->mul(Element(Word::single(u)), Element(Word::single(v)));
    }
    CHECK(r.is_zero());
}
