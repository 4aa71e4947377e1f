#include "doctest.h"
#include "hopfgal/linalg.hpp"
#include "hopfgal/scalar.hpp"

#include <random>

using namespace hopfgal;

TEST_CASE("bigint arithmetic agrees with native on small values") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long long> d(-1000000, 1000000);
    for (int i = 0; i < 2000; ++i) {
        long long a = d(rng), b = d(rng);
        CHECK((BigInt(a) + BigInt(b)).to_ll() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_ll() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_ll() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_ll() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_ll() == a % b);
        }
    }
}

TEST_CASE("bigint multi-limb division round trips") {
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("98765432109876543");
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    CHECK(a.to_string() == "123456789012345678901234567890");
    CHECK(BigInt::gcd(BigInt(24), BigInt(36)).to_ll() == 12);
}

TEST_CASE("rational arithmetic is exact and canonical") {
    Rational a(BigInt(2), BigInt(4));
    CHECK(a.to_string() == "1/2");
    CHECK((a + a).is_one());
    CHECK((a * Rational(4)).to_string() == "2");
    CHECK(Rational::from_string("-6/8").to_string() == "-3/4");
}

TEST_CASE("scalar ring axioms on random elements") {
    std::mt19937 rng(7);
    auto rnd = [&]() {
        Scalar s;
        int terms = (int)(rng() % 3);
        for (int t = 0; t <= terms; ++t) {
            Scalar m((long long)(rng() % 7) - 3);
            m = m * Scalar::parameter("q", (int)(rng() % 5) - 2);
            m = m * Scalar::parameter("u", (int)(rng() % 3) - 1);
            s += m;
        }
        return s;
    };
    for (int i = 0; i < 300; ++i) {
        Scalar a = rnd(), b = rnd(), c = rnd();
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a.star().star() == a);
        CHECK((a * b).star() == a.star() * b.star());
    }
}

TEST_CASE("scalar star inverts parameters") {
    Scalar q = Scalar::parameter("q");
    CHECK(q.star() == Scalar::parameter("q", -1));
    CHECK((q * q).star() == Scalar::parameter("q", -2));
    Scalar s = q + Scalar(2);
    CHECK(s.star() == Scalar::parameter("q", -1) + Scalar(2));
}

TEST_CASE("scalar parse/print round trip") {
    Scalar s = Scalar::parse("q^-2 + 1/2*q - 3");
    Scalar expect = Scalar::parameter("q", -2) + Scalar(Rational(BigInt(1), BigInt(2))) * Scalar::parameter("q") - Scalar(3);
    CHECK(s == expect);
    CHECK(Scalar::parse(s.to_string()) == s);
    CHECK(Scalar::parse("2*q^2*u^-1") == Scalar(2) * Scalar::parameter("q", 2) * Scalar::parameter("u", -1));
}

TEST_CASE("exact division of Laurent polynomials") {
    Scalar q = Scalar::parameter("q");
    Scalar a = (q + Scalar(1)) * (q.inverse_unit() - Scalar(3));
    Scalar quo;
    REQUIRE(a.divide_exact(q + Scalar(1), quo));
    CHECK(quo == q.inverse_unit() - Scalar(3));
    CHECK_FALSE((q + Scalar(2)).divide_exact(q + Scalar(1), quo));
}

TEST_CASE("substitution") {
    Scalar q = Scalar::parameter("q");
    std::map<ParamId, Scalar> sub{{param_id("q"), Scalar(2)}};
    Scalar v = (q * q + q.inverse_unit()).substitute(sub);
    CHECK(v == Scalar(4) + Scalar(Rational(BigInt(1), BigInt(2))));
}

TEST_CASE("nullspace over the scalar ring") {
    Scalar q = Scalar::parameter("q");
    // rows of [[1, q], [q^-1, 1]] are dependent; kernel is span{(-q, 1)}
    std::vector<std::vector<Scalar>> rows{{Scalar(1), q}, {q.inverse_unit(), Scalar(1)}};
    auto ns = nullspace(rows, 2);
    REQUIRE(ns.size() == 1);
    // check A v = 0
    for (const auto& r : rows) CHECK((r[0] * ns[0][0] + r[1] * ns[0][1]).is_zero());
}

TEST_CASE("solve_linear") {
    Scalar q = Scalar::parameter("q");
    std::vector<std::vector<Scalar>> A{{q, Scalar(0)}, {Scalar(1), Scalar(1)}};
    std::vector<Scalar> b{Scalar(1), Scalar(0)};
    auto x = solve_linear(A, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == q.inverse_unit());
    CHECK((*x)[1] == -q.inverse_unit());
}
