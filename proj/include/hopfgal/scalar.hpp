#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hopfgal/rational.hpp"

namespace hopfgal {

// Formal parameters (q, phases, gauge unknowns) are interned process-wide.
// Every parameter is invertible; the star involution sends it to its inverse.
using ParamId = uint32_t;

ParamId param_id(const std::string& name);
const std::string& param_name(ParamId id);

// Sparse exponent vector over parameters, entries sorted by id, no zeros.
struct Monomial {
    std::vector<std::pair<ParamId, int32_t>> e;

    bool is_unit() const { return e.empty(); }
    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(int n) const;
    bool operator==(const Monomial& o) const { return e == o.e; }
    // lex order on full exponent vectors (absent = 0): a group order, so it
    // is compatible with multiplication, which sparse division relies on
    bool operator<(const Monomial& o) const;
    std::string to_string() const;
};

// Exact multivariate Laurent polynomial over the rationals: the ground ring
// for every computation in this library.  Canonical form: no zero terms.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long n) {
        if (n != 0) terms_[Monomial{}] = Rational(n);
    }
    Scalar(const Rational& r) {
        if (!r.is_zero()) terms_[Monomial{}] = r;
    }

    static Scalar parameter(const std::string& name, int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()
    // Unit monomials c*m with c rational are the invertible scalars we use.
    bool is_unit_monomial() const { return terms_.size() == 1 && !terms_.begin()->second.is_zero(); }
    Scalar inverse_unit() const;  // requires is_unit_monomial()

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;  // arbitrary strict order for map keys

    // star: identity on rationals, parameter -> parameter^-1
    Scalar star() const;
    Scalar substitute(const std::map<ParamId, Scalar>& sub) const;

    // exact division; returns false when *this is not a multiple of d
    bool divide_exact(const Scalar& d, Scalar& quotient) const;

    const std::map<Monomial, Rational>& terms() const& { return terms_; }
    std::map<Monomial, Rational> terms() && { return std::move(terms_); }
    void set_term(const Monomial& m, const Rational& c) {
        if (c.is_zero())
            terms_.erase(m);
        else
            terms_[m] = c;
    }

    std::string to_string() const;
    static Scalar parse(const std::string& text);  // sums of rational*param^exp products

private:
    std::map<Monomial, Rational> terms_;
};

}  // namespace hopfgal
