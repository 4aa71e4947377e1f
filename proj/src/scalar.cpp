#include "hopfgal/scalar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hopfgal {

namespace {
std::vector<std::string>& name_table() {
    static std::vector<std::string> t;
    return t;
}
std::map<std::string, ParamId>& id_table() {
    static std::map<std::string, ParamId> t;
    return t;
}
}  // namespace

ParamId param_id(const std::string& name) {
    auto& ids = id_table();
    auto it = ids.find(name);
    if (it != ids.end()) return it->second;
    ParamId id = (ParamId)name_table().size();
    name_table().push_back(name);
    ids.emplace(name, id);
    return id;
}

const std::string& param_name(ParamId id) { return name_table().at(id); }

bool Monomial::operator<(const Monomial& o) const {
    size_t i = 0, j = 0;
    while (i < e.size() || j < o.e.size()) {
        ParamId pa = i < e.size() ? e[i].first : UINT32_MAX;
        ParamId pb = j < o.e.size() ? o.e[j].first : UINT32_MAX;
        int32_t ea = 0, eb = 0;
        ParamId p = std::min(pa, pb);
        if (pa == p) ea = e[i++].second;
        if (pb == p) eb = o.e[j++].second;
        if (ea != eb) return ea < eb;
    }
    return false;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < e.size() || j < o.e.size()) {
        if (j == o.e.size() || (i < e.size() && e[i].first < o.e[j].first)) {
            r.e.push_back(e[i++]);
        } else if (i == e.size() || o.e[j].first < e[i].first) {
            r.e.push_back(o.e[j++]);
        } else {
            int32_t s = e[i].second + o.e[j].second;
            if (s != 0) r.e.push_back({e[i].first, s});
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r = *this;
    for (auto& p : r.e) p.second = -p.second;
    return r;
}

Monomial Monomial::pow(int n) const {
    Monomial r;
    if (n == 0) return r;
    r = *this;
    for (auto& p : r.e) p.second *= n;
    return r;
}

std::string Monomial::to_string() const {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += "*";
        s += param_name(e[i].first);
        if (e[i].second != 1) s += "^" + std::to_string(e[i].second);
    }
    return s;
}

Scalar Scalar::parameter(const std::string& name, int exp) {
    Scalar s;
    if (exp == 0) return Scalar(1);
    Monomial m;
    m.e.push_back({param_id(name), exp});
    s.terms_[m] = Rational(1);
    return s;
}

bool Scalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second.is_one();
}

bool Scalar::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Scalar::rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw std::logic_error("Scalar: not a rational");
    return terms_.begin()->second;
}

Scalar Scalar::inverse_unit() const {
    if (!is_unit_monomial()) throw std::domain_error("Scalar: not an invertible unit monomial: " + to_string());
    Scalar r;
    r.terms_[terms_.begin()->first.inverse()] = terms_.begin()->second.inverse();
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    r += o;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    if (is_zero() || o.is_zero()) return r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1 * m2;
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                r.terms_.emplace(std::move(m), c1 * c2);
            } else {
                it->second = it->second + c1 * c2;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
}

bool Scalar::operator<(const Scalar& o) const {
    return std::lexicographical_compare(
        terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
        [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
}

Scalar Scalar::star() const {
    Scalar r;
    for (const auto& [m, c] : terms_) r.terms_[m.inverse()] = c;
    return r;
}

Scalar Scalar::substitute(const std::map<ParamId, Scalar>& sub) const {
    Scalar r;
    for (const auto& [m, c] : terms_) {
        Scalar term(c);
        Monomial rest;
        for (const auto& [id, ex] : m.e) {
            auto it = sub.find(id);
            if (it == sub.end()) {
                rest.e.push_back({id, ex});
                continue;
            }
            const Scalar& v = it->second;
            Scalar p = ex >= 0 ? v : v.inverse_unit();
            int n = ex >= 0 ? ex : -ex;
            for (int k = 0; k < n; ++k) term = term * p;
        }
        Scalar mono;
        mono.terms_[rest] = Rational(1);
        r += term * mono;
    }
    return r;
}

bool Scalar::divide_exact(const Scalar& d, Scalar& quotient) const {
    if (d.is_zero()) return false;
    if (is_zero()) {
        quotient = Scalar();
        return true;
    }
    if (d.is_unit_monomial()) {
        quotient = *this * d.inverse_unit();
        return true;
    }
    Scalar rem = *this, quo;
    const auto& dlead = *d.terms_.rbegin();
    for (int steps = 0; !rem.is_zero(); ++steps) {
        if (steps > 100000) return false;
        const auto& rlead = *rem.terms_.rbegin();
        Scalar t;
        t.terms_[rlead.first * dlead.first.inverse()] = rlead.second / dlead.second;
        quo += t;
        rem = rem - t * d;
        if (!rem.is_zero() && !(rem.terms_.rbegin()->first < rlead.first)) return false;
    }
    quotient = quo;
    return true;
}

std::string Scalar::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        Rational a = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) s += "-";
            first = false;
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        if (it->first.is_unit()) {
            s += a.to_string();
        } else {
            if (!a.is_one()) s += a.to_string() + "*";
            s += it->first.to_string();
        }
    }
    return s;
}

// Grammar: sum of terms; term = factor ('*' factor)*; factor = rational | name ('^' int)?
Scalar Scalar::parse(const std::string& text) {
    size_t i = 0;
    auto skip = [&] { while (i < text.size() && isspace((unsigned char)text[i])) ++i; };
    auto parse_int = [&]() -> std::string {
        std::string t;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) t += text[i++];
        while (i < text.size() && isdigit((unsigned char)text[i])) t += text[i++];
        if (t.empty() || t == "+" || t == "-") throw std::invalid_argument("scalar parse: expected integer in '" + text + "'");
        return t;
    };
    auto parse_factor = [&]() -> Scalar {
        skip();
        if (i >= text.size()) throw std::invalid_argument("scalar parse: unexpected end in '" + text + "'");
        if (isdigit((unsigned char)text[i])) {
            std::string num = parse_int();
            if (i < text.size() && text[i] == '/') {
                ++i;
                std::string den = parse_int();
                return Scalar(Rational(BigInt::from_string(num), BigInt::from_string(den)));
            }
            return Scalar(Rational(BigInt::from_string(num), BigInt(1)));
        }
        if (isalpha((unsigned char)text[i]) || text[i] == '_') {
            std::string name;
            while (i < text.size() && (isalnum((unsigned char)text[i]) || text[i] == '_')) name += text[i++];
            int exp = 1;
            skip();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip();
                exp = std::stoi(parse_int());
            }
            return parameter(name, exp);
        }
        throw std::invalid_argument("scalar parse: bad factor in '" + text + "'");
    };
    auto parse_term = [&]() -> Scalar {
        Scalar r = parse_factor();
        skip();
        while (i < text.size() && text[i] == '*') {
            ++i;
            r = r * parse_factor();
            skip();
        }
        return r;
    };
    skip();
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    Scalar r = parse_term();
    if (neg) r = -r;
    skip();
    while (i < text.size()) {
        char op = text[i];
        if (op != '+' && op != '-') throw std::invalid_argument("scalar parse: bad operator in '" + text + "'");
        ++i;
        Scalar t = parse_term();
        r = op == '+' ? r + t : r - t;
        skip();
    }
    return r;
}

}  // namespace hopfgal
