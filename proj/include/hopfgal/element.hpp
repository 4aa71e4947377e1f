#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hopfgal/scalar.hpp"

namespace hopfgal {

using GenId = uint16_t;

// Word in the free monoid over a generator set; empty word is the unit.
struct Word {
    std::vector<GenId> g;

    Word() = default;
    explicit Word(std::vector<GenId> v) : g(std::move(v)) {}
    static Word one() { return Word(); }
    static Word single(GenId x) { return Word({x}); }

    size_t size() const { return g.size(); }
    bool empty() const { return g.empty(); }
    Word concat(const Word& o) const {
        Word r = *this;
        r.g.insert(r.g.end(), o.g.begin(), o.g.end());
        return r;
    }
    Word reversed() const {
        Word r = *this;
        std::reverse(r.g.begin(), r.g.end());
        return r;
    }
    bool operator==(const Word& o) const { return g == o.g; }
    bool operator!=(const Word& o) const { return g != o.g; }
    bool operator<(const Word& o) const { return g < o.g; }  // plain lex on ids
};

// Linear combination of words over Scalar.  Pure data; the owning
// presentation decides normal forms.
class Element {
public:
    Element() = default;
    explicit Element(const Word& w, const Scalar& c = Scalar(1)) {
        if (!c.is_zero()) t_[w] = c;
    }
    static Element unit(const Scalar& c = Scalar(1)) { return Element(Word::one(), c); }

    bool is_zero() const { return t_.empty(); }
    const std::map<Word, Scalar>& terms() const& { return t_; }
    // ranged-for over a temporary must own the storage it iterates
    std::map<Word, Scalar> terms() && { return std::move(t_); }

    void add(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = t_.find(w);
        if (it == t_.end()) {
            t_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    Element operator+(const Element& o) const {
        Element r = *this;
        for (const auto& [w, c] : o.t_) r.add(w, c);
        return r;
    }
    Element operator-(const Element& o) const {
        Element r = *this;
        for (const auto& [w, c] : o.t_) r.add(w, -c);
        return r;
    }
    Element operator*(const Scalar& s) const {
        Element r;
        if (s.is_zero()) return r;
        for (const auto& [w, c] : t_) r.t_[w] = c * s;
        return r;
    }
    bool operator==(const Element& o) const { return t_ == o.t_; }
    bool operator!=(const Element& o) const { return !(*this == o); }
    bool operator<(const Element& o) const { return t_ < o.t_; }

private:
    std::map<Word, Scalar> t_;
};

// Linear combination of fixed-rank tuples of words; carries Sweedler legs,
// elements of A (x) H, balanced tensors, and so on.
class TensorElement {
public:
    TensorElement() : rank_(0) {}
    explicit TensorElement(int rank) : rank_(rank) {}

    int rank() const { return rank_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<std::vector<Word>, Scalar>& terms() const& { return t_; }
    std::map<std::vector<Word>, Scalar> terms() && { return std::move(t_); }

    void add(const std::vector<Word>& legs, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = t_.find(legs);
        if (it == t_.end()) {
            t_.emplace(legs, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    TensorElement operator+(const TensorElement& o) const {
        TensorElement r = *this;
        for (const auto& [l, c] : o.t_) r.add(l, c);
        return r;
    }
    TensorElement operator-(const TensorElement& o) const {
        TensorElement r = *this;
        for (const auto& [l, c] : o.t_) r.add(l, -c);
        return r;
    }
    TensorElement operator*(const Scalar& s) const {
        TensorElement r(rank_);
        if (s.is_zero()) return r;
        for (const auto& [l, c] : t_) r.t_[l] = c * s;
        return r;
    }
    bool operator==(const TensorElement& o) const { return rank_ == o.rank_ && t_ == o.t_; }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    Element leg_element(int which) const {
        Element e;
        for (const auto& [l, c] : t_) e.add(l.at(which), c);
        return e;
    }

    static TensorElement outer(const Element& a, const Element& b) {
        TensorElement r(2);
        for (const auto& [w1, c1] : a.terms())
            for (const auto& [w2, c2] : b.terms()) r.add({w1, w2}, c1 * c2);
        return r;
    }

private:
    int rank_;
    std::map<std::vector<Word>, Scalar> t_;
};

}  // namespace hopfgal
