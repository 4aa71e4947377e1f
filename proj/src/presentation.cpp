#include "hopfgal/presentation.hpp"

#include <algorithm>

namespace hopfgal {

AlgebraPresentation::AlgebraPresentation(std::string name, std::vector<Generator> gens)
    : name_(std::move(name)), gens_(std::move(gens)) {
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (!byname_.emplace(gens_[i].name, (GenId)i).second)
            throw std::invalid_argument("duplicate generator " + gens_[i].name);
    }
}

GenId AlgebraPresentation::gen_id(const std::string& name) const {
    auto it = byname_.find(name);
    if (it == byname_.end()) throw UndeclaredGenerator(name_ + ": undeclared generator " + name);
    return it->second;
}

int AlgebraPresentation::degree(const Word& w) const {
    int d = 0;
    for (GenId x : w.g) d += gens_.at(x).degree;
    return d;
}

bool AlgebraPresentation::word_less(const Word& a, const Word& b) const {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a.g < b.g;
}

void AlgebraPresentation::add_rule(const Word& lhs, const Element& rhs) {
    for (GenId x : lhs.g)
        if (x >= gens_.size()) throw UndeclaredGenerator(name_ + ": rule uses unknown generator");
    for (const auto& [w, c] : rhs.terms()) {
        if (!word_less(w, lhs))
            throw std::invalid_argument(name_ + ": rule " + word_str(lhs) +
                                        " not oriented: rhs word " + word_str(w) + " is not smaller");
    }
    if (rule_by_lhs_.count(lhs))
        throw std::invalid_argument(name_ + ": duplicate rule lhs " + word_str(lhs));
    rule_by_lhs_.emplace(lhs, rules_.size());
    rules_.push_back({lhs, rhs});
    max_lhs_len_ = std::max(max_lhs_len_, lhs.size());
    nf_cache_.clear();
}

void AlgebraPresentation::finalize_rules() {
    for (size_t i = 0; i < rules_.size(); ++i) {
        nf_cache_.clear();
        rules_[i].rhs = normal_form(rules_[i].rhs);
    }
    nf_cache_.clear();
}

bool AlgebraPresentation::find_redex(const Word& w, size_t& pos, size_t& rule) const {
    Word probe;
    for (size_t p = 0; p < w.size(); ++p) {
        probe.g.clear();
        size_t maxlen = std::min(max_lhs_len_, w.size() - p);
        for (size_t len = 1; len <= maxlen; ++len) {
            probe.g.push_back(w.g[p + len - 1]);
            auto it = rule_by_lhs_.find(probe);
            if (it != rule_by_lhs_.end()) {
                pos = p;
                rule = it->second;
                return true;
            }
        }
    }
    return false;
}

Element AlgebraPresentation::oracle_reduce(const Element& e) const {
    if (!oracle_ || e.is_zero()) return e;
    SparseRow row;
    Element outside;  // words beyond the oracle window pass through
    for (const auto& [w, c] : e.terms()) {
        auto it = oracle_->index.find(w);
        if (it == oracle_->index.end())
            outside.add(w, c);
        else
            row[it->second] = FracScalar(c);
    }
    if (row.empty()) return e;
    row = oracle_->echelon.reduce(std::move(row));
    Element r = outside;
    for (const auto& [col, v] : row) {
        FracScalar f = v;
        f.reduce();
        Scalar s;
        if (f.den.is_one()) {
            s = f.num;
        } else if (!f.num.divide_exact(f.den, s)) {
            throw std::logic_error(name_ + ": oracle reduction left the coefficient ring");
        }
        r.add(oracle_->words[col], s);
    }
    return r;
}

Element AlgebraPresentation::normal_form_word(const Word& w0, long budget) const {
    auto hit = nf_cache_.find(w0);
    if (hit != nf_cache_.end()) return hit->second;
    Element result;
    std::vector<std::pair<Word, Scalar>> stack{{w0, Scalar(1)}};
    long steps = 0;
    while (!stack.empty()) {
        auto [w, c] = stack.back();
        stack.pop_back();
        size_t pos, rule;
        if (!find_redex(w, pos, rule)) {
            result.add(w, c);
            continue;
        }
        if (++steps > budget)
            throw NonTerminatingRewrite(name_ + ": rewrite budget exceeded on " + word_str(w0));
        const RewriteRule& rr = rules_[rule];
        Word prefix(std::vector<GenId>(w.g.begin(), w.g.begin() + pos));
        Word suffix(std::vector<GenId>(w.g.begin() + pos + rr.lhs.size(), w.g.end()));
        for (const auto& [rw, rc] : rr.rhs.terms())
            stack.push_back({prefix.concat(rw).concat(suffix), c * rc});
    }
    result = oracle_reduce(result);
    if (w0.size() <= 24) nf_cache_.emplace(w0, result);
    return result;
}

Element AlgebraPresentation::normal_form(const Element& e, long budget) const {
    Element r;
    for (const auto& [w, c] : e.terms()) {
        Element n = normal_form_word(w, budget);
        for (const auto& [nw, nc] : n.terms()) r.add(nw, c * nc);
    }
    return r;
}

Element AlgebraPresentation::mul(const Element& a, const Element& b) const {
    Element r;
    for (const auto& [w1, c1] : a.terms())
        for (const auto& [w2, c2] : b.terms()) {
            Element n = normal_form_word(w1.concat(w2));
            for (const auto& [nw, nc] : n.terms()) r.add(nw, c1 * c2 * nc);
        }
    return r;
}

bool AlgebraPresentation::is_normal_word(const Word& w) const {
    size_t pos, rule;
    if (find_redex(w, pos, rule)) return false;
    if (oracle_) {
        auto it = oracle_->index.find(w);
        if (it != oracle_->index.end() && oracle_->echelon.rows().count(it->second)) return false;
    }
    return true;
}

std::vector<Word> AlgebraPresentation::basis(int max_degree, size_t cap) const {
    std::vector<Word> out;
    std::vector<Word> frontier{Word::one()};
    out.push_back(Word::one());
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (GenId x = 0; x < gens_.size(); ++x) {
                Word e = w;
                e.g.push_back(x);
                if (degree(e) > max_degree) continue;
                if (!is_normal_word(e)) continue;
                next.push_back(e);
                out.push_back(e);
                if (out.size() > cap)
                    throw BudgetExceeded(name_ + ": basis size exceeds cap at degree " +
                                         std::to_string(max_degree));
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [this](const Word& a, const Word& b) { return word_less(a, b); });
    return out;
}

Element AlgebraPresentation::star(const Element& e) const {
    if (!star_) throw std::logic_error(name_ + ": no star structure");
    Element r;
    for (const auto& [w, c] : e.terms()) {
        Element acc = Element::unit(c.star());
        for (size_t i = w.size(); i-- > 0;) acc = mul(acc, star_->at(w.g[i]));
        r = r + acc;
    }
    return normal_form(r);
}

std::vector<OverlapIssue> AlgebraPresentation::check_overlaps(int max_degree) const {
    std::vector<OverlapIssue> issues;
    auto resolve = [this, &issues](const Word& w, size_t p1, size_t r1, size_t p2, size_t r2) {
        auto apply = [this, &w](size_t pos, size_t rule) {
            const RewriteRule& rr = rules_[rule];
            Element out;
            Word prefix(std::vector<GenId>(w.g.begin(), w.g.begin() + pos));
            Word suffix(std::vector<GenId>(w.g.begin() + pos + rr.lhs.size(), w.g.end()));
            for (const auto& [rw, rc] : rr.rhs.terms()) out.add(prefix.concat(rw).concat(suffix), rc);
            return normal_form(out);
        };
        Element a = apply(p1, r1), b = apply(p2, r2);
        if (a != b) issues.push_back({w, a, b});
    };
    for (size_t i = 0; i < rules_.size(); ++i) {
        for (size_t j = 0; j < rules_.size(); ++j) {
            const Word& li = rules_[i].lhs;
            const Word& lj = rules_[j].lhs;
            // proper overlap: a suffix of li equals a prefix of lj
            for (size_t k = 1; k < li.size() && k < lj.size(); ++k) {
                if (!std::equal(lj.g.begin(), lj.g.begin() + k, li.g.end() - k)) continue;
                Word w = li;
                w.g.insert(w.g.end(), lj.g.begin() + k, lj.g.end());
                if (degree(w) > max_degree) continue;
                resolve(w, 0, i, li.size() - k, j);
            }
            // inclusion: lj occurs inside li
            if (i != j && lj.size() < li.size()) {
                for (size_t p = 0; p + lj.size() <= li.size(); ++p) {
                    if (!std::equal(lj.g.begin(), lj.g.end(), li.g.begin() + p)) continue;
                    if (degree(li) > max_degree) continue;
                    resolve(li, 0, i, p, j);
                }
            }
        }
    }
    return issues;
}

std::string AlgebraPresentation::word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += gens_.at(w.g[i]).name;
    }
    return s;
}

std::string AlgebraPresentation::str(const Element& e) const {
    if (e.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        if (!first) s += " + ";
        first = false;
        std::string cs = c.to_string();
        if (w.empty()) {
            s += cs;
        } else if (c.is_one()) {
            s += word_str(w);
        } else {
            bool atomic = c.terms().size() == 1;
            s += (atomic ? cs : "(" + cs + ")") + "*" + word_str(w);
        }
    }
    return s;
}

std::string AlgebraPresentation::str_tensor(const TensorElement& t,
                                            const std::vector<const AlgebraPresentation*>& legs) const {
    if (t.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [l, c] : t.terms()) {
        if (!first) s += " + ";
        first = false;
        if (!c.is_one()) s += "(" + c.to_string() + ")*";
        for (size_t i = 0; i < l.size(); ++i) {
            if (i) s += " (x) ";
            const AlgebraPresentation* p = i < legs.size() ? legs[i] : this;
            s += p->word_str(l[i]);
        }
    }
    return s;
}

}  // namespace hopfgal
