#include "hopfgal/forms.hpp"

#include <algorithm>

#include "hopfgal/linalg.hpp"

namespace hopfgal {

BilinearForm BilinearForm::trivial(HopfPtr host) {
    BilinearForm f;
    f.policy_ = Policy::Trivial;
    f.host_ = std::move(host);
    return f;
}

BilinearForm BilinearForm::bicharacter(HopfPtr host, std::map<GenId, std::vector<int>> weights,
                                       std::vector<std::vector<Scalar>> values) {
    if (!host->group_like_basis())
        throw std::invalid_argument("bicharacter: host generators must be group-like");
    for (const auto& row : values)
        for (const auto& v : row)
            if (!v.is_unit_monomial())
                throw std::invalid_argument("bicharacter: values must be invertible unit monomials");
    BilinearForm f;
    f.policy_ = Policy::Bicharacter;
    f.host_ = std::move(host);
    f.weights_ = std::move(weights);
    f.values_ = std::move(values);
    return f;
}

BilinearForm BilinearForm::rform(HopfPtr host, std::map<std::pair<GenId, GenId>, Scalar> table) {
    BilinearForm f;
    f.policy_ = Policy::RForm;
    f.host_ = std::move(host);
    f.pair_table_ = std::move(table);
    return f;
}

BilinearForm BilinearForm::rform_inverse(HopfPtr host, std::map<std::pair<GenId, GenId>, Scalar> table) {
    BilinearForm f;
    f.policy_ = Policy::RFormInverse;
    f.host_ = std::move(host);
    f.pair_table_ = std::move(table);
    return f;
}

BilinearForm BilinearForm::lift(HopfPtr host, std::map<GenId, Element> projection, HopfPtr base,
                                std::shared_ptr<const BilinearForm> base_form) {
    BilinearForm f;
    f.policy_ = Policy::Lift;
    f.host_ = std::move(host);
    f.proj_ = std::move(projection);
    f.base_ = std::move(base);
    f.base_form_ = std::move(base_form);
    return f;
}

BilinearForm BilinearForm::explicit_table(HopfPtr host, std::map<std::pair<Word, Word>, Scalar> table,
                                          int degree) {
    BilinearForm f;
    f.policy_ = Policy::Explicit;
    f.host_ = std::move(host);
    f.table_ = std::move(table);
    f.table_degree_ = degree;
    return f;
}

BilinearForm BilinearForm::composite(HopfPtr host,
                                     std::vector<std::pair<std::shared_ptr<const BilinearForm>, bool>> factors) {
    BilinearForm f;
    f.policy_ = Policy::Composite;
    f.host_ = std::move(host);
    f.factors_ = std::move(factors);
    return f;
}

BilinearForm BilinearForm::scaled(HopfPtr host, std::shared_ptr<const BilinearForm> base,
                                  std::function<Scalar(const Word&)> scale) {
    BilinearForm f;
    f.policy_ = Policy::Scaled;
    f.host_ = std::move(host);
    f.base_form_ = std::move(base);
    f.scale_ = std::move(scale);
    return f;
}

BilinearForm BilinearForm::tensor_split(HopfPtr host, std::shared_ptr<const BilinearForm> f1,
                                        std::shared_ptr<const BilinearForm> f2, GenId boundary) {
    BilinearForm f;
    f.policy_ = Policy::TensorSplit;
    f.host_ = std::move(host);
    f.split_f1_ = std::move(f1);
    f.split_f2_ = std::move(f2);
    f.split_boundary_ = boundary;
    return f;
}

std::vector<int> BilinearForm::word_weight(const Word& w) const {
    std::vector<int> acc(values_.size(), 0);
    for (GenId g : w.g) {
        const auto& wt = weights_.at(g);
        for (size_t i = 0; i < wt.size(); ++i) acc[i] += wt[i];
    }
    return acc;
}

Element BilinearForm::project(const Element& e) const {
    Element r;
    for (const auto& [w, c] : e.terms()) {
        Element acc = Element::unit(c);
        for (GenId g : w.g) acc = base_->alg()->mul(acc, proj_.at(g));
        r = r + acc;
    }
    return r;
}

Scalar BilinearForm::eval_words(const Word& x, const Word& y) const {
    auto key = std::make_pair(x, y);
    auto it = memo_->find(key);
    if (it != memo_->end()) return it->second;
    Scalar v = eval_uncached(x, y);
    memo_->emplace(std::move(key), v);
    return v;
}

Scalar BilinearForm::eval(const Element& x, const Element& y) const {
    Scalar s;
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms()) {
            Scalar v = eval_words(wx, wy);
            if (!v.is_zero()) s += cx * cy * v;
        }
    return s;
}

Scalar BilinearForm::eval_uncached(const Word& x, const Word& y) const {
    switch (policy_) {
        case Policy::Trivial:
            return host_->counit_word(x) * host_->counit_word(y);
        case Policy::Bicharacter: {
            std::vector<int> a = word_weight(x), b = word_weight(y);
            Scalar v(1);
            for (size_t i = 0; i < values_.size(); ++i) {
                if (a[i] == 0) continue;
                for (size_t j = 0; j < values_.size(); ++j) {
                    if (b[j] == 0) continue;
                    const Scalar& base = values_[i][j];
                    int e = a[i] * b[j];
                    Scalar p = e >= 0 ? base : base.inverse_unit();
                    for (int k = 0; k < std::abs(e); ++k) v *= p;
                }
            }
            return v;
        }
        case Policy::RForm: {
            if (x.empty()) return host_->counit_word(y);
            if (y.empty()) return host_->counit_word(x);
            if (x.size() > 1) {
                // R(g.rest (x) y) = R(g (x) y1) R(rest (x) y2)
                Word g = Word::single(x.g[0]);
                Word rest(std::vector<GenId>(x.g.begin() + 1, x.g.end()));
                Scalar s;
                for (const auto& [l, c] : host_->coproduct_word(y).terms()) {
                    Scalar s1 = eval_words(g, l[0]);
                    if (s1.is_zero()) continue;
                    Scalar s2 = eval_words(rest, l[1]);
                    if (s2.is_zero()) continue;
                    s += c * s1 * s2;
                }
                return s;
            }
            if (y.size() > 1) {
                // R(g (x) h.rest) = R(g2 (x) h) R(g1 (x) rest)
                Word h = Word::single(y.g[0]);
                Word rest(std::vector<GenId>(y.g.begin() + 1, y.g.end()));
                Scalar s;
                for (const auto& [l, c] : host_->coproduct_word(x).terms()) {
                    Scalar s1 = eval(Element(l[1]), Element(h));
                    if (s1.is_zero()) continue;
                    Scalar s2 = eval(Element(l[0]), Element(rest));
                    if (s2.is_zero()) continue;
                    s += c * s1 * s2;
                }
                return s;
            }
            auto it = pair_table_.find({x.g[0], y.g[0]});
            if (it == pair_table_.end())
                throw PolicyUndefined(host_->name() + ": form undefined on (" +
                                      host_->alg()->word_str(x) + ", " + host_->alg()->word_str(y) + ")");
            return it->second;
        }
        case Policy::RFormInverse: {
            if (x.empty()) return host_->counit_word(y);
            if (y.empty()) return host_->counit_word(x);
            if (x.size() > 1) {
                // Rbar(g.rest (x) y) = Rbar(rest (x) y1) Rbar(g (x) y2)
                Word g = Word::single(x.g[0]);
                Word rest(std::vector<GenId>(x.g.begin() + 1, x.g.end()));
                Scalar s;
                for (const auto& [l, c] : host_->coproduct_word(y).terms()) {
                    Scalar s1 = eval_words(rest, l[0]);
                    if (s1.is_zero()) continue;
                    Scalar s2 = eval_words(g, l[1]);
                    if (s2.is_zero()) continue;
                    s += c * s1 * s2;
                }
                return s;
            }
            if (y.size() > 1) {
                // Rbar(g (x) h.rest) = Rbar(g1 (x) h) Rbar(g2 (x) rest)
                Word h = Word::single(y.g[0]);
                Word rest(std::vector<GenId>(y.g.begin() + 1, y.g.end()));
                Scalar s;
                for (const auto& [l, c] : host_->coproduct_word(x).terms()) {
                    Scalar s1 = eval(Element(l[0]), Element(h));
                    if (s1.is_zero()) continue;
                    Scalar s2 = eval(Element(l[1]), Element(rest));
                    if (s2.is_zero()) continue;
                    s += c * s1 * s2;
                }
                return s;
            }
            auto it = pair_table_.find({x.g[0], y.g[0]});
            if (it == pair_table_.end())
                throw PolicyUndefined(host_->name() + ": inverse form undefined on (" +
                                      host_->alg()->word_str(x) + ", " + host_->alg()->word_str(y) + ")");
            return it->second;
        }
        case Policy::Lift:
            return base_form_->eval(project(Element(x)), project(Element(y)));
        case Policy::Explicit: {
            auto it = table_.find({x, y});
            if (it != table_.end()) return it->second;
            if (x.empty()) return host_->counit_word(y);
            if (y.empty()) return host_->counit_word(x);
            throw PolicyUndefined(host_->name() + ": explicit form undefined on (" +
                                  host_->alg()->word_str(x) + ", " + host_->alg()->word_str(y) + ")");
        }
        case Policy::Scaled:
            return scale_(x) * scale_(y) * base_form_->eval_words(x, y);
        case Policy::TensorSplit: {
            auto split = [this](const Word& w) {
                Word a, b;
                for (GenId g : w.g) {
                    if (g < split_boundary_)
                        a.g.push_back(g);
                    else
                        b.g.push_back((GenId)(g - split_boundary_));
                }
                return std::make_pair(a, b);
            };
            auto [x1, x2] = split(x);
            auto [y1, y2] = split(y);
            return split_f1_->eval_words(x1, y1) * split_f2_->eval_words(x2, y2);
        }
        case Policy::Composite:
            return composite_eval(0, x, y);
    }
    throw std::logic_error("BilinearForm: unknown policy");
}

// (F_k * ... * F_n)(x (x) y) contracted one coproduct split at a time; the
// per-level memo shares work across the many Sweedler legs that repeat
Scalar BilinearForm::composite_eval(size_t k, const Word& x, const Word& y) const {
    const auto& [f, flip] = factors_[k];
    if (k + 1 == factors_.size()) return flip ? f->eval_words(y, x) : f->eval_words(x, y);
    auto key = std::make_tuple(k, x, y);
    auto it = comp_memo_->find(key);
    if (it != comp_memo_->end()) return it->second;
    Scalar s;
    for (const auto& [lx, cx] : host_->coproduct_word(x).terms())
        for (const auto& [ly, cy] : host_->coproduct_word(y).terms()) {
            Scalar v = flip ? f->eval_words(ly[0], lx[0]) : f->eval_words(lx[0], ly[0]);
            if (v.is_zero()) continue;
            Scalar rest = composite_eval(k + 1, lx[1], ly[1]);
            if (rest.is_zero()) continue;
            s += cx * cy * v * rest;
        }
    comp_memo_->emplace(std::move(key), s);
    return s;
}

bool BilinearForm::equal_on_basis(const BilinearForm& o, int max_degree) const {
    auto basis = host_->alg()->basis(max_degree);
    for (const Word& u : basis)
        for (const Word& v : basis) {
            if (host_->alg()->degree(u) + host_->alg()->degree(v) > max_degree + 1) continue;
            if (eval_words(u, v) != o.eval_words(u, v)) return false;
        }
    return true;
}

namespace {

// generator-level convolution equations R(a1 (x) b1) X(a2 (x) b2) = eps(a)eps(b)
std::map<std::pair<GenId, GenId>, Scalar> solve_pair_inverse(const BilinearForm& F) {
    const HopfPtr& H = F.host();
    size_t n = H->alg()->gen_count();
    auto idx = [n](GenId a, GenId b) { return (int)(a * n + b); };
    std::vector<std::vector<Scalar>> A;
    std::vector<Scalar> rhs;
    for (GenId a = 0; a < n; ++a)
        for (GenId b = 0; b < n; ++b) {
            std::vector<Scalar> row(n * n, Scalar());
            Scalar constant;
            for (const auto& [la, ca] : H->coproduct_word(Word::single(a)).terms())
                for (const auto& [lb, cb] : H->coproduct_word(Word::single(b)).terms()) {
                    Scalar coef = ca * cb * F.eval_words(la[0], lb[0]);
                    if (coef.is_zero()) continue;
                    const Word& u = la[1];
                    const Word& v = lb[1];
                    if (u.size() == 1 && v.size() == 1) {
                        row[idx(u.g[0], v.g[0])] += coef;
                    } else {
                        // a leg is scalar: X(1 (x) v) = eps(v), X(u (x) 1) = eps(u)
                        constant += coef * H->counit_word(u) * H->counit_word(v);
                    }
                }
            Scalar target = H->counit_word(Word::single(a)) * H->counit_word(Word::single(b));
            A.push_back(std::move(row));
            rhs.push_back(target - constant);
        }
    auto sol = solve_linear(A, rhs);
    if (!sol)
        throw NotInvertible(H->name() + ": generator-level convolution system is singular");
    std::map<std::pair<GenId, GenId>, Scalar> table;
    for (GenId a = 0; a < n; ++a)
        for (GenId b = 0; b < n; ++b) table[{a, b}] = (*sol)[idx(a, b)];
    return table;
}

void verify_inverse(const BilinearForm& F, const BilinearForm& G, int max_degree) {
    auto basis = F.host()->alg()->basis(max_degree);
    for (const Word& u : basis)
        for (const Word& v : basis) {
            if (F.host()->alg()->degree(u) + F.host()->alg()->degree(v) > max_degree + 1) continue;
            Scalar lhs, rhs;
            for (const auto& [lu, cu] : F.host()->coproduct_word(u).terms())
                for (const auto& [lv, cv] : F.host()->coproduct_word(v).terms()) {
                    Scalar c = cu * cv;
                    lhs += c * F.eval_words(lu[0], lv[0]) * G.eval_words(lu[1], lv[1]);
                    rhs += c * G.eval_words(lu[0], lv[0]) * F.eval_words(lu[1], lv[1]);
                }
            Scalar target = F.host()->counit_word(u) * F.host()->counit_word(v);
            if (lhs != target || rhs != target)
                throw NotInvertible(F.host()->name() + ": convolution inverse fails at degree " +
                                    std::to_string(F.host()->alg()->degree(u) + F.host()->alg()->degree(v)) +
                                    " on pair (" + F.host()->alg()->word_str(u) + ", " +
                                    F.host()->alg()->word_str(v) + ")");
        }
}

}  // namespace

BilinearForm invert_form(const BilinearForm& F, int max_degree) {
    BilinearForm inv;
    switch (F.policy()) {
        case BilinearForm::Policy::Trivial:
            return F;
        case BilinearForm::Policy::Bicharacter: {
            auto values = F.values_;
            for (auto& row : values)
                for (auto& v : row) v = v.inverse_unit();
            inv = BilinearForm::bicharacter(F.host_, F.weights_, std::move(values));
            break;
        }
        case BilinearForm::Policy::RForm:
            inv = BilinearForm::rform_inverse(F.host_, solve_pair_inverse(F));
            break;
        case BilinearForm::Policy::RFormInverse:
            inv = BilinearForm::rform(F.host_, solve_pair_inverse(F));
            break;
        case BilinearForm::Policy::Lift: {
            auto base_inv = std::make_shared<BilinearForm>(invert_form(*F.base_form_, max_degree));
            inv = BilinearForm::lift(F.host_, F.proj_, F.base_, std::move(base_inv));
            break;
        }
        case BilinearForm::Policy::Explicit: {
            auto basis = F.host_->alg()->basis(max_degree);
            std::map<std::pair<Word, Word>, int> col;
            for (const Word& u : basis)
                for (const Word& v : basis) col[{u, v}] = (int)col.size();
            std::vector<std::vector<Scalar>> A;
            std::vector<Scalar> rhs;
            for (const Word& u : basis)
                for (const Word& v : basis) {
                    std::vector<Scalar> row(col.size(), Scalar());
                    for (const auto& [lu, cu] : F.host_->coproduct_word(u).terms())
                        for (const auto& [lv, cv] : F.host_->coproduct_word(v).terms()) {
                            Scalar coef = cu * cv * F.eval_words(lu[0], lv[0]);
                            if (coef.is_zero()) continue;
                            auto it = col.find({lu[1], lv[1]});
                            if (it == col.end())
                                throw NotInvertible(F.host_->name() + ": legs escape the basis bound");
                            row[it->second] += coef;
                        }
                    A.push_back(std::move(row));
                    rhs.push_back(F.host_->counit_word(u) * F.host_->counit_word(v));
                }
            auto sol = solve_linear(A, rhs);
            if (!sol) throw NotInvertible(F.host_->name() + ": explicit form not invertible");
            std::map<std::pair<Word, Word>, Scalar> table;
            for (const auto& [k, i] : col) table[k] = (*sol)[i];
            inv = BilinearForm::explicit_table(F.host_, std::move(table), max_degree);
            break;
        }
        case BilinearForm::Policy::Composite: {
            std::vector<std::pair<std::shared_ptr<const BilinearForm>, bool>> factors;
            for (auto it = F.factors_.rbegin(); it != F.factors_.rend(); ++it)
                factors.push_back({std::make_shared<BilinearForm>(invert_form(*it->first, max_degree)),
                                   it->second});
            inv = BilinearForm::composite(F.host_, std::move(factors));
            break;
        }
        case BilinearForm::Policy::Scaled:
            inv = BilinearForm::scaled(F.host_,
                                       std::make_shared<BilinearForm>(invert_form(*F.base_form_, max_degree)),
                                       F.scale_);
            break;
        case BilinearForm::Policy::TensorSplit:
            inv = BilinearForm::tensor_split(
                F.host_, std::make_shared<BilinearForm>(invert_form(*F.split_f1_, max_degree)),
                std::make_shared<BilinearForm>(invert_form(*F.split_f2_, max_degree)), F.split_boundary_);
            break;
        default:
            throw std::logic_error("invert_form: unknown policy");
    }
    verify_inverse(F, inv, max_degree);
    return inv;
}

Report check_form(const BilinearForm& F, FormCheckMode mode, int max_degree) {
    Report rep;
    const HopfPtr& H = F.host();
    const auto& A = H->alg();
    auto basis = A->basis(max_degree);
    auto pair_str = [&](const Word& u, const Word& v) {
        return "(" + A->word_str(u) + ", " + A->word_str(v) + ")";
    };

    {
        bool ok = true;
        std::string witness;
        for (const Word& w : basis) {
            Scalar e = H->counit_word(w);
            if (F.eval_words(Word::one(), w) != e || F.eval_words(w, Word::one()) != e) {
                ok = false;
                witness = A->word_str(w);
                break;
            }
        }
        rep.check(ok, "unitality", "(Rnormalized)", witness);
    }

    if (mode == FormCheckMode::Cocycle) {
        bool ok = true;
        std::string witness;
        for (const Word& g : basis) {
            for (const Word& h : basis) {
                for (const Word& k : basis) {
                    if (A->degree(g) + A->degree(h) + A->degree(k) > max_degree + 1) continue;
                    Scalar lhs, rhs;
                    for (const auto& [lg, cg] : H->coproduct_word(g).terms())
                        for (const auto& [lh, ch] : H->coproduct_word(h).terms()) {
                            Scalar c = cg * ch * F.eval_words(lg[0], lh[0]);
                            if (c.is_zero()) continue;
                            lhs += c * F.eval(A->mul(Element(lg[1]), Element(lh[1])), Element(k));
                        }
                    for (const auto& [lh, ch] : H->coproduct_word(h).terms())
                        for (const auto& [lk, ck] : H->coproduct_word(k).terms()) {
                            Scalar c = ch * ck * F.eval_words(lh[0], lk[0]);
                            if (c.is_zero()) continue;
                            rhs += c * F.eval(Element(g), A->mul(Element(lh[1]), Element(lk[1])));
                        }
                    if (lhs != rhs) {
                        ok = false;
                        witness = "(" + A->word_str(g) + ", " + A->word_str(h) + ", " + A->word_str(k) + ")";
                        break;
                    }
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        rep.check(ok, "cocycle_condition", "(lcocycle)", witness);
        return rep;
    }

    // coquasitriangular / cotriangular modes
    BilinearForm Fbar = invert_form(F, max_degree);

    if (mode == FormCheckMode::Coquasitriangular) {
        {
            bool ok = true;
            std::string witness;
            for (const Word& h : basis) {
                for (const Word& k : basis) {
                    if (A->degree(h) + A->degree(k) > max_degree) continue;
                    Element lhs = A->mul(Element(k), Element(h));
                    Element rhs;
                    for (const auto& [lh, ch] : H->iterated_coproduct_word(h, 2).terms())
                        for (const auto& [lk, ck] : H->iterated_coproduct_word(k, 2).terms()) {
                            Scalar c = ch * ck * F.eval_words(lh[0], lk[0]);
                            if (c.is_zero()) continue;
                            c *= Fbar.eval_words(lh[2], lk[2]);
                            if (c.is_zero()) continue;
                            rhs = rhs + A->mul(Element(lh[1]), Element(lk[1])) * c;
                        }
                    if (lhs != rhs) {
                        ok = false;
                        witness = pair_str(h, k);
                        break;
                    }
                }
                if (!ok) break;
            }
            rep.check(ok, "opposite_product", "(gira-H)", witness);
        }
        {
            bool ok1 = true, ok2 = true;
            std::string w1, w2;
            for (const Word& h : basis) {
                for (const Word& k : basis) {
                    for (const Word& l : basis) {
                        if (A->degree(h) + A->degree(k) + A->degree(l) > max_degree + 1) continue;
                        if (ok1) {
                            Scalar lhs = F.eval(A->mul(Element(h), Element(k)), Element(l));
                            Scalar rhs;
                            for (const auto& [ll, cl] : H->coproduct_word(l).terms())
                                rhs += cl * F.eval_words(h, ll[0]) * F.eval_words(k, ll[1]);
                            if (lhs != rhs) {
                                ok1 = false;
                                w1 = "(" + A->word_str(h) + ", " + A->word_str(k) + ", " + A->word_str(l) + ")";
                            }
                        }
                        if (ok2) {
                            Scalar lhs = F.eval(Element(h), A->mul(Element(k), Element(l)));
                            Scalar rhs;
                            for (const auto& [lh, ch] : H->coproduct_word(h).terms())
                                rhs += ch * F.eval_words(lh[1], k) * F.eval_words(lh[0], l);
                            if (lhs != rhs) {
                                ok2 = false;
                                w2 = "(" + A->word_str(h) + ", " + A->word_str(k) + ", " + A->word_str(l) + ")";
                            }
                        }
                        if (!ok1 && !ok2) break;
                    }
                    if (!ok1 && !ok2) break;
                }
                if (!ok1 && !ok2) break;
            }
            rep.check(ok1, "product_first_slot", "(eq-iii)", w1);
            rep.check(ok2, "product_second_slot", "(eq-iii)", w2);
        }
        {
            // derived confirmations
            bool ok = true;
            std::string witness;
            for (const Word& h : basis) {
                for (const Word& k : basis) {
                    for (const Word& l : basis) {
                        if (A->degree(h) + A->degree(k) + A->degree(l) > max_degree + 1) continue;
                        Scalar lhs, rhs;
                        for (const auto& [lh, ch] : H->coproduct_word(h).terms())
                            for (const auto& [lk, ck] : H->coproduct_word(k).terms())
                                for (const auto& [ll, cl] : H->coproduct_word(l).terms()) {
                                    Scalar c = ch * ck * cl;
                                    lhs += c * F.eval_words(lh[0], lk[0]) * F.eval_words(lh[1], ll[0]) *
                                           F.eval_words(lk[1], ll[1]);
                                    rhs += c * F.eval_words(lk[0], ll[0]) * F.eval_words(lh[0], ll[1]) *
                                           F.eval_words(lh[1], lk[1]);
                                }
                        if (lhs != rhs) {
                            ok = false;
                            witness = "(" + A->word_str(h) + ", " + A->word_str(k) + ", " + A->word_str(l) + ")";
                            break;
                        }
                    }
                    if (!ok) break;
                }
                if (!ok) break;
            }
            rep.check(ok, "yang_baxter", "(YB)", witness);
        }
        {
            bool ok = true;
            std::string witness;
            for (const Word& h : basis) {
                for (const Word& k : basis) {
                    if (F.eval(H->antipode_word(h), Element(k)) != Fbar.eval_words(h, k) ||
                        Fbar.eval(Element(h), H->antipode_word(k)) != F.eval_words(h, k) ||
                        F.eval(H->antipode_word(h), H->antipode_word(k)) != F.eval_words(h, k)) {
                        ok = false;
                        witness = pair_str(h, k);
                        break;
                    }
                }
                if (!ok) break;
            }
            rep.check(ok, "antipode_compat", "(prop-R)", witness);
        }
    }

    if (mode == FormCheckMode::Cotriangular) {
        bool ok = true;
        std::string witness;
        for (const Word& h : basis) {
            for (const Word& k : basis) {
                Scalar v;
                for (const auto& [lh, ch] : H->coproduct_word(h).terms())
                    for (const auto& [lk, ck] : H->coproduct_word(k).terms())
                        v += ch * ck * F.eval_words(lh[0], lk[0]) * F.eval_words(lk[1], lh[1]);
                if (v != H->counit_word(h) * H->counit_word(k)) {
                    ok = false;
                    witness = pair_str(h, k) + " -> R*R21 = " + v.to_string();
                    break;
                }
            }
            if (!ok) break;
        }
        rep.check(ok, "cotriangular", "R = Rbar21", witness);
    }
    return rep;
}

Scalar Functional::eval_word(const Word& w) const {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    Scalar v;
    switch (kind_) {
        case Kind::Counit:
            v = host_->counit_word(w);
            break;
        case Kind::U: {
            for (const auto& [l, c] : host_->coproduct_word(w).terms())
                v += c * form_->eval(Element(l[0]), host_->antipode_word(l[1]));
            break;
        }
        case Kind::UBar: {
            for (const auto& [l, c] : host_->coproduct_word(w).terms())
                v += c * form_->eval(host_->antipode_word(l[0]), Element(l[1]));
            break;
        }
    }
    memo_.emplace(w, v);
    return v;
}

Scalar Functional::eval(const Element& e) const {
    Scalar s;
    for (const auto& [w, c] : e.terms()) s += c * eval_word(w);
    return s;
}

std::map<Word, Scalar> Functional::table(int max_degree) const {
    std::map<Word, Scalar> t;
    for (const Word& w : host_->alg()->basis(max_degree)) t[w] = eval_word(w);
    return t;
}

Functional special_functional(SpecialFunctional kind, const BilinearForm& F, int max_degree) {
    switch (kind) {
        case SpecialFunctional::UR:
        case SpecialFunctional::UGamma:
            return Functional(F.host(), Functional::Kind::U, std::make_shared<BilinearForm>(F));
        case SpecialFunctional::UBarR:
        case SpecialFunctional::UBarGamma:
            return Functional(F.host(), Functional::Kind::UBar,
                              std::make_shared<BilinearForm>(invert_form(F, max_degree)));
    }
    throw std::logic_error("special_functional: unknown kind");
}

}  // namespace hopfgal
