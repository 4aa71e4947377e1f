#include "hopfgal/comodule.hpp"

namespace hopfgal {

ComoduleAlgebra::ComoduleAlgebra(PresPtr alg, HopfPtr host, std::vector<TensorElement> coactions)
    : alg_(std::move(alg)), host_(std::move(host)), coact_(std::move(coactions)) {
    if (coact_.size() != alg_->gen_count())
        throw std::invalid_argument(alg_->name() + ": coaction table size mismatch");
    for (auto& t : coact_) {
        TensorElement n(2);
        for (const auto& [l, c] : t.terms()) {
            Element e1 = alg_->normal_form_word(l[0]);
            Element e2 = host_->alg()->normal_form_word(l[1]);
            for (const auto& [w1, c1] : e1.terms())
                for (const auto& [w2, c2] : e2.terms()) n.add({w1, w2}, c * c1 * c2);
        }
        t = std::move(n);
    }
}

ComoduleAlgebra ComoduleAlgebra::regular(HopfPtr H) {
    std::vector<TensorElement> co;
    for (GenId g = 0; g < H->alg()->gen_count(); ++g) co.push_back(H->coproduct_word(Word::single(g)));
    return ComoduleAlgebra(H->alg(), H, std::move(co));
}

TensorElement ComoduleAlgebra::coact_word(const Word& w) const {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    TensorElement r(2);
    if (w.empty()) {
        r.add({Word::one(), Word::one()}, Scalar(1));
    } else if (w.size() == 1) {
        r = coact_.at(w.g[0]);
    } else {
        Word left(std::vector<GenId>(w.g.begin(), w.g.begin() + w.size() / 2));
        Word right(std::vector<GenId>(w.g.begin() + w.size() / 2, w.g.end()));
        r = tensor_mul(coact_word(left), coact_word(right), {alg_, host_->alg()});
    }
    memo_.emplace(w, r);
    return r;
}

TensorElement ComoduleAlgebra::coact(const Element& e) const {
    TensorElement r(2);
    for (const auto& [w, c] : e.terms()) r = r + coact_word(w) * c;
    return r;
}

std::vector<Element> coinvariants(const ComoduleAlgebra& A, int max_degree) {
    auto basis = A.alg()->basis(max_degree);
    std::map<std::pair<Word, Word>, int> rowidx;
    std::vector<std::vector<Scalar>> rows;  // row per (A-word, H-word), column per basis word
    auto row_of = [&](const Word& a, const Word& h) -> std::vector<Scalar>& {
        auto key = std::make_pair(a, h);
        auto it = rowidx.find(key);
        if (it == rowidx.end()) {
            it = rowidx.emplace(key, (int)rows.size()).first;
            rows.emplace_back(basis.size(), Scalar());
        }
        return rows[it->second];
    };
    for (size_t j = 0; j < basis.size(); ++j) {
        TensorElement d = A.coact_word(basis[j]);
        d.add({basis[j], Word::one()}, Scalar(-1));
        for (const auto& [l, c] : d.terms()) row_of(l[0], l[1])[j] = c;
    }
    auto ns = nullspace(rows, (int)basis.size());
    std::vector<Element> out;
    for (const auto& v : ns) {
        Element e;
        for (size_t j = 0; j < basis.size(); ++j) e.add(basis[j], v[j]);
        if (e.is_zero()) continue;
        // normalize so the leading (largest) word has coefficient 1 when possible
        const auto& lead = *e.terms().rbegin();
        if (lead.second.is_unit_monomial()) e = e * lead.second.inverse_unit();
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(),
              [&](const Element& x, const Element& y) {
                  return A.alg()->word_less(x.terms().rbegin()->first, y.terms().rbegin()->first);
              });
    return out;
}

Report check_comodule(const ComoduleAlgebra& A, ComoduleCheckMode mode, int max_degree,
                      const BilinearForm* R) {
    Report rep;
    const auto& P = A.alg();
    const auto& H = A.host();
    auto basis = P->basis(max_degree);
    auto pair_str = [&](const Word& u, const Word& v) {
        return "(" + P->word_str(u) + ", " + P->word_str(v) + ")";
    };

    if (mode == ComoduleCheckMode::Axioms) {
        {
            bool ok = true;
            std::string witness;
            for (const Word& w : basis) {
                TensorElement d = A.coact_word(w);
                TensorElement left(3), right(3);
                for (const auto& [l, c] : d.terms()) {
                    for (const auto& [lh, ch] : H->coproduct_word(l[1]).terms())
                        left.add({l[0], lh[0], lh[1]}, c * ch);
                    for (const auto& [la, ca] : A.coact_word(l[0]).terms())
                        right.add({la[0], la[1], l[1]}, c * ca);
                }
                Element counit_side;
                for (const auto& [l, c] : d.terms()) counit_side.add(l[0], c * H->counit_word(l[1]));
                if (left != right || counit_side != Element(w)) {
                    ok = false;
                    witness = P->word_str(w);
                    break;
                }
            }
            rep.check(ok, "comodule_axioms", "(eqn:Hcomodule)", witness);
        }
        {
            bool ok = true;
            std::string witness;
            for (const Word& u : basis) {
                for (const Word& v : basis) {
                    if (P->degree(u) + P->degree(v) > max_degree) continue;
                    TensorElement lhs = A.coact(P->mul(Element(u), Element(v)));
                    TensorElement rhs = tensor_mul(A.coact_word(u), A.coact_word(v), {P, H->alg()});
                    if (lhs != rhs) {
                        ok = false;
                        witness = pair_str(u, v);
                        break;
                    }
                }
                if (!ok) break;
            }
            rep.check(ok, "coaction_algebra_map", "delta(ab) = delta(a)delta(b)", witness);
        }
        return rep;
    }

    if (mode == ComoduleCheckMode::QuasiCommutative) {
        if (!R) throw std::invalid_argument("check_comodule: quasi-commutativity needs an R-form");
        BilinearForm Rbar = invert_form(*R, max_degree);
        bool q1 = true, q2 = true, q3 = true, equiv = true, mmap = true;
        std::string w1, w2, w3, wm;
        for (const Word& a : basis) {
            for (const Word& c : basis) {
                if (P->degree(a) + P->degree(c) > max_degree) continue;
                Element prod = P->mul(Element(a), Element(c));
                Element rhs1, rhs2;
                for (const auto& [lc, cc] : A.coact_word(c).terms())
                    for (const auto& [la, ca] : A.coact_word(a).terms()) {
                        Scalar v1 = Rbar.eval_words(lc[1], la[1]);
                        if (!v1.is_zero())
                            rhs1 = rhs1 + P->mul(Element(lc[0]), Element(la[0])) * (cc * ca * v1);
                        Scalar v2 = R->eval_words(la[1], lc[1]);
                        if (!v2.is_zero())
                            rhs2 = rhs2 + P->mul(Element(lc[0]), Element(la[0])) * (cc * ca * v2);
                    }
                bool e1 = prod == rhs1, e2 = prod == rhs2;
                // (qcomm3): c0 a0 (x) Ad(c1)-contracted vs a0 c0 (x) c1' R(c2' (x) a1)
                TensorElement lhs3(2), rhs3(2);
                for (const auto& [lc, cc] : A.coact_word(c).terms())
                    for (const auto& [la, ca] : A.coact_word(a).terms()) {
                        // Ad legs of the H-leg of c
                        TensorElement ad_legs(2);
                        for (const auto& [l, cl] : H->iterated_coproduct_word(lc[1], 2).terms()) {
                            Element tail = H->mul(H->antipode_word(l[0]), Element(l[2]));
                            for (const auto& [tw, tc] : tail.terms()) ad_legs.add({l[1], tw}, cl * tc);
                        }
                        for (const auto& [ad_l, ad_c] : ad_legs.terms()) {
                            Scalar v = R->eval(Element(ad_l[1]), Element(la[1]));
                            if (v.is_zero()) continue;
                            Element p = P->mul(Element(lc[0]), Element(la[0]));
                            for (const auto& [pw, pc] : p.terms())
                                lhs3.add({pw, ad_l[0]}, cc * ca * ad_c * v * pc);
                        }
                        for (const auto& [lh, ch] : H->coproduct_word(lc[1]).terms()) {
                            Scalar v = R->eval(Element(lh[1]), Element(la[1]));
                            if (v.is_zero()) continue;
                            Element p = P->mul(Element(la[0]), Element(lc[0]));
                            for (const auto& [pw, pc] : p.terms())
                                rhs3.add({pw, lh[0]}, cc * ca * ch * v * pc);
                        }
                    }
                bool e3 = lhs3 == rhs3;
                if (q1 && !e1) { q1 = false; w1 = pair_str(a, c); }
                if (q2 && !e2) { q2 = false; w2 = pair_str(a, c); }
                if (q3 && !e3) { q3 = false; w3 = pair_str(a, c); }
                if (e1 != e2 || e2 != e3) equiv = false;
            }
        }
        rep.check(q1, "quasi_commutative_1", "(qcomm1)", w1);
        rep.check(q2, "quasi_commutative_2", "(qcomm2)", w2);
        rep.check(q3, "quasi_commutative_3", "(qcomm3)", w3);
        rep.check(equiv, "qcomm_equivalence", "(qcomm1)<=>(qcomm2)<=>(qcomm3)", "forms disagree");
        // multiplication as a map A (.) A -> A is an algebra map iff qc
        {
            FormPtr Rp = std::make_shared<BilinearForm>(*R);
            auto ca = carrier(A);
            BraidedTensorAlgebra AA(ca, ca, Rp);
            for (const Word& a : basis) {
                for (const Word& c : basis) {
                    if (P->degree(a) + P->degree(c) > max_degree) continue;
                    TensorElement x = AA.embed(Element(a), Element(Word::one()));
                    // m(x dot y) vs m(x) m(y) on elementary pairs (a (x) c), (a' (x) c')
                    for (const Word& a2 : basis) {
                        if (P->degree(a2) + P->degree(a) + P->degree(c) > max_degree) continue;
                        TensorElement xy = AA.mul(AA.embed(Element(a), Element(c)),
                                                  AA.embed(Element(a2), Element(Word::one())));
                        Element lhs;
                        for (const auto& [l, cc] : xy.terms())
                            lhs = lhs + P->mul(Element(l[0]), Element(l[1])) * cc;
                        Element rhs = P->mul(P->mul(Element(a), Element(c)), Element(a2));
                        if (lhs != rhs) {
                            mmap = false;
                            wm = "(" + P->word_str(a) + " (x) " + P->word_str(c) + ", " + P->word_str(a2) + " (x) 1)";
                            break;
                        }
                    }
                    if (!mmap) break;
                }
                if (!mmap) break;
            }
            rep.check(mmap, "multiplication_algebra_map", "(qclemma)", wm);
        }
        return rep;
    }

    // BaseCentral
    {
        auto B = coinvariants(A, max_degree);
        bool ok = true;
        std::string witness;
        for (const Element& b : B) {
            for (GenId g = 0; g < P->gen_count(); ++g) {
                Element x(Word::single(g));
                if (P->mul(b, x) != P->mul(x, b)) {
                    ok = false;
                    witness = P->str(b) + " vs " + P->gen(g).name;
                    break;
                }
            }
            if (!ok) break;
        }
        rep.check(ok, "base_central", "(remBinZ)", witness);
        rep.info("coinvariant_count", std::to_string(B.size()) + " basis elements at degree " +
                                          std::to_string(max_degree));
    }
    return rep;
}

namespace {

class AlgebraCarrier final : public ComodCarrier {
public:
    explicit AlgebraCarrier(ComoduleAlgebra A) : A_(std::move(A)) {}
    PresPtr alg() const override { return A_.alg(); }
    HopfPtr host() const override { return A_.host(); }
    Element mul(const Element& a, const Element& b) const override { return A_.mul(a, b); }
    TensorElement coact_word(const Word& w) const override { return A_.coact_word(w); }

private:
    ComoduleAlgebra A_;
};

class BraidedCarrier final : public ComodCarrier {
public:
    explicit BraidedCarrier(BraidedHopf B) : B_(std::move(B)) {}
    PresPtr alg() const override { return B_.alg(); }
    HopfPtr host() const override { return B_.host_hopf(); }
    Element mul(const Element& a, const Element& b) const override { return B_.product(a, b); }
    TensorElement coact_word(const Word& w) const override { return B_.ad_word(w); }

private:
    BraidedHopf B_;
};

}  // namespace

CarrierPtr carrier(ComoduleAlgebra A) { return std::make_shared<AlgebraCarrier>(std::move(A)); }
CarrierPtr carrier(BraidedHopf B) { return std::make_shared<BraidedCarrier>(std::move(B)); }

TensorElement braiding_psi(const TensorElement& t, const ComodCarrier& V, const ComodCarrier& W,
                           const BilinearForm& R) {
    if (t.rank() != 2) throw std::invalid_argument("braiding_psi: rank-2 input expected");
    TensorElement r(2);
    for (const auto& [l, c] : t.terms())
        for (const auto& [lv, cv] : V.coact_word(l[0]).terms())
            for (const auto& [lw, cw] : W.coact_word(l[1]).terms()) {
                Scalar s = R.eval_words(lv[1], lw[1]);
                if (s.is_zero()) continue;
                r.add({lw[0], lv[0]}, c * cv * cw * s);
            }
    return r;
}

BraidedTensorAlgebra::BraidedTensorAlgebra(CarrierPtr left, CarrierPtr right, FormPtr rform)
    : left_(std::move(left)), right_(std::move(right)), rform_(std::move(rform)) {
    if (left_->host() != right_->host())
        throw HostMismatch("braided tensor product: carriers over different Hopf algebras");
    if (rform_->host() != left_->host())
        throw HostMismatch("braided tensor product: R-form lives on a different Hopf algebra");
    host_ = left_->host();
}

TensorElement BraidedTensorAlgebra::unit() const {
    TensorElement t(2);
    t.add({Word::one(), Word::one()}, Scalar(1));
    return t;
}

TensorElement BraidedTensorAlgebra::mul(const TensorElement& x, const TensorElement& y) const {
    // (a (x) c) dot (a' (x) c') = a a'(0) (x) c(0) c'  R(c(1) (x) a'(1))
    TensorElement r(2);
    for (const auto& [lx, cx] : x.terms())
        for (const auto& [ly, cy] : y.terms())
            for (const auto& [la, ca] : left_->coact_word(ly[0]).terms())
                for (const auto& [lc, cc] : right_->coact_word(lx[1]).terms()) {
                    Scalar v = rform_->eval_words(lc[1], la[1]);
                    if (v.is_zero()) continue;
                    Element p1 = left_->mul(Element(lx[0]), Element(la[0]));
                    Element p2 = right_->mul(Element(lc[0]), Element(ly[1]));
                    Scalar coef = cx * cy * ca * cc * v;
                    for (const auto& [w1, c1] : p1.terms())
                        for (const auto& [w2, c2] : p2.terms()) r.add({w1, w2}, coef * c1 * c2);
                }
    return r;
}

TensorElement BraidedTensorAlgebra::coact(const TensorElement& x) const {
    TensorElement r(3);
    for (const auto& [l, c] : x.terms())
        for (const auto& [la, ca] : left_->coact_word(l[0]).terms())
            for (const auto& [lc, cc] : right_->coact_word(l[1]).terms()) {
                Element h = host_->mul(Element(la[1]), Element(lc[1]));
                for (const auto& [hw, hc] : h.terms()) r.add({la[0], lc[0], hw}, c * ca * cc * hc);
            }
    return r;
}

std::vector<std::vector<Word>> BraidedTensorAlgebra::pair_basis(int max_degree) const {
    std::vector<std::vector<Word>> out;
    auto bl = left_->alg()->basis(max_degree);
    auto br = right_->alg()->basis(max_degree);
    for (const Word& u : bl)
        for (const Word& v : br) {
            if (left_->alg()->degree(u) + right_->alg()->degree(v) > max_degree) continue;
            out.push_back({u, v});
        }
    return out;
}

BraidedTensorAlgebra braided_tensor_product(const ComoduleAlgebra& A, const ComoduleAlgebra& C,
                                            FormPtr R) {
    return BraidedTensorAlgebra(carrier(A), carrier(C), std::move(R));
}

BalancedTensor::BalancedTensor(BraidedTensorAlgebra square, std::vector<Element> base_basis,
                               int max_degree)
    : square_(std::move(square)), base_basis_(std::move(base_basis)), degree_(max_degree) {
    trivial_ = true;
    for (const Element& b : base_basis_)
        if (b != Element::unit()) trivial_ = false;
    if (trivial_) return;
    // products of two reduced pairs stay inside a 4x window; columns are
    // ordered by descending total degree so reduction lowers degree
    pairs_ = square_.pair_basis(4 * max_degree);
    const PresPtr& P = square_.left()->alg();
    const PresPtr& Q = square_.right()->alg();
    std::sort(pairs_.begin(), pairs_.end(), [&](const auto& x, const auto& y) {
        int dx = P->degree(x[0]) + Q->degree(x[1]);
        int dy = P->degree(y[0]) + Q->degree(y[1]);
        if (dx != dy) return dx > dy;
        return y < x;
    });
    for (size_t i = 0; i < pairs_.size(); ++i) pair_index_[pairs_[i]] = (int)i;
    // ideal rows x b (x) y - x (x) b y within the window
    for (const Element& b : base_basis_) {
        if (b == Element::unit()) continue;
        int bd = 0;
        for (const auto& [w, c] : b.terms()) bd = std::max(bd, P->degree(w));
        for (const auto& x : P->basis(4 * max_degree - bd))
            for (const auto& y : P->basis(4 * max_degree - bd)) {
                if (P->degree(x) + P->degree(y) + bd > 4 * max_degree) continue;
                TensorElement v = TensorElement::outer(P->mul(Element(x), b), Element(y)) -
                                  TensorElement::outer(Element(x), P->mul(b, Element(y)));
                SparseRow row = to_row(v);
                if (!row.empty()) ideal_.insert(std::move(row));
            }
    }
}

SparseRow BalancedTensor::to_row(const TensorElement& x) const {
    SparseRow row;
    for (const auto& [l, c] : x.terms()) {
        auto it = pair_index_.find(l);
        if (it == pair_index_.end())
            throw std::out_of_range("BalancedTensor: element exceeds the truncation window: (" +
                                    square_.left()->alg()->word_str(l[0]) + ", " +
                                    square_.right()->alg()->word_str(l[1]) + ")");
        row[it->second] = FracScalar(c);
    }
    return row;
}

TensorElement BalancedTensor::reduce(const TensorElement& x) const {
    if (trivial_ || x.is_zero()) return x;
    SparseRow row = ideal_.reduce(to_row(x));
    TensorElement r(2);
    for (const auto& [col, v] : row) {
        FracScalar f = v;
        f.reduce();
        Scalar q;
        if (!f.den.is_one()) {
            if (!f.num.divide_exact(f.den, q)) throw std::logic_error("BalancedTensor: non-ring residue");
        } else {
            q = f.num;
        }
        r.add(pairs_[col], q);
    }
    return r;
}

size_t BalancedTensor::quotient_dim() const { return pairs_.size() - ideal_.rank(); }

bool ModuleCoaction::comodule_axioms(std::string* witness) const {
    for (int i = 0; i < dim; ++i) {
        // (id x eps) delta = id: sum_j e_j eps(h_ij) = e_i
        for (const auto& [j, h] : mat[i]) {
            Scalar v = host->counit(h);
            if (j == i ? !(v.is_one()) : !v.is_zero()) {
                if (witness) *witness = "counit fails at basis index " + std::to_string(i);
                return false;
            }
        }
        // coassociativity: sum_j mat[i][j] (x) Delta(h_ij) = sum_{j,k} mat[j][k] path
        // (delta x id) delta (e_i) = sum_{j,k} e_k (x) mat[j][k] (x) mat[i][j]
        // (id x Delta) delta (e_i) = sum_j e_j (x) Delta(mat[i][j])
        std::map<int, TensorElement> lhs, rhs;
        for (const auto& [j, h] : mat[i]) {
            TensorElement d = host->coproduct(h);
            auto it = rhs.find(j);
            if (it == rhs.end())
                rhs.emplace(j, d);
            else
                it->second = it->second + d;
        }
        for (const auto& [j, h] : mat[i])
            for (const auto& [k, g] : mat[j]) {
                TensorElement t = TensorElement::outer(g, h);
                auto it = lhs.find(k);
                if (it == lhs.end())
                    lhs.emplace(k, t);
                else
                    it->second = it->second + t;
            }
        for (auto& [k, t] : lhs) {
            auto it = rhs.find(k);
            TensorElement r = it == rhs.end() ? TensorElement(2) : it->second;
            if (t != r) {
                if (witness) *witness = "coassociativity fails at basis index " + std::to_string(i);
                return false;
            }
        }
        for (auto& [k, t] : rhs) {
            if (!lhs.count(k) && !t.is_zero()) {
                if (witness) *witness = "coassociativity fails at basis index " + std::to_string(i);
                return false;
            }
        }
    }
    return true;
}

bool ModuleCoaction::compatible(const ModuleCoaction& other, std::string* witness) const {
    // (MHH) with delta1 = *this, delta2 = other:
    // sum_j h_{jl} (x) k_{ij} = sum_j h_{ij} (x) k_{jl} in H (x) H for all i,l
    for (int i = 0; i < dim; ++i) {
        std::map<int, TensorElement> lhs, rhs;
        for (const auto& [j, k] : other.mat[i])
            for (const auto& [l, h] : mat[j]) {
                TensorElement t = TensorElement::outer(h, k);
                auto it = lhs.find(l);
                if (it == lhs.end()) lhs.emplace(l, t);
                else it->second = it->second + t;
            }
        for (const auto& [j, h] : mat[i])
            for (const auto& [l, k] : other.mat[j]) {
                TensorElement t = TensorElement::outer(h, k);
                auto it = rhs.find(l);
                if (it == rhs.end()) rhs.emplace(l, t);
                else it->second = it->second + t;
            }
        for (int l = 0; l < dim; ++l) {
            TensorElement a = lhs.count(l) ? lhs[l] : TensorElement(2);
            TensorElement b = rhs.count(l) ? rhs[l] : TensorElement(2);
            if (a != b) {
                if (witness)
                    *witness = "(MHH) fails at basis indices (" + std::to_string(i) + ", " +
                               std::to_string(l) + ")";
                return false;
            }
        }
    }
    return true;
}

ModuleCoaction compose_coactions(const ModuleCoaction& delta1, const ModuleCoaction& delta2,
                                 bool second_after_first) {
    if (delta1.host != delta2.host || delta1.dim != delta2.dim)
        throw IncompatibleCoactions("compose_coactions: mismatched carriers");
    std::string w;
    if (!delta1.compatible(delta2, &w)) throw IncompatibleCoactions(w);
    const ModuleCoaction& first = second_after_first ? delta1 : delta2;
    const ModuleCoaction& second = second_after_first ? delta2 : delta1;
    ModuleCoaction out;
    out.host = delta1.host;
    out.dim = delta1.dim;
    out.mat.resize(out.dim);
    // v -> second(first-leg) with legs multiplied: e_i -> sum e_l (x) k_{jl} h_{ij}
    for (int i = 0; i < out.dim; ++i)
        for (const auto& [j, h] : first.mat[i])
            for (const auto& [l, k] : second.mat[j]) {
                Element prod = out.host->mul(k, h);
                auto it = out.mat[i].find(l);
                if (it == out.mat[i].end())
                    out.mat[i].emplace(l, prod);
                else
                    it->second = it->second + prod;
            }
    std::string w2;
    if (!out.comodule_axioms(&w2)) throw IncompatibleCoactions("composed coaction: " + w2);
    return out;
}

}  // namespace hopfgal
