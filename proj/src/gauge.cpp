#include "hopfgal/gauge.hpp"

#include <set>

namespace hopfgal {

Element GaugeElement::apply_word(const Word& w, const Extension& E) const {
    if (w.empty()) return Element::unit();
    if (w.size() == 1) return gen_images.at(w.g[0]);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    // hk = h2 .u k2 R(S(h1) h3 (x) k1), so with f an algebra map for .u:
    // f(g w') = f(g2) f(w'2) R(S(g1) g3 (x) w'1)
    const HopfPtr& H = E.host();
    const PresPtr& P = E.A().alg();
    Word g = Word::single(w.g[0]);
    Word rest(std::vector<GenId>(w.g.begin() + 1, w.g.end()));
    Element r;
    for (const auto& [lh, ch] : H->iterated_coproduct_word(g, 2).terms()) {
        Element harg = H->mul(H->antipode_word(lh[0]), Element(lh[2]));
        for (const auto& [lk, ck] : H->coproduct_word(rest).terms()) {
            Scalar v = E.rform()->eval(harg, Element(lk[0]));
            if (v.is_zero()) continue;
            Element fh = apply(Element(lh[1]), E);
            Element fk = apply_word(lk[1], E);
            r = r + P->mul(fh, fk) * (ch * ck * v);
        }
    }
    memo_.emplace(w, r);
    return r;
}

Element GaugeElement::apply(const Element& e, const Extension& E) const {
    Element r;
    for (const auto& [w, c] : e.terms()) r = r + apply_word(w, E) * c;
    return r;
}

Element VerticalAutomorphism::apply_word(const Word& w, const PresPtr& alg) const {
    Element r = Element::unit();
    for (GenId g : w.g) r = alg->mul(r, gen_images.at(g));
    return r;
}

Element VerticalAutomorphism::apply(const Element& e, const PresPtr& alg) const {
    Element r;
    for (const auto& [w, c] : e.terms()) r = r + apply_word(w, alg) * c;
    return r;
}

VerticalAutomorphism VerticalAutomorphism::identity(const PresPtr& alg) {
    VerticalAutomorphism F;
    for (GenId g = 0; g < alg->gen_count(); ++g)
        F.gen_images.push_back(alg->normal_form(Element(Word::single(g))));
    return F;
}

Report verify_gauge(const GaugeElement& f, const Extension& E, int max_degree, bool require_star) {
    Report rep;
    const HopfPtr& H = E.host();
    const PresPtr& P = E.A().alg();
    auto basis = H->alg()->basis(max_degree);
    {
        bool ok = true;
        std::string witness;
        for (const Word& h : basis) {
            TensorElement lhs = E.A().coact(f.apply_word(h, E));
            TensorElement rhs(2);
            for (const auto& [l, c] : E.hbar().ad_word(h).terms()) {
                Element img = f.apply_word(l[0], E);
                for (const auto& [w1, c1] : img.terms()) rhs.add({w1, l[1]}, c * c1);
            }
            if (lhs != rhs) {
                ok = false;
                witness = H->alg()->word_str(h);
                break;
            }
        }
        rep.check(ok, "gauge_equivariant", "delta_A o f = (f x id) o Ad", witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (const Word& h : basis) {
            for (const Word& k : basis) {
                if (H->alg()->degree(h) + H->alg()->degree(k) > max_degree + 1) continue;
                Element lhs = f.apply(E.hbar().product_words(h, k), E);
                Element rhs = P->mul(f.apply_word(h, E), f.apply_word(k, E));
                if (lhs != rhs) {
                    ok = false;
                    witness = "(" + H->alg()->word_str(h) + ", " + H->alg()->word_str(k) + ")";
                    break;
                }
            }
            if (!ok) break;
        }
        rep.check(ok, "gauge_algebra_map", "f(h .u k) = f(h) f(k)", witness);
    }
    if (H->alg()->has_star() && P->has_star()) {
        bool ok = true;
        std::string witness;
        for (GenId g = 0; g < H->alg()->gen_count(); ++g) {
            Element lhs = P->star(f.gen_images.at(g));
            Element rhs = f.apply(H->alg()->star(Element(Word::single(g))), E);
            if (lhs != rhs) {
                ok = false;
                witness = H->alg()->gen(g).name;
                break;
            }
        }
        if (require_star)
            rep.check(ok, "gauge_star_compatible", "f(h*) = f(h)*", witness);
        else
            rep.info("gauge_star_compatible",
                     ok ? "holds" : "holds up to a unit phase (witness " + witness + ")",
                     "f(h*) = f(h)*");
    }
    return rep;
}

Report verify_vertical(const VerticalAutomorphism& F, const Extension& E, int max_degree) {
    Report rep;
    const PresPtr& P = E.A().alg();
    {
        bool ok = true;
        std::string witness;
        for (const auto& rule : P->rules()) {
            Element lhs = F.apply_word(rule.lhs, P);
            Element rhs = F.apply(rule.rhs, P);
            if (lhs != rhs) {
                ok = false;
                witness = P->word_str(rule.lhs);
                break;
            }
        }
        rep.check(ok, "vertical_algebra_map", "F respects the relations", witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (GenId g = 0; g < P->gen_count(); ++g) {
            TensorElement lhs = E.A().coact(F.gen_images.at(g));
            TensorElement rhs(2);
            for (const auto& [l, c] : E.A().coact_word(Word::single(g)).terms()) {
                Element img = F.apply_word(l[0], P);
                for (const auto& [w1, c1] : img.terms()) rhs.add({w1, l[1]}, c * c1);
            }
            if (lhs != rhs) {
                ok = false;
                witness = P->gen(g).name;
                break;
            }
        }
        rep.check(ok, "vertical_equivariant", "delta_A o F = (F x id) o delta_A", witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (const Element& b : E.coinv()) {
            if (F.apply(b, P) != b) {
                ok = false;
                witness = P->str(b);
                break;
            }
        }
        rep.check(ok, "vertical_fixes_base", "F|_B = id", witness);
    }
    if (P->has_star()) {
        bool ok = true;
        std::string witness;
        for (GenId g = 0; g < P->gen_count(); ++g) {
            Element lhs = P->star(F.gen_images.at(g));
            Element rhs = F.apply(P->star(Element(Word::single(g))), P);
            if (lhs != rhs) {
                ok = false;
                witness = P->gen(g).name;
                break;
            }
        }
        rep.check(ok, "vertical_star_compatible", "F(a*) = F(a)*", witness);
    }
    (void)max_degree;
    return rep;
}

GaugeElement gauge_unit(const Extension& E) {
    GaugeElement f;
    for (GenId g = 0; g < E.host()->alg()->gen_count(); ++g)
        f.gen_images.push_back(Element::unit(E.host()->counit_word(Word::single(g))));
    return f;
}

GaugeElement gauge_convolve(const GaugeElement& f, const GaugeElement& g, const Extension& E) {
    GaugeElement r;
    const HopfPtr& H = E.host();
    for (GenId x = 0; x < H->alg()->gen_count(); ++x) {
        Element v;
        for (const auto& [l, c] : H->coproduct_word(Word::single(x)).terms())
            v = v + E.A().alg()->mul(f.apply_word(l[0], E), g.apply_word(l[1], E)) * c;
        r.gen_images.push_back(v);
    }
    return r;
}

GaugeElement gauge_invert(const GaugeElement& f, const Extension& E) {
    GaugeElement r;
    for (GenId x = 0; x < E.host()->alg()->gen_count(); ++x)
        r.gen_images.push_back(f.apply(E.hbar().antipode_word(Word::single(x)), E));
    return r;
}

VerticalAutomorphism vertical_compose(const VerticalAutomorphism& F, const VerticalAutomorphism& G,
                                      const Extension& E) {
    // F . G = G o F
    VerticalAutomorphism r;
    for (GenId g = 0; g < E.A().alg()->gen_count(); ++g)
        r.gen_images.push_back(G.apply(F.gen_images.at(g), E.A().alg()));
    return r;
}

VerticalAutomorphism vertical_invert(const VerticalAutomorphism& F, const Extension& E) {
    // (inv-F): F^{-1}(a) = a(0) F(tau1(a(1))) tau2(a(1))
    VerticalAutomorphism r;
    const PresPtr& P = E.A().alg();
    for (GenId g = 0; g < P->gen_count(); ++g) {
        Element v;
        for (const auto& [l, c] : E.A().coact_word(Word::single(g)).terms()) {
            TensorElement t = translation_map(Element(l[1]), E);
            for (const auto& [lt, ct] : t.terms()) {
                Element m = P->mul(Element(l[0]), F.apply_word(lt[0], P));
                m = P->mul(m, Element(lt[1]));
                v = v + m * (c * ct);
            }
        }
        r.gen_images.push_back(v);
    }
    return r;
}

VerticalAutomorphism theta(const GaugeElement& f, const Extension& E) {
    // F_f(a) = a(0) f(a(1))
    VerticalAutomorphism r;
    const PresPtr& P = E.A().alg();
    for (GenId g = 0; g < P->gen_count(); ++g) {
        Element v;
        for (const auto& [l, c] : E.A().coact_word(Word::single(g)).terms())
            v = v + P->mul(Element(l[0]), f.apply_word(l[1], E)) * c;
        r.gen_images.push_back(v);
    }
    return r;
}

GaugeElement theta_inverse(const VerticalAutomorphism& F, const Extension& E) {
    // f_F(h) = tau1(h) F(tau2(h))
    GaugeElement r;
    const PresPtr& P = E.A().alg();
    for (GenId g = 0; g < E.host()->alg()->gen_count(); ++g) {
        Element v;
        TensorElement t = translation_map(Element(Word::single(g)), E);
        for (const auto& [l, c] : t.terms())
            v = v + P->mul(Element(l[0]), F.apply_word(l[1], P)) * c;
        r.gen_images.push_back(v);
    }
    return r;
}

GaugeElement gauge_from_character(const std::map<GenId, Scalar>& alpha, const Extension& E) {
    // f = (alpha (x) id) o Ad with alpha extended multiplicatively
    const HopfPtr& H = E.host();
    auto alpha_eval = [&](const Word& w) {
        Scalar s(1);
        for (GenId g : w.g) s *= alpha.at(g);
        return s;
    };
    GaugeElement f;
    for (GenId g = 0; g < H->alg()->gen_count(); ++g) {
        Element v;
        for (const auto& [l, c] : E.hbar().ad_word(Word::single(g)).terms()) {
            Scalar a;
            // first Ad leg evaluated through alpha
            a = c * alpha_eval(l[0]);
            if (a.is_zero()) continue;
            v.add(l[1], a);
        }
        // the image lands in A through the unit when the coaction is regular;
        // in general Ad legs already live in H = A's carrier for A = H bundles
        f.gen_images.push_back(v);
    }
    return f;
}

namespace {

// inverse-pair detection: gen -> partner with rule (g, g') -> 1
std::map<GenId, GenId> inverse_pairs(const PresPtr& P) {
    std::map<GenId, GenId> inv;
    for (const auto& rule : P->rules()) {
        if (rule.lhs.size() == 2 && rule.rhs == Element::unit())
            inv[rule.lhs.g[0]] = rule.lhs.g[1];
    }
    return inv;
}

}  // namespace

GaugeSolution solve_gauge(const Extension& E, int ansatz_degree) {
    GaugeSolution out;
    const HopfPtr& H = E.host();
    const PresPtr& HP = H->alg();
    const PresPtr& P = E.A().alg();

    bool coinv_trivial = true;
    for (const Element& b : E.coinv())
        if (b != Element::unit()) coinv_trivial = false;

    if (H->is_cocommutative()) {
        // images are forced into the coinvariants (lem:Gab)
        bool group_like = H->group_like_basis();
        auto inv = inverse_pairs(HP);
        if (group_like && coinv_trivial) {
            // characters into the ground ring: one unit parameter per
            // generator orbit; torsion relations specialize parameters
            std::map<GenId, Scalar> assign;
            std::set<GenId> done;
            std::vector<std::string> params;
            std::vector<std::pair<GenId, int>> torsion;  // g^k = 1
            for (const auto& rule : HP->rules()) {
                bool pow = rule.rhs == Element::unit() && rule.lhs.size() >= 2;
                if (!pow) continue;
                bool same = true;
                for (GenId g : rule.lhs.g) same = same && g == rule.lhs.g[0];
                if (same && (!inv.count(rule.lhs.g[0]) || inv.at(rule.lhs.g[0]) == rule.lhs.g[0]))
                    torsion.push_back({rule.lhs.g[0], (int)rule.lhs.size()});
            }
            std::map<GenId, int> torsion_of;
            for (auto& [g, k] : torsion) torsion_of[g] = k;
            int idx = 1;
            for (GenId g = 0; g < HP->gen_count(); ++g) {
                if (done.count(g)) continue;
                if (torsion_of.count(g)) {
                    done.insert(g);
                    continue;  // handled by enumeration below
                }
                std::string name = "lam" + std::to_string(idx++);
                params.push_back(name);
                assign[g] = Scalar::parameter(name);
                done.insert(g);
                auto it = inv.find(g);
                if (it != inv.end() && !done.count(it->second)) {
                    assign[it->second] = Scalar::parameter(name, -1);
                    done.insert(it->second);
                }
            }
            // enumerate torsion generators of order 2: values +-1
            std::vector<std::map<GenId, Scalar>> assigns{assign};
            for (auto& [g, k] : torsion) {
                if (k != 2) {
                    out.constraints.unknowns.push_back(HP->gen(g).name);
                    continue;
                }
                std::vector<std::map<GenId, Scalar>> next;
                for (auto a : assigns) {
                    a[g] = Scalar(1);
                    next.push_back(a);
                    a[g] = Scalar(-1);
                    next.push_back(a);
                }
                assigns = std::move(next);
            }
            // validate each candidate against all relations and keep solutions
            for (const auto& a : assigns) {
                bool ok = true;
                for (const auto& rule : HP->rules()) {
                    Scalar lhs(1);
                    for (GenId g : rule.lhs.g) lhs *= a.at(g);
                    Scalar rhs;
                    for (const auto& [w, c] : rule.rhs.terms()) {
                        Scalar t = c;
                        for (GenId g : w.g) t *= a.at(g);
                        rhs += t;
                    }
                    if (lhs != rhs) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                GaugeElement f;
                for (GenId g = 0; g < HP->gen_count(); ++g) f.gen_images.push_back(Element::unit(a.at(g)));
                out.solutions.push_back(std::move(f));
            }
            out.family_params = params;
            out.closed_form = true;
            return out;
        }
        if (coinv_trivial && !group_like) {
            // idempotent-style presentations: rational images solved from the
            // relations; supported patterns are x^2 = x and x^2 = 1
            std::vector<std::map<GenId, Scalar>> assigns{{}};
            // eliminations handled below
            // eliminations p -> e first: image determined by the others
            std::vector<std::pair<GenId, Element>> elim;
            for (const auto& rule : HP->rules())
                if (rule.lhs.size() == 1) elim.push_back({rule.lhs.g[0], rule.rhs});
            for (GenId g = 0; g < HP->gen_count(); ++g) {
                bool eliminated = false;
                for (auto& [e, _] : elim) eliminated = eliminated || e == g;
                if (eliminated) continue;
                // find g^2 -> g or g^2 -> 1
                std::vector<Scalar> values;
                for (const auto& rule : HP->rules()) {
                    if (rule.lhs.size() == 2 && rule.lhs.g[0] == g && rule.lhs.g[1] == g) {
                        if (rule.rhs == Element(Word::single(g))) values = {Scalar(0), Scalar(1)};
                        if (rule.rhs == Element::unit()) values = {Scalar(1), Scalar(-1)};
                    }
                }
                if (values.empty()) {
                    out.constraints.unknowns.push_back(HP->gen(g).name);
                    continue;
                }

                std::vector<std::map<GenId, Scalar>> next;
                for (const auto& a : assigns)
                    for (const Scalar& v : values) {
                        auto b = a;
                        b[g] = v;
                        next.push_back(b);
                    }
                assigns = std::move(next);
            }
            for (auto a : assigns) {
                // fill eliminated generators from their rules
                for (auto& [g, rhs] : elim) {
                    Scalar v;
                    for (const auto& [w, c] : rhs.terms()) {
                        Scalar t = c;
                        for (GenId x : w.g) t *= a.at(x);
                        v += t;
                    }
                    a[g] = v;
                }
                bool ok = true;
                for (const auto& rule : HP->rules()) {
                    Scalar lhs(1);
                    for (GenId g : rule.lhs.g) lhs *= a.at(g);
                    Scalar rhs;
                    for (const auto& [w, c] : rule.rhs.terms()) {
                        Scalar t = c;
                        for (GenId g : w.g) t *= a.at(g);
                        rhs += t;
                    }
                    if (lhs != rhs) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                GaugeElement f;
                for (GenId g = 0; g < HP->gen_count(); ++g) f.gen_images.push_back(Element::unit(a.at(g)));
                out.solutions.push_back(std::move(f));
            }
            out.closed_form = true;
            return out;
        }
        if (!coinv_trivial && group_like) {
            // abelian group algebra with a nontrivial base: units of B;
            // for the graded catalog case the solutions are the roots of
            // unity in the ground ring (images must be invertible in B)
            auto inv2 = inverse_pairs(HP);
            std::vector<std::map<GenId, Scalar>> assigns{{}};
            for (GenId g = 0; g < HP->gen_count(); ++g) {
                bool istorsion = false;
                int order = 0;
                for (const auto& rule : HP->rules()) {
                    bool same = rule.lhs.size() >= 2 && rule.rhs == Element::unit();
                    if (!same) continue;
                    for (GenId x : rule.lhs.g) same = same && x == g;
                    if (same) {
                        istorsion = true;
                        order = (int)rule.lhs.size();
                    }
                }
                if (istorsion && order == 2) {
                    std::vector<std::map<GenId, Scalar>> next;
                    for (const auto& a : assigns)
                        for (int s : {1, -1}) {
                            auto b = a;
                            b[g] = Scalar(s);
                            next.push_back(b);
                        }
                    assigns = std::move(next);
                } else if (!inv2.count(g) || assigns.front().count(g) == 0) {
                    // free part: unit parameter
                    std::string name = "mu" + std::to_string((int)g + 1);
                    for (auto& a : assigns)
                        if (!a.count(g)) {
                            a[g] = Scalar::parameter(name);
                            auto it = inv2.find(g);
                            if (it != inv2.end()) a[it->second] = Scalar::parameter(name, -1);
                        }
                }
            }
            for (const auto& a : assigns) {
                GaugeElement f;
                bool total = true;
                for (GenId g = 0; g < HP->gen_count(); ++g) {
                    if (!a.count(g)) {
                        total = false;
                        break;
                    }
                    f.gen_images.push_back(Element::unit(a.at(g)));
                }
                if (total) out.solutions.push_back(std::move(f));
            }
            out.closed_form = !out.solutions.empty();
            return out;
        }
    }

    // general case: characters alpha: H -> K (trivial base required for the
    // ansatz); emit the polynomial constraint system
    if (!coinv_trivial)
        throw AnsatzTooSmall(P->name() + ": general gauge ansatz needs a trivial coinvariant base");
    for (GenId g = 0; g < HP->gen_count(); ++g)
        out.constraints.unknowns.push_back("x_" + HP->gen(g).name);
    std::map<GenId, Scalar> unknown;
    for (GenId g = 0; g < HP->gen_count(); ++g)
        unknown[g] = Scalar::parameter("x_" + HP->gen(g).name);
    for (const auto& rule : HP->rules()) {
        Scalar lhs(1);
        for (GenId g : rule.lhs.g) lhs *= unknown.at(g);
        Scalar rhs;
        for (const auto& [w, c] : rule.rhs.terms()) {
            Scalar t = c;
            for (GenId g : w.g) t *= unknown.at(g);
            rhs += t;
        }
        Scalar eq = lhs - rhs;
        if (!eq.is_zero()) out.constraints.equations.push_back(eq);
    }
    out.closed_form = false;
    (void)ansatz_degree;
    return out;
}

LinearGaugeFamily linear_gauge_family(const Extension& E, int max_degree) {
    const PresPtr& P = E.A().alg();
    const HopfPtr& H = E.host();
    auto basis = P->basis(max_degree);
    {
        auto bigger = P->basis(max_degree + 1);
        if (bigger.size() != basis.size())
            throw AnsatzTooSmall(P->name() + ": carrier is not finite-dimensional at degree " +
                                 std::to_string(max_degree));
    }
    size_t n = basis.size();
    std::map<Word, int> index;
    for (size_t i = 0; i < n; ++i) index[basis[i]] = (int)i;
    // unknown t[v][w]: F(v) = sum_w t[v][w] w; F(1) = 1 pinned
    auto col = [n](int v, int w) { return v * (int)n + w; };
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs;
    {
        // F(1) = 1
        for (size_t w = 0; w < n; ++w) {
            std::vector<Scalar> row(n * n, Scalar());
            row[col(index[Word::one()], (int)w)] = Scalar(1);
            rows.push_back(std::move(row));
            rhs.push_back(basis[w].empty() ? Scalar(1) : Scalar());
        }
    }
    // equivariance delta F(v) = (F x id) delta(v) for each basis v
    for (size_t v = 0; v < n; ++v) {
        // lhs: sum_w t[v][w] delta(w); rhs: sum over delta(v) legs
        std::map<std::pair<Word, Word>, std::vector<Scalar>> eq;  // coords -> linear form in t
        for (size_t w = 0; w < n; ++w)
            for (const auto& [l, c] : E.A().coact_word(basis[w]).terms()) {
                auto key = std::make_pair(l[0], l[1]);
                auto& form = eq[key];
                if (form.empty()) form.assign(n * n, Scalar());
                form[col((int)v, (int)w)] += c;
            }
        for (const auto& [l, c] : E.A().coact_word(basis[v]).terms()) {
            auto it = index.find(l[0]);
            if (it == index.end()) throw AnsatzTooSmall("coaction leaves the truncated basis");
            for (size_t w = 0; w < n; ++w) {
                auto key = std::make_pair(basis[w], l[1]);
                auto& form = eq[key];
                if (form.empty()) form.assign(n * n, Scalar());
                form[col(it->second, (int)w)] += -c;
            }
        }
        for (auto& [key, form] : eq) {
            (void)key;
            rows.push_back(form);
            rhs.push_back(Scalar());
        }
    }
    // solve: particular + nullspace
    auto particular = solve_linear(rows, rhs);
    if (!particular) throw std::logic_error("linear_gauge_family: inconsistent system");
    auto null_basis = nullspace(rows, (int)(n * n));
    LinearGaugeFamily fam;
    fam.dimension = (int)null_basis.size();
    // family matrix entries as polynomials in fresh parameters s1..sk
    std::vector<Scalar> entries((size_t)n * n);
    for (size_t i = 0; i < entries.size(); ++i) entries[i] = (*particular)[i];
    for (size_t k = 0; k < null_basis.size(); ++k) {
        Scalar s = Scalar::parameter("s" + std::to_string(k + 1));
        for (size_t i = 0; i < entries.size(); ++i) entries[i] += s * null_basis[k][i];
    }
    // determinant of the matrix [t[v][w]] (small n)
    std::vector<int> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = (int)i;
    Scalar det;
    std::function<void(size_t, int, Scalar)> go = [&](size_t depth, int sign, Scalar acc) {
        if (depth == n) {
            det += acc * Scalar(sign);
            return;
        }
        for (size_t w = 0; w < n; ++w) {
            bool used = false;
            for (size_t d = 0; d < depth; ++d) used = used || perm[d] == (int)w;
            if (used) continue;
            perm[depth] = (int)w;
            int s2 = sign;
            for (size_t d = 0; d < depth; ++d)
                if (perm[d] > (int)w) s2 = -s2;
            go(depth + 1, s2, acc * entries[col((int)depth, (int)w)]);
        }
    };
    go(0, 1, Scalar(1));
    fam.determinant = det;
    // reparameterize a 1-dimensional family by the projection-basis entry
    // used in the reports: a = coefficient of the nontrivial projection
    if (fam.dimension == 1 && n == 2 && H->alg()->gen_count() >= 1) {
        // basis {1, p}: F(p) = x + y p; p-basis coordinate a = x + y
        Scalar x = entries[col(1, 0)];
        Scalar y = entries[col(1, 1)];
        Scalar a_of_s = x + y;  // affine in s1
        // substitute s1 = (a - a0) / a1
        Scalar a0 = a_of_s, a1;
        {
            // split a_of_s = a0 + a1 s1
            Scalar s1 = Scalar::parameter("s1");
            std::map<ParamId, Scalar> sub0{{param_id("s1"), Scalar(0)}};
            std::map<ParamId, Scalar> sub1{{param_id("s1"), Scalar(1)}};
            a0 = a_of_s.substitute(sub0);
            a1 = a_of_s.substitute(sub1) - a0;
        }
        if (a1.is_unit_monomial()) {
            Scalar a = Scalar::parameter("a");
            Scalar s_of_a = (a - a0) * a1.inverse_unit();
            std::map<ParamId, Scalar> sub{{param_id("s1"), s_of_a}};
            fam.determinant = fam.determinant.substitute(sub);
            fam.parameter = "a";
        } else {
            fam.parameter = "s1";
        }
    }
    fam.excluded_locus = fam.determinant.to_string() + " = 0";
    return fam;
}

GaugeElement transport_twist(const GaugeElement& f, const Extension& E, const Extension& Eg,
                             const TwistContext& ctx) {
    // Gamma_Q(f): h -> f(Q(h)), expressed over the twisted bases
    GaugeElement r;
    const SigmaPtr& sA = Eg.sigma_a();
    for (GenId g = 0; g < ctx.twisted_hopf()->alg()->gen_count(); ++g) {
        Element qh = q_map(Element(Word::single(g)), ctx, true);
        Element img = f.apply(qh, E);
        r.gen_images.push_back(sA ? sA->to_deformed(img) : img);
    }
    return r;
}

VerticalAutomorphism transport_twist(const VerticalAutomorphism& F, const Extension& E,
                                     const Extension& Eg, const TwistContext& ctx) {
    // Gamma(F) is the same linear map; tables move to the twisted bases
    VerticalAutomorphism r;
    const SigmaPtr& sA = Eg.sigma_a();
    const PresPtr& P = E.A().alg();
    for (GenId g = 0; g < P->gen_count(); ++g) {
        Element img = F.gen_images.at(g);
        r.gen_images.push_back(sA ? sA->to_deformed(img) : img);
    }
    (void)ctx;
    return r;
}

std::pair<VerticalAutomorphism, VerticalAutomorphism> product_gauge_split(
    const VerticalAutomorphism& F, const TensorExtension& T) {
    const PresPtr& carrier = T.E.A().alg();
    auto restrict_to = [&](const std::vector<GenId>& fgens, const std::vector<GenId>& other) {
        VerticalAutomorphism r;
        for (GenId g : fgens) {
            const Element& img = F.gen_images.at(g);
            Element back;
            for (const auto& [w, c] : img.terms()) {
                Word bw;
                for (GenId x : w.g) {
                    bool foreign = false;
                    for (GenId o : other) foreign = foreign || o == x;
                    if (foreign)
                        throw NotSplit("restriction of F leaves its factor on generator " +
                                       carrier->gen(g).name + ": " + carrier->str(img));
                    // translate the carrier id back to the factor id
                    GenId fid = 0;
                    for (GenId i = 0; i < (GenId)fgens.size(); ++i)
                        if (fgens[i] == x) fid = i;
                    bw.g.push_back(fid);
                }
                back.add(bw, c);
            }
            r.gen_images.push_back(back);
        }
        return r;
    };
    return {restrict_to(T.left_gens, T.right_gens), restrict_to(T.right_gens, T.left_gens)};
}

VerticalAutomorphism product_gauge_assemble(const VerticalAutomorphism& F1,
                                            const VerticalAutomorphism& F2,
                                            const TensorExtension& T) {
    VerticalAutomorphism r;
    auto lift = [&](const Element& e, const std::vector<GenId>& m) {
        Element out;
        for (const auto& [w, c] : e.terms()) {
            Word lw;
            for (GenId g : w.g) lw.g.push_back(m[g]);
            out.add(lw, c);
        }
        return out;
    };
    for (size_t g = 0; g < T.left_gens.size(); ++g)
        r.gen_images.push_back(lift(F1.gen_images.at(g), T.left_gens));
    for (size_t g = 0; g < T.right_gens.size(); ++g)
        r.gen_images.push_back(lift(F2.gen_images.at(g), T.right_gens));
    return r;
}

}  // namespace hopfgal
