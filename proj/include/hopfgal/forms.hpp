#pragma once

#include <functional>
#include <memory>

#include "hopfgal/hopf.hpp"

namespace hopfgal {

struct PolicyUndefined : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bilinear form on H (x) H with an extension policy.  Houses universal
// R-forms, 2-cocycles, their convolution inverses and convolution composites.
class BilinearForm {
public:
    enum class Policy {
        Trivial,      // eps (x) eps
        Bicharacter,  // generators carry free-abelian weights; fully multiplicative
        RForm,        // R(hk (x) l) = R(h (x) l1) R(k (x) l2); R(h (x) kl) = R(h2 (x) k) R(h1 (x) l)
        RFormInverse, // mirrored laws of the convolution inverse
        Lift,         // pullback along a Hopf projection onto a base form
        Explicit,     // basis-pair table up to a degree bound
        Composite,    // convolution product of factors, each optionally flipped
        Scaled,       // base form composed with a diagonal word rescaling
        TensorSplit   // (R (x) R')(hk (x) h'k') = R(h (x) h') R'(k (x) k')
    };

    static BilinearForm trivial(HopfPtr host);
    static BilinearForm bicharacter(HopfPtr host, std::map<GenId, std::vector<int>> weights,
                                    std::vector<std::vector<Scalar>> values);
    static BilinearForm rform(HopfPtr host, std::map<std::pair<GenId, GenId>, Scalar> table);
    static BilinearForm rform_inverse(HopfPtr host, std::map<std::pair<GenId, GenId>, Scalar> table);
    static BilinearForm lift(HopfPtr host, std::map<GenId, Element> projection, HopfPtr base,
                             std::shared_ptr<const BilinearForm> base_form);
    static BilinearForm explicit_table(HopfPtr host, std::map<std::pair<Word, Word>, Scalar> table,
                                       int degree);
    static BilinearForm composite(HopfPtr host,
                                  std::vector<std::pair<std::shared_ptr<const BilinearForm>, bool>> factors);
    // F'(u (x) v) = scale(u) scale(v) F(u (x) v): evaluates a form built over
    // the original word basis on the deformed one
    static BilinearForm scaled(HopfPtr host, std::shared_ptr<const BilinearForm> base,
                               std::function<Scalar(const Word&)> scale);
    // form on a tensor product Hopf algebra whose carrier sorts the first
    // factor's generators (ids < boundary) before the second's
    static BilinearForm tensor_split(HopfPtr host, std::shared_ptr<const BilinearForm> f1,
                                     std::shared_ptr<const BilinearForm> f2, GenId boundary);

    Policy policy() const { return policy_; }
    const HopfPtr& host() const { return host_; }

    Scalar eval(const Element& x, const Element& y) const;
    Scalar eval_words(const Word& x, const Word& y) const;  // memoized

    // value-level equality on all basis pairs up to the bound
    bool equal_on_basis(const BilinearForm& o, int max_degree) const;

    const std::map<std::pair<GenId, GenId>, Scalar>& pair_table() const { return pair_table_; }

    friend BilinearForm invert_form(const BilinearForm& F, int max_degree);

private:
    BilinearForm() = default;

    Policy policy_ = Policy::Trivial;
    HopfPtr host_;
    // Bicharacter
    std::map<GenId, std::vector<int>> weights_;
    std::vector<std::vector<Scalar>> values_;  // values_[i][j] = F(e_i (x) e_j), unit monomials
    // RForm / RFormInverse
    std::map<std::pair<GenId, GenId>, Scalar> pair_table_;
    // Lift
    std::map<GenId, Element> proj_;
    HopfPtr base_;
    std::shared_ptr<const BilinearForm> base_form_;
    // Explicit
    std::map<std::pair<Word, Word>, Scalar> table_;
    int table_degree_ = 0;
    // Composite
    std::vector<std::pair<std::shared_ptr<const BilinearForm>, bool>> factors_;
    // Scaled
    std::function<Scalar(const Word&)> scale_;
    // TensorSplit
    std::shared_ptr<const BilinearForm> split_f1_, split_f2_;
    GenId split_boundary_ = 0;

    mutable std::shared_ptr<std::map<std::pair<Word, Word>, Scalar>> memo_ =
        std::make_shared<std::map<std::pair<Word, Word>, Scalar>>();
    mutable std::shared_ptr<std::map<std::tuple<size_t, Word, Word>, Scalar>> comp_memo_ =
        std::make_shared<std::map<std::tuple<size_t, Word, Word>, Scalar>>();

    Scalar eval_uncached(const Word& x, const Word& y) const;
    Scalar composite_eval(size_t k, const Word& x, const Word& y) const;
    std::vector<int> word_weight(const Word& w) const;
    Element project(const Element& e) const;
};

using FormPtr = std::shared_ptr<const BilinearForm>;

// Convolution inverse (exact).  Throws NotInvertible with the blocking pair.
BilinearForm invert_form(const BilinearForm& F, int max_degree);

enum class FormCheckMode { Cocycle, Coquasitriangular, Cotriangular };
Report check_form(const BilinearForm& F, FormCheckMode mode, int max_degree);

// u_R(h) = R(h1 (x) S(h2)) and friends; evaluator-backed with a table view.
class Functional {
public:
    enum class Kind { U, UBar, Counit };

    Functional(HopfPtr host, Kind kind, FormPtr form) : host_(std::move(host)), kind_(kind), form_(std::move(form)) {}
    static Functional counit(HopfPtr host) { return Functional(std::move(host), Kind::Counit, nullptr); }

    Scalar eval_word(const Word& w) const;
    Scalar eval(const Element& e) const;
    std::map<Word, Scalar> table(int max_degree) const;

private:
    HopfPtr host_;
    Kind kind_;
    FormPtr form_;  // for UBar this is already the inverse form
    mutable std::map<Word, Scalar> memo_;
};

enum class SpecialFunctional { UR, UBarR, UGamma, UBarGamma };
// For the bar kinds the convolution inverse of F is computed internally.
Functional special_functional(SpecialFunctional kind, const BilinearForm& F, int max_degree);

}  // namespace hopfgal
