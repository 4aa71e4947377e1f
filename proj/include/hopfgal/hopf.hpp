#pragma once

#include "hopfgal/presentation.hpp"
#include "hopfgal/report.hpp"

namespace hopfgal {

struct CodomainMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// componentwise product of tensor legs (plain tensor-product algebra)
TensorElement tensor_mul(const TensorElement& a, const TensorElement& b,
                         const std::vector<PresPtr>& legs);

// Hopf algebra structure on a finitely presented algebra: coproduct, counit
// and antipode are stored on generators and extended by (anti)algebra-map
// policy.  Axioms are checked on truncated bases, not proven.
class HopfPresentation {
public:
    HopfPresentation(PresPtr alg, std::vector<TensorElement> coproducts,
                     std::vector<Scalar> counits, std::vector<Element> antipodes);

    const PresPtr& alg() const { return alg_; }
    const std::string& name() const { return alg_->name(); }

    const TensorElement& gen_coproduct(GenId g) const { return cop_.at(g); }
    const Element& gen_antipode(GenId g) const { return antipode_.at(g); }

    TensorElement coproduct_word(const Word& w) const;      // rank 2, cached
    TensorElement coproduct(const Element& e) const;
    TensorElement iterated_coproduct_word(const Word& w, int n) const;  // rank n+1
    TensorElement iterated_coproduct(const Element& e, int n) const;
    Scalar counit_word(const Word& w) const;
    Scalar counit(const Element& e) const;
    Element antipode_word(const Word& w) const;              // cached
    Element antipode(const Element& e) const;

    Element mul(const Element& a, const Element& b) const { return alg_->mul(a, b); }

    // all generators group-like: Sweedler legs of any normal word collapse
    bool group_like_basis() const { return group_like_; }
    bool is_cocommutative() const;

    Report check_axioms(int max_degree) const;

private:
    PresPtr alg_;
    std::vector<TensorElement> cop_;
    std::vector<Scalar> counit_;
    std::vector<Element> antipode_;
    bool group_like_ = false;

    mutable std::map<Word, TensorElement> cop_cache_;
    mutable std::map<std::pair<Word, int>, TensorElement> itcop_cache_;
    mutable std::map<Word, Element> antipode_cache_;
};

using HopfPtr = std::shared_ptr<const HopfPresentation>;

// Linear map between truncated modules, stored as a value table with an
// extension policy.  Convolution needs domain Hopf structure.
struct LinearMap {
    enum class Policy { TableOnly, Multiplicative, AntiMultiplicative };

    HopfPtr domain;
    PresPtr codomain;
    Policy policy = Policy::TableOnly;
    std::map<Word, Element> table;  // generators for multiplicative policies,
                                    // basis words up to table_degree otherwise
    int table_degree = 0;

    // table-only maps must be total on the truncated basis
    static LinearMap from_table(HopfPtr dom, PresPtr cod, std::map<Word, Element> table, int degree);
    static LinearMap multiplicative(HopfPtr dom, PresPtr cod, std::map<Word, Element> gen_images);

    Element apply_word(const Word& w) const;
    Element apply(const Element& e) const;
};

LinearMap convolve(const LinearMap& f, const LinearMap& g);
LinearMap convolution_unit(HopfPtr dom, PresPtr cod, int degree);  // eta o eps

Report check_bialgebra_axioms(const HopfPresentation& H, int max_degree);

}  // namespace hopfgal
