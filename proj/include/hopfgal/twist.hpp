#pragma once

#include <functional>

#include "hopfgal/comodule.hpp"

namespace hopfgal {

struct RewriteSynthesisFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Memoized diagonal change-of-basis between a presentation's words and the
// same words seen as left-nested products for a deformed multiplication:
// eval(w) = sigma(w) * w must hold with sigma(w) an invertible unit monomial.
class SigmaMap {
public:
    SigmaMap(PresPtr orig, std::function<Element(const Element&, const Element&)> deformed_mul);
    Scalar operator()(const Word& w) const;

    // coefficients rescaled by sigma^{-1}: original basis -> deformed words
    Element to_deformed(const Element& e) const;
    // deformed words -> original basis
    Element to_original(const Element& e) const;

private:
    PresPtr orig_;
    std::function<Element(const Element&, const Element&)> mul_;
    mutable std::map<Word, Scalar> memo_;
};
using SigmaPtr = std::shared_ptr<const SigmaMap>;

// 2-cocycle twist data: gamma (checked), its convolution inverse, the
// associated functionals, and the lazily synthesized twisted Hopf algebra.
class TwistContext {
public:
    static TwistContext make(HopfPtr H, FormPtr gamma, int check_degree);

    const HopfPtr& hopf() const { return H_; }
    const FormPtr& gamma() const { return gamma_; }
    const FormPtr& gamma_bar() const { return gamma_bar_; }
    const Functional& u() const { return *u_; }
    const Functional& u_bar() const { return *ubar_; }
    int degree() const { return degree_; }

    const HopfPtr& twisted_hopf() const;  // H_gamma, synthesized on first use
    const SigmaPtr& sigma() const;        // change of basis for H_gamma

    // gamma / gamma_bar as forms on the twisted host (words reinterpreted)
    FormPtr gamma_on_twisted() const;
    FormPtr gamma_bar_on_twisted() const;
    // (rug): R_gamma = gamma_21 * R * gamma_bar as a form on H_gamma
    BilinearForm twist_rform(const FormPtr& R) const;

private:
    HopfPtr H_;
    FormPtr gamma_, gamma_bar_;
    std::shared_ptr<Functional> u_, ubar_;
    int degree_ = 3;
    struct Lazy {
        HopfPtr twisted;
        SigmaPtr sigma;
        FormPtr gamma_tw, gamma_bar_tw;
    };
    std::shared_ptr<Lazy> lazy_ = std::make_shared<Lazy>();
};

// Synthesizes a presentation for the algebra with deformed product
// new_mul on the same generators; fails when the deformed products of
// normal words are not unit-monomial multiples of themselves.
std::pair<PresPtr, SigmaPtr> synthesize_twisted_presentation(
    const PresPtr& orig, const std::string& name,
    std::function<Element(const Element&, const Element&)> new_mul);

HopfPtr twist_hopf(const TwistContext& ctx);

struct TwistedComodule {
    ComoduleAlgebra algebra;
    SigmaPtr sigma;
};
TwistedComodule twist_comodule_algebra(const ComoduleAlgebra& A, const TwistContext& ctx);

// the braided Hopf algebra H-underline twisted as comodule (co)algebra
BraidedHopf twist_braided(const BraidedHopf& B, const TwistContext& ctx);

// (nt): v (x) w -> v(0) (x) w(0) gamma_bar(v(1) (x) w(1)); inverse uses gamma.
// The carriers' coaction legs must live over the host that gbar/g evaluate on.
TensorElement phi_iso(const TensorElement& t, const ComodCarrier& V, const ComodCarrier& W,
                      const BilinearForm& gamma_or_inverse, bool forward);

// (mapQ)/(mapQinv) between underline(H_gamma) and (underline H)_gamma.
// Input and output of the forward map are in the twisted resp. original
// word basis; sigma conversions happen inside.
Element q_map(const Element& h, const TwistContext& ctx, bool forward);

}  // namespace hopfgal
