#pragma once

#include <functional>

#include "hopfgal/forms.hpp"

namespace hopfgal {

// The braided Hopf algebra of a coquasitriangular Hopf algebra: the carrier
// with the adjoint coaction, the R-deformed product and the braided
// antipode.  A twisted instance carries the 2-cocycle-deformed product and
// coproduct and lives over the twisted host.
class BraidedHopf {
public:
    static BraidedHopf plain(HopfPtr carrier, FormPtr rform);
    // base must be plain; gamma/gamma_bar evaluate on the carrier,
    // twisted_host/twisted_rform describe the comodule host (H_gamma, R_gamma),
    // host_sigma converts carrier words into the twisted host's basis
    static BraidedHopf twisted(const BraidedHopf& base, FormPtr gamma, FormPtr gamma_bar,
                               HopfPtr twisted_host, FormPtr twisted_rform,
                               std::function<Scalar(const Word&)> host_sigma);

    bool is_twisted() const { return twisted_; }
    const HopfPtr& carrier() const { return carrier_; }
    const HopfPtr& host_hopf() const { return host_hopf_; }
    const FormPtr& host_rform() const { return host_rform_; }
    const PresPtr& alg() const { return carrier_->alg(); }
    // host R-form pulled back to the carrier word basis; identical to
    // host_rform() for plain instances
    FormPtr rform_on_carrier() const;
    // conversion factor from carrier words to the twisted host basis (1 when plain)
    Scalar host_sigma(const Word& w) const { return host_sigma_ ? host_sigma_(w) : Scalar(1); }

    // adjoint coaction h -> h2 (x) S(h1) h3, the comodule structure
    TensorElement ad_word(const Word& w) const;
    TensorElement ad(const Element& e) const;
    TensorElement ad2(const Element& e) const;  // (Ad x id) o Ad, rank 3

    Element product_words(const Word& a, const Word& b) const;
    Element product(const Element& a, const Element& b) const;
    TensorElement coproduct(const Element& e) const;  // braided coproduct
    Element antipode_word(const Word& w) const;
    Element antipode(const Element& e) const;
    Scalar counit(const Element& e) const { return carrier_->counit(e); }

private:
    BraidedHopf() = default;

    HopfPtr carrier_;
    FormPtr rform_;  // R-form used in the defining product/antipode formulas
    bool twisted_ = false;
    FormPtr gamma_, gamma_bar_;
    HopfPtr host_hopf_;
    FormPtr host_rform_;
    std::function<Scalar(const Word&)> host_sigma_;

    mutable std::map<std::pair<Word, Word>, Element> prod_memo_;
    mutable std::map<std::pair<Word, Word>, Element> plain_prod_memo_;
    mutable std::map<Word, TensorElement> ad_memo_;
    mutable std::map<Word, Element> antipode_memo_;

    Element plain_product_words(const Word& a, const Word& b) const;
};

Report check_braided(const BraidedHopf& B, int max_degree);

}  // namespace hopfgal
