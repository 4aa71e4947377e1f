#pragma once

#include "hopfgal/twist.hpp"

namespace hopfgal {

struct NoInverseData : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BaseMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hopf-Galois extension data at a fixed truncation degree: comodule algebra,
// coinvariant basis, optional cleft data, R-form, and the derived carriers
// (H-underline, A (.) H-underline, A (.)_B A).
class Extension {
public:
    static Extension make(ComoduleAlgebra A, FormPtr rform, int degree,
                          std::optional<LinearMap> j = std::nullopt,
                          std::optional<LinearMap> jbar = std::nullopt);

    const ComoduleAlgebra& A() const { return *A_; }
    const HopfPtr& host() const { return A_->host(); }
    const FormPtr& rform() const { return rform_; }
    int degree() const { return degree_; }
    const std::vector<Element>& coinv() const { return coinv_; }
    bool cleft() const { return j_.has_value(); }
    const LinearMap& j() const;
    const LinearMap& jbar() const;
    const BraidedHopf& hbar() const { return *hbar_; }
    const BalancedTensor& balanced() const { return *balanced_; }
    const BraidedTensorAlgebra& axh() const { return *axh_; }
    const CarrierPtr& a_carrier() const { return a_carrier_; }
    const CarrierPtr& h_carrier() const { return h_carrier_; }

    // sigma conversions when this extension arose from a twist (identity otherwise)
    SigmaPtr sigma_a() const { return sigma_a_; }
    void set_sigma_a(SigmaPtr s) { sigma_a_ = std::move(s); }

private:
    std::optional<ComoduleAlgebra> A_;
    FormPtr rform_;
    int degree_ = 3;
    std::vector<Element> coinv_;
    std::optional<LinearMap> j_, jbar_;
    std::shared_ptr<BraidedHopf> hbar_;
    std::shared_ptr<BalancedTensor> balanced_;
    std::shared_ptr<BraidedTensorAlgebra> axh_;
    CarrierPtr a_carrier_, h_carrier_;
    SigmaPtr sigma_a_;

    Extension() = default;
};

// cleft data for A = H with coaction Delta: j = id, jbar = S
std::pair<LinearMap, LinearMap> cleft_identity(const HopfPtr& H, int degree);
// j multiplicative from generator images, jbar given on generators of a
// group-like host (extended to inverses automatically is not attempted:
// tables are materialized on the truncated basis)
std::pair<LinearMap, LinearMap> cleft_from_images(const HopfPtr& H, const ComoduleAlgebra& A,
                                                  const std::map<GenId, Element>& j_images,
                                                  const std::map<GenId, Element>& jbar_images,
                                                  int degree);

// chi(a' (x)_B a) = a' a(0) (x) a(1)
TensorElement canonical_map(const TensorElement& x, const Extension& E);
// tau = chi^{-1}|_{1 (x) H} from cleft data, reduced mod the balanced ideal
TensorElement translation_map(const Element& h, const Extension& E);

Report check_galois_suite(const Extension& E, int max_degree);

// the twisted extension: A_gamma with twisted cleft data and R_gamma
Extension twist_extension(const Extension& E, const TwistContext& ctx);

Report check_twist_diagram(const Extension& E, const TwistContext& ctx, int max_degree);

// (H (x) K)-extension A (x)_B A' over a trivial shared base, together with
// the generator bookkeeping needed to split vertical automorphisms
struct TensorExtension {
    Extension E;
    std::vector<GenId> left_gens;   // carrier ids of the A generators
    std::vector<GenId> right_gens;  // carrier ids of the A' generators
    std::vector<GenId> left_hgens;  // H (x) K ids of the H generators
    std::vector<GenId> right_hgens;
};
TensorExtension tensor_extension(const Extension& E1, const Extension& E2);

}  // namespace hopfgal
