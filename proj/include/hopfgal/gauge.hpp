#pragma once

#include "hopfgal/galois.hpp"

namespace hopfgal {

struct NotGauge : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AnsatzTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSplit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// H-equivariant algebra map H-underline -> A, stored on generators and
// evaluated through the product-reconstruction identity (hpr-inv).
struct GaugeElement {
    std::vector<Element> gen_images;  // indexed by host generator id

    Element apply_word(const Word& w, const Extension& E) const;
    Element apply(const Element& e, const Extension& E) const;
    bool operator==(const GaugeElement& o) const { return gen_images == o.gen_images; }

private:
    mutable std::map<Word, Element> memo_;
};

// vertical automorphism: H-equivariant algebra endomorphism fixing the base
struct VerticalAutomorphism {
    std::vector<Element> gen_images;  // indexed by carrier generator id

    Element apply_word(const Word& w, const PresPtr& alg) const;
    Element apply(const Element& e, const PresPtr& alg) const;
    static VerticalAutomorphism identity(const PresPtr& alg);
    bool operator==(const VerticalAutomorphism& o) const { return gen_images == o.gen_images; }
};

// equivariance, algebra-map property and (when a star structure is present)
// star compatibility, on the truncated basis.  Star compatibility selects a
// subgroup; for character candidates on non-cocommutative hosts it is
// reported without being required.
Report verify_gauge(const GaugeElement& f, const Extension& E, int max_degree,
                    bool require_star = true);
Report verify_vertical(const VerticalAutomorphism& F, const Extension& E, int max_degree);

GaugeElement gauge_unit(const Extension& E);
GaugeElement gauge_convolve(const GaugeElement& f, const GaugeElement& g, const Extension& E);
GaugeElement gauge_invert(const GaugeElement& f, const Extension& E);  // f o S-underline

VerticalAutomorphism vertical_compose(const VerticalAutomorphism& F, const VerticalAutomorphism& G,
                                      const Extension& E);  // F . G = G o F
VerticalAutomorphism vertical_invert(const VerticalAutomorphism& F, const Extension& E);  // (inv-F)

VerticalAutomorphism theta(const GaugeElement& f, const Extension& E);       // (isoGAVA)
GaugeElement theta_inverse(const VerticalAutomorphism& F, const Extension& E);

// polynomial constraints over named scalar unknowns
struct ConstraintSystem {
    std::vector<std::string> unknowns;
    std::vector<Scalar> equations;  // each must vanish

    bool satisfied_by(const std::map<ParamId, Scalar>& assignment) const {
        for (const Scalar& e : equations)
            if (!e.substitute(assignment).is_zero()) return false;
        return true;
    }
};

struct GaugeSolution {
    // closed-form solutions (possibly a family with fresh unit parameters)
    std::vector<GaugeElement> solutions;
    std::vector<std::string> family_params;  // unit parameters of the family
    ConstraintSystem constraints;            // residual system when not closed-form
    bool closed_form = false;
};

// closed-form enumeration for group algebras of finitely generated abelian
// groups and function algebras on Z2-type idempotent presentations; the
// general case emits the character constraint system plus a verifier.
GaugeSolution solve_gauge(const Extension& E, int ansatz_degree);

// gauge element from an algebra character alpha: f = (alpha (x) id) o Ad
GaugeElement gauge_from_character(const std::map<GenId, Scalar>& alpha, const Extension& E);

// the unconstrained invertible-unital-equivariant linear family on a
// finite-dimensional carrier (the "no algebra maps" contrast)
struct LinearGaugeFamily {
    int dimension = 0;
    std::string parameter;     // name of the reporting parameter when dimension == 1
    Scalar determinant;        // symbolic determinant of the family matrix
    std::string excluded_locus;
};
LinearGaugeFamily linear_gauge_family(const Extension& E, int max_degree);

// Gamma_Q(f) = f o Q and Gamma(F) = F transported onto the twisted extension
GaugeElement transport_twist(const GaugeElement& f, const Extension& E, const Extension& Eg,
                             const TwistContext& ctx);
VerticalAutomorphism transport_twist(const VerticalAutomorphism& F, const Extension& E,
                                     const Extension& Eg, const TwistContext& ctx);

// splitting of a vertical automorphism of a tensor extension (prop:iso)
std::pair<VerticalAutomorphism, VerticalAutomorphism> product_gauge_split(
    const VerticalAutomorphism& F, const TensorExtension& T);
VerticalAutomorphism product_gauge_assemble(const VerticalAutomorphism& F1,
                                            const VerticalAutomorphism& F2,
                                            const TensorExtension& T);

}  // namespace hopfgal
