#pragma once

#include "hopfgal/braided.hpp"
#include "hopfgal/linalg.hpp"

namespace hopfgal {

struct HostMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BaseNotCentral : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IncompatibleCoactions : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Right H-comodule algebra: coaction stored on generators, extended as a
// unital algebra map.
class ComoduleAlgebra {
public:
    ComoduleAlgebra(PresPtr alg, HopfPtr host, std::vector<TensorElement> coactions);
    // A = H with coaction Delta
    static ComoduleAlgebra regular(HopfPtr H);

    const PresPtr& alg() const { return alg_; }
    const HopfPtr& host() const { return host_; }

    TensorElement coact_word(const Word& w) const;  // rank 2: (A-word, H-word)
    TensorElement coact(const Element& e) const;

    Element mul(const Element& a, const Element& b) const { return alg_->mul(a, b); }

private:
    PresPtr alg_;
    HopfPtr host_;
    std::vector<TensorElement> coact_;
    mutable std::map<Word, TensorElement> memo_;
};

// basis of { a : delta(a) = a (x) 1 } on the degree-truncated span
std::vector<Element> coinvariants(const ComoduleAlgebra& A, int max_degree);

enum class ComoduleCheckMode { Axioms, QuasiCommutative, BaseCentral };
Report check_comodule(const ComoduleAlgebra& A, ComoduleCheckMode mode, int max_degree,
                      const BilinearForm* R = nullptr);

// Uniform view of the objects a braided tensor product can hold: comodule
// algebras and braided Hopf algebras.
class ComodCarrier {
public:
    virtual ~ComodCarrier() = default;
    virtual PresPtr alg() const = 0;
    virtual HopfPtr host() const = 0;
    virtual Element mul(const Element&, const Element&) const = 0;
    virtual TensorElement coact_word(const Word&) const = 0;
};
using CarrierPtr = std::shared_ptr<const ComodCarrier>;

CarrierPtr carrier(ComoduleAlgebra A);
CarrierPtr carrier(BraidedHopf B);

// braiding  v (x) w -> w(0) (x) v(0) R(v(1) (x) w(1))  between two carriers
TensorElement braiding_psi(const TensorElement& t, const ComodCarrier& V, const ComodCarrier& W,
                           const BilinearForm& R);

// A braided tensor product algebra L (.) R with product (tpr) and the
// diagonal coaction; elements are rank-2 tensors.
class BraidedTensorAlgebra {
public:
    BraidedTensorAlgebra(CarrierPtr left, CarrierPtr right, FormPtr rform);

    const CarrierPtr& left() const { return left_; }
    const CarrierPtr& right() const { return right_; }
    const FormPtr& rform() const { return rform_; }
    const HopfPtr& host() const { return host_; }

    TensorElement unit() const;
    TensorElement mul(const TensorElement& x, const TensorElement& y) const;
    TensorElement coact(const TensorElement& x) const;  // rank 3: (L, R, H)
    std::vector<std::vector<Word>> pair_basis(int max_degree) const;

    TensorElement embed(const Element& a, const Element& c) const { return TensorElement::outer(a, c); }

private:
    CarrierPtr left_, right_;
    FormPtr rform_;
    HopfPtr host_;
};

BraidedTensorAlgebra braided_tensor_product(const ComoduleAlgebra& A, const ComoduleAlgebra& C,
                                            FormPtr R);

// A (.)_B A: the braided tensor square of A modulo <b (x) 1 - 1 (x) b>.
// Well-defined when the coinvariants are central; representatives are
// canonical modulo an echelonized truncation of the ideal.
class BalancedTensor {
public:
    BalancedTensor(BraidedTensorAlgebra square, std::vector<Element> base_basis, int max_degree);

    const BraidedTensorAlgebra& square() const { return square_; }
    const std::vector<Element>& base_basis() const { return base_basis_; }
    bool trivial_base() const { return trivial_; }
    int degree() const { return degree_; }

    TensorElement reduce(const TensorElement& x) const;
    bool equal_mod_ideal(const TensorElement& x, const TensorElement& y) const {
        return reduce(x - y).is_zero();
    }
    // dimension of the truncated quotient span
    size_t quotient_dim() const;
    const std::vector<std::vector<Word>>& pair_basis() const { return pairs_; }

private:
    BraidedTensorAlgebra square_;
    std::vector<Element> base_basis_;
    bool trivial_ = false;
    int degree_;
    std::vector<std::vector<Word>> pairs_;
    std::map<std::vector<Word>, int> pair_index_;
    Echelon ideal_;

    SparseRow to_row(const TensorElement& x) const;
};

// Coaction on a free module with basis 0..dim-1: e_i -> sum_j e_j (x) mat[i][j].
struct ModuleCoaction {
    HopfPtr host;
    int dim = 0;
    std::vector<std::map<int, Element>> mat;

    bool comodule_axioms(std::string* witness = nullptr) const;
    bool compatible(const ModuleCoaction& other, std::string* witness = nullptr) const;  // (MHH)
};

// (comp-coactions): v -> v(0)(1)(0)(2) with multiplied legs; checks (MHH)
// first and the comodule axioms of the result.
ModuleCoaction compose_coactions(const ModuleCoaction& delta1, const ModuleCoaction& delta2,
                                 bool second_after_first = true);

}  // namespace hopfgal
