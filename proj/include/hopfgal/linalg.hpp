#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hopfgal/scalar.hpp"

namespace hopfgal {

// Ratio of scalars with opportunistic exact reduction; used only inside the
// linear solvers, results are cleared back to Scalar.
struct FracScalar {
    Scalar num, den;

    FracScalar() : num(), den(1) {}
    FracScalar(Scalar n) : num(std::move(n)), den(1) {}
    FracScalar(Scalar n, Scalar d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    bool is_zero() const { return num.is_zero(); }
    void reduce();
    FracScalar operator+(const FracScalar& o) const;
    FracScalar operator-(const FracScalar& o) const;
    FracScalar operator*(const FracScalar& o) const;
    FracScalar operator/(const FracScalar& o) const;
    FracScalar operator-() const { return FracScalar(-num, den); }
    bool operator==(const FracScalar& o) const { return (num * o.den) == (o.num * den); }
};

using SparseRow = std::map<int, FracScalar>;

// Row echelon basis over the fraction field of the scalar ring, maintained
// incrementally; pivot columns are chosen smallest-first.
class Echelon {
public:
    // reduces v against current rows; if a nonzero residual remains it is
    // normalized (pivot = 1), inserted, and true is returned
    bool insert(SparseRow v);
    SparseRow reduce(SparseRow v) const;
    size_t rank() const { return rows_.size(); }
    const std::map<int, SparseRow>& rows() const { return rows_; }
    bool contains(const SparseRow& v) const { return reduce(v).empty(); }

private:
    std::map<int, SparseRow> rows_;  // pivot column -> normalized row
};

// Nullspace basis of the matrix whose rows are `rows` over columns 0..ncols-1.
// Entries are cleared to Scalar (denominator-free), each vector scaled so its
// leading (lowest-index) nonzero entry is as simple as the clearing allows.
std::vector<std::vector<Scalar>> nullspace(const std::vector<std::vector<Scalar>>& rows, int ncols);

// Solve A x = b exactly; returns std::nullopt when inconsistent or
// underdetermined columns are actually needed (free columns are set to 0).
std::optional<std::vector<Scalar>> solve_linear(const std::vector<std::vector<Scalar>>& A,
                                                const std::vector<Scalar>& b);

// rank of the matrix over the fraction field
size_t matrix_rank(const std::vector<SparseRow>& rows);

}  // namespace hopfgal
