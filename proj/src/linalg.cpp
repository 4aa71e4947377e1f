#include "hopfgal/linalg.hpp"

#include <stdexcept>

namespace hopfgal {

void FracScalar::reduce() {
    if (den.is_zero()) throw std::domain_error("FracScalar: zero denominator");
    if (num.is_zero()) {
        den = Scalar(1);
        return;
    }
    if (den.is_unit_monomial()) {
        num = num * den.inverse_unit();
        den = Scalar(1);
        return;
    }
    Scalar q;
    if (num.divide_exact(den, q)) {
        num = q;
        den = Scalar(1);
    }
}

FracScalar FracScalar::operator+(const FracScalar& o) const {
    return FracScalar(num * o.den + o.num * den, den * o.den);
}
FracScalar FracScalar::operator-(const FracScalar& o) const {
    return FracScalar(num * o.den - o.num * den, den * o.den);
}
FracScalar FracScalar::operator*(const FracScalar& o) const {
    return FracScalar(num * o.num, den * o.den);
}
FracScalar FracScalar::operator/(const FracScalar& o) const {
    if (o.is_zero()) throw std::domain_error("FracScalar: division by zero");
    return FracScalar(num * o.den, den * o.num);
}

SparseRow Echelon::reduce(SparseRow v) const {
    // eliminate every pivot column; a pivot row's tail only introduces
    // columns beyond its pivot, so the scan never needs to back up
    int resume = 0;
    while (!v.empty()) {
        auto hit = v.lower_bound(resume);
        while (hit != v.end() && !rows_.count(hit->first)) ++hit;
        if (hit == v.end()) break;
        resume = hit->first;
        FracScalar f = hit->second;  // pivot of stored row is 1
        const SparseRow& row = rows_.at(hit->first);
        for (const auto& [col, val] : row) {
            auto vit = v.find(col);
            FracScalar nv = (vit == v.end() ? FracScalar() : vit->second) - f * val;
            if (nv.is_zero())
                v.erase(col);
            else
                v[col] = nv;
        }
    }
    return v;
}

bool Echelon::insert(SparseRow v) {
    // forward elimination only: stored rows keep their pivot as the lead but
    // may carry later pivots in their tails; reduce() cascades through them
    v = reduce(v);
    if (v.empty()) return false;
    auto lead = v.begin();
    FracScalar inv = FracScalar(Scalar(1)) / lead->second;
    SparseRow norm;
    for (const auto& [col, val] : v) norm[col] = val * inv;
    rows_.emplace(lead->first, std::move(norm));
    return true;
}

std::vector<std::vector<Scalar>> nullspace(const std::vector<std::vector<Scalar>>& rows, int ncols) {
    Echelon ech;
    for (const auto& r : rows) {
        SparseRow row;
        for (int j = 0; j < ncols; ++j)
            if (j < (int)r.size() && !r[j].is_zero()) row[j] = FracScalar(r[j]);
        ech.insert(std::move(row));
    }
    std::vector<bool> is_pivot(ncols, false);
    for (const auto& [p, _] : ech.rows()) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        // x[free] = 1; back-substitute pivots in descending column order
        // (row tails only reference larger columns)
        std::vector<FracScalar> x(ncols);
        x[free] = FracScalar(Scalar(1));
        for (auto it = ech.rows().rbegin(); it != ech.rows().rend(); ++it) {
            const auto& [p, row] = *it;
            FracScalar acc;
            for (const auto& [col, val] : row) {
                if (col == p) continue;
                if (!x[col].is_zero()) acc = acc + val * x[col];
            }
            x[p] = -acc;
        }
        Scalar lcm(1);
        for (const auto& f : x)
            if (!f.is_zero() && !f.den.is_one()) lcm = lcm * f.den;
        std::vector<Scalar> v(ncols);
        for (int j = 0; j < ncols; ++j) {
            if (x[j].is_zero()) continue;
            Scalar q;
            Scalar cleared = x[j].num * lcm;
            if (cleared.divide_exact(x[j].den, q))
                v[j] = q;
            else
                throw std::logic_error("nullspace: clearing failed");
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve_linear(const std::vector<std::vector<Scalar>>& A,
                                                const std::vector<Scalar>& b) {
    if (A.size() != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
    int ncols = 0;
    for (const auto& r : A) ncols = std::max(ncols, (int)r.size());
    // eliminate on the augmented matrix; the rhs gets column ncols
    Echelon ech;
    for (size_t i = 0; i < A.size(); ++i) {
        SparseRow row;
        for (int j = 0; j < (int)A[i].size(); ++j)
            if (!A[i][j].is_zero()) row[j] = FracScalar(A[i][j]);
        if (!b[i].is_zero()) row[ncols] = FracScalar(b[i]);
        ech.insert(std::move(row));
    }
    for (const auto& [p, _] : ech.rows())
        if (p == ncols) return std::nullopt;  // inconsistent: 0 = 1 row
    // back-substitute in descending pivot order; free columns stay zero and
    // the rhs column contributes with weight -1
    std::vector<FracScalar> x(ncols);
    for (auto it = ech.rows().rbegin(); it != ech.rows().rend(); ++it) {
        const auto& [p, row] = *it;
        FracScalar acc;
        for (const auto& [col, val] : row) {
            if (col == p) continue;
            if (col == ncols) {
                acc = acc - val;
                continue;
            }
            if (!x[col].is_zero()) acc = acc + val * x[col];
        }
        x[p] = -acc;
    }
    std::vector<Scalar> out(ncols, Scalar());
    for (int j = 0; j < ncols; ++j) {
        if (x[j].is_zero()) continue;
        FracScalar v = x[j];
        v.reduce();
        if (!v.den.is_one()) {
            Scalar q;
            if (!v.num.divide_exact(v.den, q)) return std::nullopt;  // not in the ring
            out[j] = q;
        } else {
            out[j] = v.num;
        }
    }
    return out;
}

size_t matrix_rank(const std::vector<SparseRow>& rows) {
    Echelon ech;
    for (const auto& r : rows) ech.insert(r);
    return ech.rank();
}

}  // namespace hopfgal
