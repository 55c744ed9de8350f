#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csl/errors.hpp"
#include "csl/fields.hpp"
#include "csl/linalg.hpp"

namespace csl {

/// Finite-dimensional commutative unital algebra over F given by structure
/// constants. Basis vector 0 must be the multiplicative identity. Associativity,
/// commutativity and the identity law are validated eagerly over all basis
/// triples/pairs at construction.
template <class F>
class StructureAlgebra {
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    Mat<F> table_;  // table_[i * dim + j] = coordinates of e_i * e_j

  public:
    StructureAlgebra() = default;
    StructureAlgebra(std::size_t dim, Mat<F> table, std::vector<std::string> labels = {})
        : dim_(dim), labels_(std::move(labels)), table_(std::move(table)) {
        if (dim_ == 0) throw BadAlgebra("algebra dimension must be positive");
        if (table_.size() != dim_ * dim_) throw BadAlgebra("structure table has wrong shape");
        for (const auto& row : table_) {
            if (row.size() != dim_) throw BadAlgebra("structure table entry has wrong length");
        }
        if (labels_.empty()) {
            for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i));
        }
        if (labels_.size() != dim_) throw BadAlgebra("label count != dim");
        validate();
    }

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }

    Vec<F> zero_vec() const { return Vec<F>(dim_, F(0)); }
    Vec<F> one_vec() const {
        Vec<F> v = zero_vec();
        v[0] = F(1);
        return v;
    }
    Vec<F> unit_vec(std::size_t i) const {
        Vec<F> v = zero_vec();
        v[i] = F(1);
        return v;
    }
    const Vec<F>& basis_product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

    Vec<F> mul(const Vec<F>& a, const Vec<F>& b) const {
        if (a.size() != dim_ || b.size() != dim_) throw DimensionMismatch("algebra mul");
        Vec<F> out = zero_vec();
        for (std::size_t i = 0; i < dim_; ++i) {
            if (is_zero(a[i])) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (is_zero(b[j])) continue;
                const F c = a[i] * b[j];
                const Vec<F>& e = basis_product(i, j);
                for (std::size_t k = 0; k < dim_; ++k) out[k] += c * e[k];
            }
        }
        return out;
    }

    /// Matrix of multiplication by v (rows = images of basis vectors).
    Mat<F> mul_matrix(const Vec<F>& v) const {
        Mat<F> m(dim_);
        for (std::size_t i = 0; i < dim_; ++i) m[i] = mul(unit_vec(i), v);
        return m;
    }

    std::optional<Vec<F>> inverse(const Vec<F>& v) const {
        return solve_left(mul_matrix(v), dim_, dim_, one_vec());
    }

    bool vec_is_zero(const Vec<F>& v) const {
        for (const auto& x : v) {
            if (!is_zero(x)) return false;
        }
        return true;
    }

    std::string describe(const Vec<F>& v) const {
        std::string out;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (is_zero(v[i])) continue;
            if (!out.empty()) out += " + ";
            out += field_str(v[i]) + "*" + labels_[i];
        }
        return out.empty() ? "0" : out;
    }

  private:
    void validate() const {
        for (std::size_t i = 0; i < dim_; ++i) {
            if (basis_product(0, i) != unit_vec(i) || basis_product(i, 0) != unit_vec(i)) {
                throw BadAlgebra("basis vector 0 is not a multiplicative identity");
            }
        }
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = i + 1; j < dim_; ++j) {
                if (basis_product(i, j) != basis_product(j, i)) {
                    throw BadAlgebra("structure constants not commutative at (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
                }
            }
        }
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                for (std::size_t k = 0; k < dim_; ++k) {
                    const Vec<F> lhs = mul(basis_product(i, j), unit_vec(k));
                    const Vec<F> rhs = mul(unit_vec(i), basis_product(j, k));
                    if (lhs != rhs) {
                        throw BadAlgebra("structure constants not associative at (" +
                                         std::to_string(i) + "," + std::to_string(j) + "," +
                                         std::to_string(k) + ")");
                    }
                }
            }
        }
    }
};

/// A StructureAlgebra that is a field. Construction additionally checks
/// invertibility of every nonzero basis element and of a deterministic grid
/// of small basis combinations.
template <class F>
class FieldTower : public StructureAlgebra<F> {
  public:
    FieldTower() = default;
    FieldTower(std::size_t dim, Mat<F> table, std::vector<std::string> labels = {})
        : StructureAlgebra<F>(dim, std::move(table), std::move(labels)) {
        for (std::size_t i = 0; i < this->dim(); ++i) {
            if (!this->inverse(this->unit_vec(i))) {
                throw BadAlgebra("basis element " + std::to_string(i) + " is not invertible");
            }
        }
        // pairwise combinations e_i + s*e_j, s in {1,-1,2}
        for (std::size_t i = 0; i < this->dim(); ++i) {
            for (std::size_t j = i + 1; j < this->dim(); ++j) {
                for (long s : {1L, -1L, 2L}) {
                    Vec<F> v = this->unit_vec(i);
                    v[j] += F(static_cast<int>(s));
                    if (!this->vec_is_zero(v) && !this->inverse(v)) {
                        throw BadAlgebra("nonzero element without inverse; not a field");
                    }
                }
            }
        }
    }
};

/// Span of all pairwise products of basis vectors of a and b.
template <class F>
inline Subspace<F> module_product(const Subspace<F>& a, const Subspace<F>& b,
                                  const StructureAlgebra<F>& alg) {
    if (a.ambient_dim() != alg.dim() || b.ambient_dim() != alg.dim()) {
        throw DimensionMismatch("module_product: ambient dim != algebra dim");
    }
    Mat<F> rows;
    for (const auto& x : a.basis()) {
        for (const auto& y : b.basis()) rows.push_back(alg.mul(x, y));
    }
    return Subspace<F>(alg.dim(), std::move(rows));
}

/// Colon module {x : x*b in a for every b in b}, the largest subspace X with
/// X*b contained in a.
template <class F>
inline Subspace<F> algebra_colon(const Subspace<F>& a, const Subspace<F>& b,
                                 const StructureAlgebra<F>& alg) {
    if (a.ambient_dim() != alg.dim() || b.ambient_dim() != alg.dim()) {
        throw DimensionMismatch("algebra_colon: ambient dim != algebra dim");
    }
    if (b.is_zero()) throw ZeroDivisor("algebra_colon: divisor module is zero");
    const std::size_t n = alg.dim();
    // Constraint matrix: x |-> residual_a(x * b_j), stacked over all j.
    Mat<F> constraints(n);
    for (std::size_t i = 0; i < n; ++i) constraints[i].reserve(n * b.rank());
    for (const auto& bj : b.basis()) {
        for (std::size_t i = 0; i < n; ++i) {
            const Vec<F> res = a.reduce(alg.mul(alg.unit_vec(i), bj));
            constraints[i].insert(constraints[i].end(), res.begin(), res.end());
        }
    }
    return left_kernel(constraints, n, n * b.rank());
}

template <class F>
inline bool is_unital_subalgebra(const Subspace<F>& s, const StructureAlgebra<F>& alg) {
    if (s.ambient_dim() != alg.dim()) throw DimensionMismatch("is_unital_subalgebra");
    if (!s.contains(alg.one_vec())) return false;
    for (const auto& x : s.basis()) {
        for (const auto& y : s.basis()) {
            if (!s.contains(alg.mul(x, y))) return false;
        }
    }
    return true;
}

/// Subfield test: unital subalgebra whose nonzero basis elements have their
/// inverses inside. (For a finite-dimensional subalgebra of a field this is
/// automatic; checked anyway.)
template <class F>
inline bool is_subfield(const Subspace<F>& s, const FieldTower<F>& alg) {
    if (!is_unital_subalgebra(s, alg)) return false;
    for (const auto& x : s.basis()) {
        auto inv = alg.inverse(x);
        if (!inv || !s.contains(*inv)) return false;
    }
    return true;
}

/// Power-basis tower F[x]/(x^dim - r(x)): basis 1, x, ..., x^{dim-1} with
/// x^dim given by `reduction`.
template <class F>
inline Mat<F> power_basis_table(std::size_t dim, const Vec<F>& reduction) {
    if (reduction.size() != dim) throw BadAlgebra("power_basis_table: reduction length");
    // powers[k] = coordinates of x^k for k < 2*dim - 1
    Mat<F> powers(2 * dim - 1, Vec<F>(dim, F(0)));
    for (std::size_t k = 0; k < dim; ++k) powers[k][k] = F(1);
    for (std::size_t k = dim; k < 2 * dim - 1; ++k) {
        // x^k = x * x^{k-1}: shift then reduce the overflow coefficient
        const Vec<F>& prev = powers[k - 1];
        Vec<F> cur(dim, F(0));
        for (std::size_t i = 0; i + 1 < dim; ++i) cur[i + 1] = prev[i];
        const F top = prev[dim - 1];
        for (std::size_t i = 0; i < dim; ++i) cur[i] += top * reduction[i];
        powers[k] = cur;
    }
    Mat<F> table(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) table[i * dim + j] = powers[i + j];
    }
    return table;
}

/// Q(sqrt(d)) with basis {1, sqrt(d)}.
template <class F>
inline FieldTower<F> quadratic_tower(const F& d, const std::string& root_label) {
    Vec<F> red = {d, F(0)};
    return FieldTower<F>(2, power_basis_table(2, red), {"1", root_label});
}

/// Q(sqrt(a), sqrt(b)) with basis {1, sqrt(a), sqrt(b), sqrt(ab)}.
template <class F>
inline FieldTower<F> biquadratic_tower(const F& a, const F& b, const std::string& la,
                                       const std::string& lb, const std::string& lab) {
    const std::size_t n = 4;
    Mat<F> t(n * n, Vec<F>(n, F(0)));
    auto set = [&](std::size_t i, std::size_t j, Vec<F> v) {
        t[i * n + j] = v;
        t[j * n + i] = std::move(v);
    };
    set(0, 0, {F(1), F(0), F(0), F(0)});
    set(0, 1, {F(0), F(1), F(0), F(0)});
    set(0, 2, {F(0), F(0), F(1), F(0)});
    set(0, 3, {F(0), F(0), F(0), F(1)});
    set(1, 1, {a, F(0), F(0), F(0)});
    set(1, 2, {F(0), F(0), F(0), F(1)});
    set(1, 3, {F(0), F(0), a, F(0)});
    set(2, 2, {b, F(0), F(0), F(0)});
    set(2, 3, {F(0), b, F(0), F(0)});
    set(3, 3, {a * b, F(0), F(0), F(0)});
    return FieldTower<F>(n, std::move(t), {"1", la, lb, lab});
}

}  // namespace csl
