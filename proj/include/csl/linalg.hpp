#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "csl/errors.hpp"
#include "csl/fields.hpp"

namespace csl {

template <class F>
using Vec = std::vector<F>;
template <class F>
using Mat = std::vector<std::vector<F>>;

/// In-place reduced row echelon form. Pivots are normalized to 1 and chosen
/// at the lowest column index; zero rows are dropped. The result is the
/// unique canonical basis of the row space.
template <class F>
inline void rref(Mat<F>& m) {
    if (m.empty()) return;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && is_zero(m[piv][col])) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        const F inv = F(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || is_zero(m[r][col])) continue;
            const F factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        ++row;
    }
    m.resize(row);
}

/// A linear subspace of F^n in canonical reduced echelon form. Equality of
/// subspaces is representation equality.
template <class F>
class Subspace {
    std::size_t ambient_ = 0;
    Mat<F> basis_;  // rref, no zero rows

  public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
    Subspace(std::size_t ambient_dim, Mat<F> rows) : ambient_(ambient_dim), basis_(std::move(rows)) {
        for (const auto& r : basis_) {
            if (r.size() != ambient_) throw DimensionMismatch("Subspace: row length != ambient dim");
        }
        rref(basis_);
    }

    static Subspace zero(std::size_t n) { return Subspace(n); }
    static Subspace full(std::size_t n) {
        Mat<F> rows(n, Vec<F>(n, F(0)));
        for (std::size_t i = 0; i < n; ++i) rows[i][i] = F(1);
        return Subspace(n, std::move(rows));
    }
    static Subspace span_of(std::size_t n, const Vec<F>& v) { return Subspace(n, Mat<F>{v}); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.size(); }
    const Mat<F>& basis() const { return basis_; }
    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return basis_.size() == ambient_; }

    /// Residual of v after reduction against the echelon basis; zero iff v
    /// is a member.
    Vec<F> reduce(Vec<F> v) const {
        if (v.size() != ambient_) throw DimensionMismatch("Subspace::reduce");
        for (const auto& row : basis_) {
            std::size_t piv = 0;
            while (piv < ambient_ && csl::is_zero(row[piv])) ++piv;
            if (piv == ambient_) continue;
            if (csl::is_zero(v[piv])) continue;
            const F factor = v[piv];
            for (std::size_t c = piv; c < ambient_; ++c) v[c] -= factor * row[c];
        }
        return v;
    }

    bool contains(const Vec<F>& v) const {
        const Vec<F> r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](const F& x) { return csl::is_zero(x); });
    }

    bool contains(const Subspace& other) const {
        check_compatible(other);
        for (const auto& row : other.basis_) {
            if (!contains(row)) return false;
        }
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        a.check_compatible(b);
        Mat<F> rows = a.basis_;
        rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
        return Subspace(a.ambient_, std::move(rows));
    }

    /// Zassenhaus: rref of [A|A ; B|0], rows with zero left block carry the
    /// intersection in the right block.
    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        a.check_compatible(b);
        const std::size_t n = a.ambient_;
        Mat<F> block;
        for (const auto& r : a.basis_) {
            Vec<F> row(2 * n, F(0));
            for (std::size_t c = 0; c < n; ++c) row[c] = row[n + c] = r[c];
            block.push_back(std::move(row));
        }
        for (const auto& r : b.basis_) {
            Vec<F> row(2 * n, F(0));
            for (std::size_t c = 0; c < n; ++c) row[c] = r[c];
            block.push_back(std::move(row));
        }
        rref(block);
        Mat<F> rows;
        for (const auto& r : block) {
            bool left_zero = true;
            for (std::size_t c = 0; c < n; ++c) {
                if (!csl::is_zero(r[c])) { left_zero = false; break; }
            }
            if (left_zero) rows.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
        }
        return Subspace(n, std::move(rows));
    }

  private:
    void check_compatible(const Subspace& other) const {
        if (ambient_ != other.ambient_) throw DimensionMismatch("subspace ambient dims differ");
    }
};

/// Right null space {x : x.M = 0} of an m x n matrix, as a subspace of F^m.
template <class F>
inline Subspace<F> left_kernel(const Mat<F>& m, std::size_t rows, std::size_t cols) {
    // Augment with the identity and reduce: [M | I] -> rows whose M-part
    // vanished record the combination that produced them.
    Mat<F> block(rows, Vec<F>(cols + rows, F(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) block[i][j] = m[i][j];
        block[i][cols + i] = F(1);
    }
    // echelon only over the first `cols` columns
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && is_zero(block[piv][col])) ++piv;
        if (piv == rows) continue;
        std::swap(block[row], block[piv]);
        const F inv = F(1) / block[row][col];
        for (auto& x : block[row]) x *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || is_zero(block[r][col])) continue;
            const F factor = block[r][col];
            for (std::size_t c = col; c < cols + rows; ++c) block[r][c] -= factor * block[row][c];
        }
        ++row;
    }
    Mat<F> out;
    for (std::size_t r = row; r < rows; ++r) {
        out.emplace_back(block[r].begin() + static_cast<std::ptrdiff_t>(cols), block[r].end());
    }
    return Subspace<F>(rows, std::move(out));
}

/// Solve x.M = target for a single row vector x (M is rows x cols).
template <class F>
inline std::optional<Vec<F>> solve_left(const Mat<F>& m, std::size_t rows, std::size_t cols,
                                        const Vec<F>& target) {
    // Transpose to the standard M^T x^T = target^T and Gauss-eliminate.
    Mat<F> aug(cols, Vec<F>(rows + 1, F(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[j][i] = m[i][j];
    }
    for (std::size_t j = 0; j < cols; ++j) aug[j][rows] = target[j];
    std::size_t row = 0;
    std::vector<std::ptrdiff_t> pivot_col(cols, -1);
    for (std::size_t col = 0; col < rows && row < cols; ++col) {
        std::size_t piv = row;
        while (piv < cols && is_zero(aug[piv][col])) ++piv;
        if (piv == cols) continue;
        std::swap(aug[row], aug[piv]);
        const F inv = F(1) / aug[row][col];
        for (auto& x : aug[row]) x *= inv;
        for (std::size_t r = 0; r < cols; ++r) {
            if (r == row || is_zero(aug[r][col])) continue;
            const F factor = aug[r][col];
            for (std::size_t c = col; c <= rows; ++c) aug[r][c] -= factor * aug[row][c];
        }
        pivot_col[row] = static_cast<std::ptrdiff_t>(col);
        ++row;
    }
    // inconsistent if a zero row has nonzero rhs
    for (std::size_t r = row; r < cols; ++r) {
        if (!is_zero(aug[r][rows])) return std::nullopt;
    }
    Vec<F> x(rows, F(0));
    for (std::size_t r = 0; r < row; ++r) x[static_cast<std::size_t>(pivot_col[r])] = aug[r][rows];
    return x;
}

}  // namespace csl
