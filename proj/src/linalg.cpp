#include "chopf/linalg.hpp"

#include <stdexcept>

namespace chopf {

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<std::size_t>& rows,
                                         const std::vector<std::size_t>& cols) const {
    RationalMatrix s(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) s.at(r, c) = at(rows[r], cols[c]);
    return s;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in rational product");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!chopf::is_zero(x)) return false;
    return true;
}

RationalMatrix::Elimination RationalMatrix::eliminate() const {
    RationalMatrix w = *this;
    Elimination out;
    std::vector<bool> row_used(rows_, false);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t pivot = rows_;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (!row_used[r] && !chopf::is_zero(w.at(r, c))) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows_) continue;
        row_used[pivot] = true;
        out.pivot_rows.push_back(pivot);
        out.pivot_cols.push_back(c);
        const Rational inv = Rational(1) / w.at(pivot, c);
        for (std::size_t cc = c; cc < cols_; ++cc) w.at(pivot, cc) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pivot || chopf::is_zero(w.at(r, c))) continue;
            const Rational f = w.at(r, c);
            for (std::size_t cc = c; cc < cols_; ++cc) w.at(r, cc) -= f * w.at(pivot, cc);
        }
    }
    out.rank = out.pivot_rows.size();
    return out;
}

std::vector<std::vector<Rational>> RationalMatrix::right_kernel() const {
    // Reduced row echelon form, then one basis vector per free column.
    RationalMatrix w = *this;
    std::vector<std::size_t> pivot_row_of_col(cols_, rows_);
    std::vector<bool> row_used(rows_, false);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t pivot = rows_;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (!row_used[r] && !chopf::is_zero(w.at(r, c))) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows_) continue;
        row_used[pivot] = true;
        pivot_row_of_col[c] = pivot;
        const Rational inv = Rational(1) / w.at(pivot, c);
        for (std::size_t cc = 0; cc < cols_; ++cc) w.at(pivot, cc) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pivot || chopf::is_zero(w.at(r, c))) continue;
            const Rational f = w.at(r, c);
            for (std::size_t cc = 0; cc < cols_; ++cc) w.at(r, cc) -= f * w.at(pivot, cc);
        }
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (pivot_row_of_col[free] != rows_) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[free] = 1;
        for (std::size_t c = 0; c < cols_; ++c) {
            const std::size_t pr = pivot_row_of_col[c];
            if (pr != rows_) v[c] = -w.at(pr, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw std::domain_error("inverse of non-square matrix");
    const std::size_t n = rows_;
    RationalMatrix w = *this;
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t r = c; r < n; ++r) {
            if (!chopf::is_zero(w.at(r, c))) {
                pivot = r;
                break;
            }
        }
        if (pivot == n) throw std::domain_error("matrix is singular");
        if (pivot != c) {
            for (std::size_t cc = 0; cc < n; ++cc) {
                std::swap(w.at(pivot, cc), w.at(c, cc));
                std::swap(inv.at(pivot, cc), inv.at(c, cc));
            }
        }
        const Rational f = Rational(1) / w.at(c, c);
        for (std::size_t cc = 0; cc < n; ++cc) {
            w.at(c, cc) *= f;
            inv.at(c, cc) *= f;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || chopf::is_zero(w.at(r, c))) continue;
            const Rational g = w.at(r, c);
            for (std::size_t cc = 0; cc < n; ++cc) {
                w.at(r, cc) -= g * w.at(c, cc);
                inv.at(r, cc) -= g * inv.at(c, cc);
            }
        }
    }
    return inv;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return RationalMatrix(0, 0);
    RationalMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged row list");
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

}  // namespace chopf
