#pragma once

// Dense exact-rational linear algebra for the pairing module: rank, kernels
// and inversion of full-rank blocks by Gaussian elimination. Pivot selection
// is deterministic: columns in order, first row with a nonzero entry.

#include <vector>

#include "chopf/rational.hpp"

namespace chopf {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    RationalMatrix transposed() const;
    RationalMatrix submatrix(const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols) const;
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    bool is_zero() const;

    struct Elimination {
        std::size_t rank = 0;
        std::vector<std::size_t> pivot_rows;  // in selection order
        std::vector<std::size_t> pivot_cols;
    };
    Elimination eliminate() const;

    std::size_t rank() const { return eliminate().rank; }

    // Basis of {x : A x = 0}, one vector per free column, deterministic.
    std::vector<std::vector<Rational>> right_kernel() const;
    // Basis of {x : x^T A = 0}.
    std::vector<std::vector<Rational>> left_kernel() const { return transposed().right_kernel(); }

    // Inverse of a square full-rank matrix; throws std::domain_error otherwise.
    RationalMatrix inverse() const;

    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

}  // namespace chopf
