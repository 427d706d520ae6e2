#include "chopf/tensor.hpp"

#include <stdexcept>

namespace chopf {

RingMatrix::RingMatrix(RegistryPtr reg, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), reg_(std::move(reg)),
      entries_(rows * cols, LaurentPoly::zero(reg_)) {}

RingMatrix RingMatrix::identity(RegistryPtr reg, std::size_t n) {
    RingMatrix m(reg, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(reg, 1);
    return m;
}

LaurentPoly& RingMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    return entries_[r * cols_ + c];
}

const LaurentPoly& RingMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    return entries_[r * cols_ + c];
}

RingMatrix RingMatrix::operator-() const {
    RingMatrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

RingMatrix& RingMatrix::operator+=(const RingMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix shape mismatch in addition");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

RingMatrix& RingMatrix::operator-=(const RingMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix shape mismatch in subtraction");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix shape mismatch in product");
    RingMatrix out(a.reg_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const LaurentPoly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const LaurentPoly& bkj = b.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

RingMatrix RingMatrix::scaled(const LaurentPoly& s) const {
    RingMatrix out = *this;
    for (auto& e : out.entries_) e *= s;
    return out;
}

bool RingMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool RingMatrix::operator==(const RingMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

RingMatrix kron(const RingMatrix& a, const RingMatrix& b) {
    RingMatrix out(a.registry(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const LaurentPoly& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const LaurentPoly& bkl = b.at(k, l);
                    if (!bkl.is_zero())
                        out.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
                }
        }
    return out;
}

RingMatrix leg_swap_matrix(RegistryPtr reg, std::size_t legs, std::size_t dim,
                           std::size_t a, std::size_t b) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < legs; ++i) n *= dim;
    RingMatrix p(reg, n, n);
    const LaurentPoly one = LaurentPoly::constant(reg, 1);
    std::vector<std::size_t> digits(legs);
    for (std::size_t idx = 0; idx < n; ++idx) {
        std::size_t rest = idx;
        for (std::size_t leg = legs; leg-- > 0;) {
            digits[leg] = rest % dim;
            rest /= dim;
        }
        std::swap(digits[a], digits[b]);
        std::size_t target = 0;
        for (std::size_t leg = 0; leg < legs; ++leg) target = target * dim + digits[leg];
        p.at(target, idx) = one;
    }
    return p;
}

RingMatrix embed_leg(const RingMatrix& r, LegPair legs) {
    if (r.rows() != 4 || r.cols() != 4)
        throw std::invalid_argument("embed_leg expects a 4x4 matrix");
    const RegistryPtr& reg = r.registry();
    const RingMatrix i2 = RingMatrix::identity(reg, 2);
    switch (legs) {
        case LegPair::L12:
            return kron(r, i2);
        case LegPair::L23:
            return kron(i2, r);
        case LegPair::L13: {
            RingMatrix p = leg_swap_matrix(reg, 3, 2, 1, 2);
            return p * kron(r, i2) * p;
        }
    }
    throw std::invalid_argument("bad leg label");
}

RingMatrix flip_conjugate(const RingMatrix& m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw std::invalid_argument("flip_conjugate expects a 4x4 matrix");
    RingMatrix p = leg_swap_matrix(m.registry(), 2, 2, 0, 1);
    return p * m * p;
}

}  // namespace chopf
