#pragma once

// Dense matrices over the Laurent ring, Kronecker products and leg
// embeddings into two- and three-fold tensor spaces.
//
// Index conventions (fixed throughout the project):
//   * matrices are row-major and zero-based;
//   * the Kronecker product maps pair (i,k),(j,l) to
//     row i*dim(b)+k, col j*dim(b)+l;
//   * all leg embeddings are derived from one permutation helper.

#include <vector>

#include "chopf/ring.hpp"

namespace chopf {

class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(RegistryPtr reg, std::size_t rows, std::size_t cols);

    static RingMatrix identity(RegistryPtr reg, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const RegistryPtr& registry() const { return reg_; }

    LaurentPoly& at(std::size_t r, std::size_t c);
    const LaurentPoly& at(std::size_t r, std::size_t c) const;

    RingMatrix operator-() const;
    RingMatrix& operator+=(const RingMatrix& rhs);
    RingMatrix& operator-=(const RingMatrix& rhs);
    friend RingMatrix operator+(RingMatrix a, const RingMatrix& b) { return a += b; }
    friend RingMatrix operator-(RingMatrix a, const RingMatrix& b) { return a -= b; }
    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);

    RingMatrix scaled(const LaurentPoly& s) const;

    bool is_zero() const;
    bool operator==(const RingMatrix& rhs) const;
    bool operator!=(const RingMatrix& rhs) const { return !(*this == rhs); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    RegistryPtr reg_;
    std::vector<LaurentPoly> entries_;
};

RingMatrix kron(const RingMatrix& a, const RingMatrix& b);

// Permutation matrix swapping tensor legs a and b (zero-based) of a
// `legs`-fold product of `dim`-dimensional spaces.
RingMatrix leg_swap_matrix(RegistryPtr reg, std::size_t legs, std::size_t dim,
                           std::size_t a, std::size_t b);

enum class LegPair { L12, L13, L23 };

// Embeds a 4x4 matrix acting on the named pair of legs of V⊗V⊗V (dim V = 2),
// identity on the remaining leg. The 13 embedding conjugates (r ⊗ I) by the
// swap of legs 2 and 3.
RingMatrix embed_leg(const RingMatrix& r, LegPair legs);

// Conjugation of a 4x4 matrix by the swap of the two tensor factors.
RingMatrix flip_conjugate(const RingMatrix& m);

}  // namespace chopf
