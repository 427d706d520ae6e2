#pragma once

// The coloured Hopf dual at desk scale: the dual pairing of function-algebra
// words against PBW monomials via iterated coproducts in the representation,
// the rho^nu compatibility check, and truncated Gram/dual-basis analysis for
// the universal T-matrix.
//
// Orderings (fixed): words are enumerated length-then-lex on (i,j) pairs; PBW
// monomials E^a K^b F^c are graded by a + c + |b|, within a degree by a
// descending, then b descending.

#include <optional>
#include <vector>

#include "chopf/linalg.hpp"
#include "chopf/model.hpp"
#include "chopf/report.hpp"

namespace chopf {

struct PBWMonomial {
    int e = 0;  // E exponent, >= 0
    int k = 0;  // K exponent, any integer
    int f = 0;  // F exponent, >= 0

    int degree() const { return e + f + (k < 0 ? -k : k); }
    bool is_unit() const { return e == 0 && k == 0 && f == 0; }
    bool operator==(const PBWMonomial& rhs) const {
        return e == rhs.e && k == rhs.k && f == rhs.f;
    }
    std::string str() const;
};

std::vector<Word> words_up_to(const RegistryPtr& reg, int max_len);
std::vector<PBWMonomial> pbw_monomials_up_to(int max_degree);

// <w, E^a K^b F^c>: the (i_1..i_k),(j_1..j_k) entry of the product of
// iterated-coproduct images. The empty word pairs as the counit. When
// `twist` is given, the representation matrices are conjugated by
// diag(twist, 1), i.e. the pairing is taken against sigma^twist(X).
LaurentPoly pair_word_pbw(const ModelSpec& model, const Word& w, const PBWMonomial& x,
                          const std::optional<ColourTag>& twist = std::nullopt);

// <rho^nu(w), sigma^nu(X)>_{q^nu} = <w, X>_q for all words of length <= degree
// and PBW monomials of degree <= degree; exact equality of both sides.
CheckReport check_duality_compat(const ModelSpec& model, const ColourTag& nu, int degree);

// Negative control: rho drops the c_j factor (uses 1/c_i only).
CheckReport check_duality_corrupted_control(const ModelSpec& model, const ColourTag& nu,
                                            int degree);

struct GramTable {
    int degree = 0;
    std::optional<Rational> q_eval;
    std::vector<Word> words;       // row index
    std::vector<PBWMonomial> pbws; // col index
    std::vector<LaurentPoly> values;  // row-major
    std::optional<std::size_t> rank;  // computed only when evaluated

    const LaurentPoly& at(std::size_t r, std::size_t c) const {
        return values[r * pbws.size() + c];
    }
    // Entries as exact rationals; requires q_eval.
    RationalMatrix numeric() const;
};

// Full pairing table up to the degree bound. With `q_eval` the table entries
// are evaluated exactly and the rank is computed; q in {0, 1, -1} is a
// degenerate deformation point and is rejected.
GramTable gram_matrix(const ModelSpec& model, int degree,
                      const std::optional<Rational>& q_eval);

// On the maximal full-rank square sub-block of the evaluated Gram table,
// solves for the dual-basis coefficient matrix and verifies the two counit
// laws of the truncated universal T-matrix. Rank deficiency is reported in
// the context, never silently inverted. At degree 2, when the unit-colour
// RTT relations are supplied, additionally verifies that the left kernel of
// the homogeneous length-2 block is exactly their span (the full <=2 table
// kernel also contains truncation artifacts mixing word lengths, whose count
// is reported).
CheckReport truncated_t_check(const ModelSpec& model, int degree, const Rational& q_eval,
                              const std::vector<FreeElem>& unit_relations = {});

}  // namespace chopf
