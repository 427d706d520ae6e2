#pragma once

// Free noncommutative algebra over the Laurent ring in coloured letters
// t_{ij}(c), i,j ∈ {1,2}. Carrier for function-algebra elements, RTT
// relations and the coloured product.
//
// Colours are letter tags, not separate algebra instances: elements of
// different colour sectors live in one free algebra, distinguished by the
// tag. A tag is an invertible monomial (nonzero rational times a product of
// colour-variable powers), closed under the colour-group composition law.

#include <map>
#include <optional>
#include <vector>

#include "chopf/ring.hpp"

namespace chopf {

class ColourTag {
public:
    ColourTag() = default;
    ColourTag(RegistryPtr reg, const std::string& var);
    ColourTag(RegistryPtr reg, const Rational& value);
    explicit ColourTag(LaurentPoly mono);

    static ColourTag one(RegistryPtr reg);

    const LaurentPoly& poly() const { return mono_; }
    bool is_one() const { return mono_.is_one(); }

    ColourTag operator*(const ColourTag& rhs) const { return ColourTag(mono_ * rhs.mono_); }
    ColourTag inverse() const { return ColourTag(mono_.inverse_monomial()); }

    bool operator==(const ColourTag& rhs) const { return mono_ == rhs.mono_; }
    bool operator!=(const ColourTag& rhs) const { return !(*this == rhs); }
    static int compare(const ColourTag& a, const ColourTag& b) {
        return LaurentPoly::compare(a.mono_, b.mono_);
    }

    std::string str() const { return mono_.str(); }

private:
    LaurentPoly mono_;  // invariant: nonzero monomial
};

struct Letter {
    int i = 1;  // row index, 1-based, in {1,2}
    int j = 1;  // col index, 1-based, in {1,2}
    ColourTag colour;

    Letter() = default;
    Letter(int i_, int j_, ColourTag c);

    bool operator==(const Letter& rhs) const {
        return i == rhs.i && j == rhs.j && colour == rhs.colour;
    }
    static int compare(const Letter& a, const Letter& b);
};

using Word = std::vector<Letter>;  // empty word = unit

// Length-then-lexicographic order on words.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const;
};

class FreeElem {
public:
    using TermMap = std::map<Word, LaurentPoly, WordLess>;

    FreeElem() = default;
    static FreeElem zero(RegistryPtr reg);
    static FreeElem unit(RegistryPtr reg);  // 1 * empty word
    static FreeElem letter(RegistryPtr reg, int i, int j, const ColourTag& colour);
    static FreeElem from_word(RegistryPtr reg, Word w, const LaurentPoly& coeff);

    const RegistryPtr& registry() const { return reg_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // resultColour is metadata recording the target colour of a coloured
    // product; it does not participate in term identity or equality.
    const std::optional<ColourTag>& result_colour() const { return result_colour_; }
    void set_result_colour(ColourTag c) { result_colour_ = std::move(c); }
    void clear_result_colour() { result_colour_.reset(); }

    FreeElem operator-() const;
    FreeElem& operator+=(const FreeElem& rhs);
    FreeElem& operator-=(const FreeElem& rhs);
    friend FreeElem operator+(FreeElem a, const FreeElem& b) { return a += b; }
    friend FreeElem operator-(FreeElem a, const FreeElem& b) { return a -= b; }

    // Bilinear extension of word concatenation (the standard multiplication).
    friend FreeElem operator*(const FreeElem& a, const FreeElem& b);
    FreeElem scaled(const LaurentPoly& s) const;

    // The single colour carried by every letter, std::nullopt when no letter
    // occurs. Throws std::domain_error on mixed colours.
    std::optional<ColourTag> uniform_colour() const;

    // Retags letters and substitutes colour variables in coefficients
    // consistently. Keys are colour-variable names.
    FreeElem substitute_colours(const RegistryPtr& target,
                                const std::map<std::string, ColourTag>& assign) const;

    bool operator==(const FreeElem& rhs) const;
    bool operator!=(const FreeElem& rhs) const { return !(*this == rhs); }

    std::string str() const;

private:
    void add_term(const Word& w, const LaurentPoly& coeff);

    RegistryPtr reg_;
    TermMap terms_;
    std::optional<ColourTag> result_colour_;
};

// The dual colour action: every letter t_{ij}(c) picks up the diagonal
// factor c_j/c_i with (c_1, c_2) = (ν, 1) and its tag is composed with ν.
// Group action: rho_apply(λ) ∘ rho_apply(μ) = rho_apply(λμ), rho_apply(1) = id.
// The factors realize the dual-pairing compatibility checked by the pairing
// module's check_duality_compat.
FreeElem rho_apply(const ColourTag& nu, const FreeElem& x);

// Diagonal factor of rho for a single letter position (i, j).
LaurentPoly rho_letter_factor(int i, int j, const ColourTag& nu);

// Coloured product x(λ) ∘ν y(μ): undo the operand colours, concatenate, then
// push to the target colour. Operands must each be uniformly coloured.
// Result letters carry colour ν and resultColour is set to ν.
FreeElem coloured_product(const FreeElem& a, const FreeElem& b, const ColourTag& nu);

}  // namespace chopf
