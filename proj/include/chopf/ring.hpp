#pragma once

// Exact sparse multivariate Laurent-polynomial arithmetic over the rationals.
// This is the coefficient ring k[q^{±1}, l^{±1}, m^{±1}, n^{±1}, ...] used by
// every other module. Values are immutable after construction and all
// operations are pure, so everything here is safe to use concurrently.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chopf/rational.hpp"

namespace chopf {

// Ordered set of distinct variable names. The position of a name defines its
// slot in every exponent vector, fixed at construction.
class VarRegistry {
public:
    explicit VarRegistry(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    bool operator==(const VarRegistry& other) const { return names_ == other.names_; }
    bool operator!=(const VarRegistry& other) const { return !(*this == other); }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

using RegistryPtr = std::shared_ptr<const VarRegistry>;

RegistryPtr make_registry(std::vector<std::string> names);

// Graded-lexicographic order on exponent vectors: total degree first, then
// lexicographic. Fixes term order for storage, display and serialization.
struct GradedLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

class LaurentPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    LaurentPoly() = default;  // zero over a null registry; only for containers

    static LaurentPoly zero(RegistryPtr reg);
    static LaurentPoly constant(RegistryPtr reg, const Rational& value);
    static LaurentPoly variable(RegistryPtr reg, const std::string& name, int power = 1);
    static LaurentPoly monomial(RegistryPtr reg, Exponents exps, const Rational& coeff);

    const RegistryPtr& registry() const { return reg_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    // Value of a constant polynomial (zero included). Throws otherwise.
    Rational constant_value() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

    // Units of the Laurent ring are exactly the nonzero monomials;
    // throws std::domain_error on anything else.
    LaurentPoly inverse_monomial() const;
    // Integer power; negative exponents require a monomial.
    LaurentPoly pow(int e) const;

    // Substitutes variables by nonzero monomials over `target`. Variables not
    // assigned must exist in `target` and map to themselves. Throws on a zero
    // or non-monomial assignment.
    LaurentPoly substitute(const RegistryPtr& target,
                           const std::map<std::string, LaurentPoly>& assign) const;
    // Convenience: evaluate some variables at nonzero rationals; the result
    // lives over the registry with those variables removed.
    LaurentPoly eval_at(const std::map<std::string, Rational>& values) const;

    bool operator==(const LaurentPoly& rhs) const;
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    // Total order for use as a container key (registry contents, then terms).
    static int compare(const LaurentPoly& a, const LaurentPoly& b);

    std::string str() const;

private:
    LaurentPoly(RegistryPtr reg, TermMap terms) : reg_(std::move(reg)), terms_(std::move(terms)) {}
    void add_term(const Exponents& exps, const Rational& coeff);
    static void require_same_registry(const LaurentPoly& a, const LaurentPoly& b);

    RegistryPtr reg_;
    TermMap terms_;
};

}  // namespace chopf
