#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace chopf {

// Exact arbitrary-precision rational; all scalar arithmetic in the library
// is over this type. mpq_class keeps values canonical (gcd 1, positive den).
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// mpq_class(num, den) does NOT reduce to canonical form, which GMP
// comparisons require; always build fractions through this helper.
inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q". Throws on malformed input or zero denominator.
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (v.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + s);
    v.canonicalize();
    return v;
}

// Canonical form: "p" when the denominator is 1, else "p/q".
inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

}  // namespace chopf
