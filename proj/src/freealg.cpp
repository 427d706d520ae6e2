#include "chopf/freealg.hpp"

#include <sstream>
#include <stdexcept>

namespace chopf {

ColourTag::ColourTag(RegistryPtr reg, const std::string& var)
    : mono_(LaurentPoly::variable(std::move(reg), var)) {}

ColourTag::ColourTag(RegistryPtr reg, const Rational& value)
    : mono_(LaurentPoly::constant(std::move(reg), value)) {
    if (mono_.is_zero())
        throw std::invalid_argument("colour tag must be invertible (nonzero)");
}

ColourTag::ColourTag(LaurentPoly mono) : mono_(std::move(mono)) {
    if (!mono_.is_monomial())
        throw std::invalid_argument("colour tag must be an invertible monomial: " + mono_.str());
}

ColourTag ColourTag::one(RegistryPtr reg) {
    return ColourTag(std::move(reg), Rational(1));
}

Letter::Letter(int i_, int j_, ColourTag c) : i(i_), j(j_), colour(std::move(c)) {
    if (i < 1 || i > 2 || j < 1 || j > 2)
        throw std::invalid_argument("letter index outside representation dimension");
}

int Letter::compare(const Letter& a, const Letter& b) {
    if (a.i != b.i) return a.i < b.i ? -1 : 1;
    if (a.j != b.j) return a.j < b.j ? -1 : 1;
    return ColourTag::compare(a.colour, b.colour);
}

bool WordLess::operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t p = 0; p < a.size(); ++p) {
        int c = Letter::compare(a[p], b[p]);
        if (c != 0) return c < 0;
    }
    return false;
}

FreeElem FreeElem::zero(RegistryPtr reg) {
    FreeElem e;
    e.reg_ = std::move(reg);
    return e;
}

FreeElem FreeElem::unit(RegistryPtr reg) {
    FreeElem e = zero(reg);
    e.terms_.emplace(Word{}, LaurentPoly::constant(e.reg_, 1));
    return e;
}

FreeElem FreeElem::letter(RegistryPtr reg, int i, int j, const ColourTag& colour) {
    FreeElem e = zero(reg);
    e.terms_.emplace(Word{Letter(i, j, colour)}, LaurentPoly::constant(e.reg_, 1));
    return e;
}

FreeElem FreeElem::from_word(RegistryPtr reg, Word w, const LaurentPoly& coeff) {
    FreeElem e = zero(std::move(reg));
    if (!coeff.is_zero()) e.terms_.emplace(std::move(w), coeff);
    return e;
}

void FreeElem::add_term(const Word& w, const LaurentPoly& coeff) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(w, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

FreeElem FreeElem::operator-() const {
    FreeElem out = *this;
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
}

FreeElem& FreeElem::operator+=(const FreeElem& rhs) {
    if (reg_ != rhs.reg_ && (!reg_ || !rhs.reg_ || *reg_ != *rhs.reg_))
        throw std::invalid_argument("registry mismatch");
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    result_colour_.reset();
    return *this;
}

FreeElem& FreeElem::operator-=(const FreeElem& rhs) {
    return *this += -rhs;
}

FreeElem operator*(const FreeElem& a, const FreeElem& b) {
    if (a.reg_ != b.reg_ && (!a.reg_ || !b.reg_ || *a.reg_ != *b.reg_))
        throw std::invalid_argument("registry mismatch");
    FreeElem out = FreeElem::zero(a.reg_);
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    }
    return out;
}

FreeElem FreeElem::scaled(const LaurentPoly& s) const {
    FreeElem out = zero(reg_);
    if (s.is_zero()) return out;
    for (const auto& [w, c] : terms_) out.add_term(w, c * s);
    return out;
}

std::optional<ColourTag> FreeElem::uniform_colour() const {
    std::optional<ColourTag> seen;
    for (const auto& [w, c] : terms_) {
        for (const auto& l : w) {
            if (!seen) {
                seen = l.colour;
            } else if (*seen != l.colour) {
                throw std::domain_error("mixed colours within one operand");
            }
        }
    }
    return seen;
}

FreeElem FreeElem::substitute_colours(const RegistryPtr& target,
                                      const std::map<std::string, ColourTag>& assign) const {
    std::map<std::string, LaurentPoly> poly_assign;
    for (const auto& [name, tag] : assign) poly_assign.emplace(name, tag.poly());
    FreeElem out = zero(target);
    for (const auto& [w, c] : terms_) {
        Word nw;
        nw.reserve(w.size());
        for (const auto& l : w)
            nw.emplace_back(l.i, l.j, ColourTag(l.colour.poly().substitute(target, poly_assign)));
        out.add_term(nw, c.substitute(target, poly_assign));
    }
    return out;
}

bool FreeElem::operator==(const FreeElem& rhs) const {
    if (reg_ != rhs.reg_ && (!reg_ || !rhs.reg_ || *reg_ != *rhs.reg_)) return false;
    return terms_ == rhs.terms_;
}

std::string FreeElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (const auto& l : w) {
            os << "*t" << l.i << l.j;
            if (!l.colour.is_one()) os << "(" << l.colour.str() << ")";
        }
    }
    return os.str();
}

LaurentPoly rho_letter_factor(int i, int j, const ColourTag& nu) {
    // (c_j / c_i) with (c_1, c_2) = (nu, 1)
    const LaurentPoly& p = nu.poly();
    LaurentPoly f = LaurentPoly::constant(p.registry(), 1);
    if (j == 1) f *= p;
    if (i == 1) f *= p.inverse_monomial();
    return f;
}

FreeElem rho_apply(const ColourTag& nu, const FreeElem& x) {
    FreeElem out = FreeElem::zero(x.registry());
    for (const auto& [w, c] : x.terms()) {
        LaurentPoly coeff = c;
        Word nw;
        nw.reserve(w.size());
        for (const auto& l : w) {
            coeff *= rho_letter_factor(l.i, l.j, nu);
            nw.emplace_back(l.i, l.j, l.colour * nu);
        }
        out += FreeElem::from_word(x.registry(), std::move(nw), coeff);
    }
    return out;
}

FreeElem coloured_product(const FreeElem& a, const FreeElem& b, const ColourTag& nu) {
    const ColourTag unit = ColourTag::one(nu.poly().registry());
    const ColourTag ca = a.uniform_colour().value_or(unit);
    const ColourTag cb = b.uniform_colour().value_or(unit);
    FreeElem cat = rho_apply(ca.inverse(), a) * rho_apply(cb.inverse(), b);
    FreeElem out = rho_apply(nu, cat);
    out.set_result_colour(nu);
    return out;
}

}  // namespace chopf
