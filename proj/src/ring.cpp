#include "chopf/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chopf {

VarRegistry::VarRegistry(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw std::invalid_argument("registry variable name must be nonempty");
        auto [it, inserted] = index_.emplace(names_[i], i);
        if (!inserted)
            throw std::invalid_argument("duplicate registry variable: " + names_[i]);
    }
}

std::optional<std::size_t> VarRegistry::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

RegistryPtr make_registry(std::vector<std::string> names) {
    return std::make_shared<VarRegistry>(std::move(names));
}

bool GradedLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

LaurentPoly LaurentPoly::zero(RegistryPtr reg) {
    return LaurentPoly(std::move(reg), {});
}

LaurentPoly LaurentPoly::constant(RegistryPtr reg, const Rational& value) {
    LaurentPoly p(std::move(reg), {});
    if (!chopf::is_zero(value))
        p.terms_.emplace(Exponents(p.reg_->size(), 0), value);
    return p;
}

LaurentPoly LaurentPoly::variable(RegistryPtr reg, const std::string& name, int power) {
    auto idx = reg->index_of(name);
    if (!idx)
        throw std::invalid_argument("variable not in registry: " + name);
    Exponents e(reg->size(), 0);
    e[*idx] = power;
    return monomial(std::move(reg), std::move(e), Rational(1));
}

LaurentPoly LaurentPoly::monomial(RegistryPtr reg, Exponents exps, const Rational& coeff) {
    if (exps.size() != reg->size())
        throw std::invalid_argument("exponent vector length does not match registry");
    LaurentPoly p(std::move(reg), {});
    if (!chopf::is_zero(coeff))
        p.terms_.emplace(std::move(exps), coeff);
    return p;
}

bool LaurentPoly::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    return c == 1 && std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational LaurentPoly::constant_value() const {
    if (!is_constant())
        throw std::domain_error("polynomial is not constant: " + str());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void LaurentPoly::require_same_registry(const LaurentPoly& a, const LaurentPoly& b) {
    if (!a.reg_ || !b.reg_)
        throw std::invalid_argument("operation on registry-less polynomial");
    if (a.reg_ != b.reg_ && *a.reg_ != *b.reg_)
        throw std::invalid_argument("registry mismatch");
}

void LaurentPoly::add_term(const Exponents& exps, const Rational& coeff) {
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (!chopf::is_zero(coeff)) terms_.emplace(exps, coeff);
        return;
    }
    it->second += coeff;
    if (chopf::is_zero(it->second)) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(reg_, terms_);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    require_same_registry(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    require_same_registry(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    require_same_registry(*this, rhs);
    LaurentPoly out(reg_, {});
    Exponents sum(reg_->size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
            out.add_term(sum, ca * cb);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

LaurentPoly LaurentPoly::inverse_monomial() const {
    if (terms_.size() != 1)
        throw std::domain_error("not a unit of the Laurent ring (non-monomial): " + str());
    const auto& [e, c] = *terms_.begin();
    Exponents inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
    return monomial(reg_, std::move(inv), Rational(1) / c);
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) return inverse_monomial().pow(-e);
    LaurentPoly acc = constant(reg_, 1);
    LaurentPoly base = *this;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        if (k > 1) base *= base;
    }
    return acc;
}

LaurentPoly LaurentPoly::substitute(const RegistryPtr& target,
                                    const std::map<std::string, LaurentPoly>& assign) const {
    if (!reg_) throw std::invalid_argument("substitute on registry-less polynomial");
    // Resolve each source variable to a monomial over the target registry.
    std::vector<LaurentPoly> images;
    images.reserve(reg_->size());
    for (const auto& name : reg_->names()) {
        auto it = assign.find(name);
        if (it != assign.end()) {
            const LaurentPoly& v = it->second;
            if (v.is_zero())
                throw std::domain_error("substitution of zero for invertible variable " + name);
            if (!v.is_monomial())
                throw std::domain_error("substitution value for " + name + " must be a monomial");
            if (v.reg_ != target && *v.reg_ != *target)
                throw std::invalid_argument("substitution value not over target registry");
            images.push_back(v);
        } else {
            images.push_back(variable(target, name));
        }
    }
    LaurentPoly out = zero(target);
    for (const auto& [e, c] : terms_) {
        LaurentPoly term = constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term *= images[i].pow(e[i]);
        out += term;
    }
    return out;
}

LaurentPoly LaurentPoly::eval_at(const std::map<std::string, Rational>& values) const {
    std::vector<std::string> kept;
    for (const auto& name : reg_->names())
        if (!values.count(name)) kept.push_back(name);
    RegistryPtr target = make_registry(kept);
    std::map<std::string, LaurentPoly> assign;
    for (const auto& [name, v] : values) {
        if (!reg_->index_of(name))
            throw std::invalid_argument("evaluation of unknown variable: " + name);
        assign.emplace(name, constant(target, v));
    }
    return substitute(target, assign);
}

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
    if (reg_ != rhs.reg_ && (!reg_ || !rhs.reg_ || *reg_ != *rhs.reg_)) return false;
    return terms_ == rhs.terms_;
}

int LaurentPoly::compare(const LaurentPoly& a, const LaurentPoly& b) {
    const auto& an = a.reg_ ? a.reg_->names() : std::vector<std::string>{};
    const auto& bn = b.reg_ ? b.reg_->names() : std::vector<std::string>{};
    if (an != bn) return an < bn ? -1 : 1;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    GradedLexLess less;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (less(ia->first, ib->first)) return -1;
        if (less(ib->first, ia->first)) return 1;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational ac = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool all_zero = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        bool coeff_shown = (ac != 1) || all_zero;
        if (coeff_shown) os << rational_to_string(ac);
        bool need_star = coeff_shown;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << reg_->names()[i];
            if (e[i] != 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace chopf
