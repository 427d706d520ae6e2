#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "chopf/ring.hpp"

using namespace chopf;

namespace {

RegistryPtr qlm() { return make_registry({"q", "l", "m"}); }

LaurentPoly qvar(const RegistryPtr& r, int p = 1) { return LaurentPoly::variable(r, "q", p); }

LaurentPoly random_poly(const RegistryPtr& reg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(-3, 3), coeff(-5, 5);
    LaurentPoly p = LaurentPoly::zero(reg);
    for (int t = nterms(rng); t > 0; --t) {
        std::vector<int> e(reg->size());
        for (auto& x : e) x = expo(rng);
        p += LaurentPoly::monomial(reg, std::move(e), Rational(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("registry rejects duplicates and keeps order") {
    CHECK_THROWS_AS(make_registry({"q", "q"}), std::invalid_argument);
    auto r = qlm();
    CHECK(r->size() == 3);
    CHECK(r->names()[0] == "q");
    CHECK(r->index_of("m") == 2);
    CHECK(!r->index_of("x"));
}

TEST_CASE("addition examples") {
    auto r = qlm();
    const LaurentPoly q = qvar(r), qi = qvar(r, -1);
    CHECK((q + (-q)).is_zero());
    CHECK((q - qi) + qi == q);
    // (l/m) + (l/m) = 2*l*m^-1
    LaurentPoly lm = LaurentPoly::variable(r, "l") * LaurentPoly::variable(r, "m", -1);
    CHECK(lm + lm == LaurentPoly::monomial(r, {0, 1, -1}, Rational(2)));
}

TEST_CASE("multiplication examples") {
    auto r = qlm();
    const LaurentPoly q = qvar(r), qi = qvar(r, -1);
    CHECK(q * qi == LaurentPoly::constant(r, 1));
    CHECK((q - qi) * (q + qi) == q.pow(2) - qi.pow(2));
    LaurentPoly lm = LaurentPoly::variable(r, "l") * LaurentPoly::variable(r, "m", -1);
    LaurentPoly ml = LaurentPoly::variable(r, "m") * LaurentPoly::variable(r, "l", -1);
    CHECK((lm * ml).is_one());
}

TEST_CASE("registry mismatch is an error") {
    auto r1 = qlm();
    auto r2 = make_registry({"q", "l"});
    CHECK_THROWS_AS(qvar(r1) + qvar(r2), std::invalid_argument);
    CHECK_THROWS_AS(qvar(r1) * qvar(r2), std::invalid_argument);
}

TEST_CASE("substitution examples") {
    auto r = qlm();
    const LaurentPoly q = qvar(r), qi = qvar(r, -1);
    const LaurentPoly l = LaurentPoly::variable(r, "l"), mi = LaurentPoly::variable(r, "m", -1);

    // (q - q^-1) * l/m with l->1, m->1
    LaurentPoly p = (q - qi) * l * mi;
    auto rq = make_registry({"q"});
    LaurentPoly got = p.substitute(rq, {{"l", LaurentPoly::constant(rq, 1)},
                                        {"m", LaurentPoly::constant(rq, 1)}});
    CHECK(got == LaurentPoly::variable(rq, "q") - LaurentPoly::variable(rq, "q", -1));

    // q^2 at q = 3/2 -> 9/4
    CHECK(q.pow(2).eval_at({{"q", Rational(3, 2)}}).constant_value() == Rational(9, 4));

    // l/m with l -> m (identification of colours)
    LaurentPoly ident = (l * mi).substitute(r, {{"l", LaurentPoly::variable(r, "m")}});
    CHECK(ident.is_one());

    CHECK_THROWS_AS(p.substitute(r, {{"l", LaurentPoly::zero(r)}}), std::domain_error);
}

TEST_CASE("monomial inversion") {
    auto r = qlm();
    const LaurentPoly q = qvar(r), l = LaurentPoly::variable(r, "l");
    CHECK((q * l).inverse_monomial() == LaurentPoly::monomial(r, {-1, -1, 0}, Rational(1)));
    LaurentPoly two_mi = LaurentPoly::monomial(r, {0, 0, -1}, Rational(2));
    CHECK(two_mi.inverse_monomial() == LaurentPoly::monomial(r, {0, 0, 1}, Rational(1, 2)));
    CHECK_THROWS_AS((q + LaurentPoly::constant(r, 1)).inverse_monomial(), std::domain_error);
}

TEST_CASE("ring axioms on random polynomials") {
    auto r = qlm();
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 60; ++t) {
        LaurentPoly a = random_poly(r, rng), b = random_poly(r, rng), c = random_poly(r, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + LaurentPoly::zero(r) == a);
        CHECK(a * LaurentPoly::constant(r, 1) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    auto r = qlm();
    auto target = make_registry({"q", "m"});
    std::map<std::string, LaurentPoly> assign{
        {"l", LaurentPoly::monomial(target, {0, 2}, Rational(3))}};
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
        LaurentPoly a = random_poly(r, rng), b = random_poly(r, rng);
        CHECK((a * b).substitute(target, assign) ==
              a.substitute(target, assign) * b.substitute(target, assign));
        CHECK((a + b).substitute(target, assign) ==
              a.substitute(target, assign) + b.substitute(target, assign));
    }
}

TEST_CASE("canonical form: no zero coefficients survive") {
    auto r = qlm();
    std::mt19937_64 rng(99);
    for (int t = 0; t < 40; ++t) {
        LaurentPoly a = random_poly(r, rng);
        LaurentPoly z = a - a;
        CHECK(z.terms().empty());
        LaurentPoly doubled = a + a;
        for (const auto& [e, c] : doubled.terms()) CHECK(!is_zero(c));
    }
}

TEST_CASE("display form is stable") {
    auto r = qlm();
    // graded-lex order: the q^-1 term (degree -1) precedes the q term
    LaurentPoly p = qvar(r) - qvar(r, -1);
    CHECK(p.str() == "-q^-1 + q");
    CHECK(LaurentPoly::zero(r).str() == "0");
    CHECK(LaurentPoly::constant(r, Rational(-3, 2)).str() == "-3/2");
    CHECK(LaurentPoly::monomial(r, {2, -1, 0}, Rational(1, 2)).str() == "1/2*q^2*l^-1");
}
