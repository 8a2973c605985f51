#include "weylosc/poly.hpp"

#include <catch_amalgamated.hpp>

using weylosc::LaurentPoly;
using weylosc::Poly;
using weylosc::Rational;

TEST_CASE("zero polynomial has no degree") {
    Poly z;
    CHECK(z.is_zero());
    CHECK_FALSE(z.degree().has_value());
    CHECK(Poly({Rational(0), Rational(0)}).is_zero());
    CHECK_THROWS_AS(z.leading(), std::domain_error);
}

TEST_CASE("trailing zeros are trimmed") {
    Poly p({Rational(1), Rational(2), Rational(0)});
    REQUIRE(p.degree());
    CHECK(*p.degree() == 1);
    Poly q = p - Poly::monomial(1, Rational(2));
    CHECK(*q.degree() == 0);
}

TEST_CASE("arithmetic, evaluation and calculus") {
    Poly p({Rational(-1), Rational(0), Rational(1)}); // y^2 - 1
    Poly q({Rational(1), Rational(1)});               // y + 1
    CHECK(p * q == Poly({Rational(-1), Rational(-1), Rational(1), Rational(1)}));
    CHECK(p.eval(Rational(3)) == Rational(8));
    CHECK(p.derivative() == Poly::monomial(1, Rational(2)));
    CHECK(p.shifted(Rational(1)) == Poly({Rational(0), Rational(2), Rational(1)}));
    CHECK(p.scaled(Rational(1, 2)) == Poly({Rational(-1), Rational(0), Rational(1, 4)}));
    CHECK(p.compose(q) == p.shifted(Rational(1)));
    CHECK(Poly({Rational(2), Rational(4)}).monic() == Poly({Rational(1, 2), Rational(1)}));
}

TEST_CASE("shifted agrees with pointwise evaluation") {
    Poly p({Rational(3), Rational(-2, 3), Rational(0), Rational(5, 7)});
    for (long k = -3; k <= 3; ++k) {
        Rational y(k, 2);
        CHECK(p.shifted(Rational(1, 3)).eval(y) == p.eval(y + Rational(1, 3)));
        CHECK(p.scaled(Rational(-2)).eval(y) == p.eval(Rational(-2) * y));
    }
}

TEST_CASE("Laurent polynomials keep no zero terms") {
    LaurentPoly a = LaurentPoly::term(-1, Rational(2)) + LaurentPoly::term(1, Rational(1));
    LaurentPoly b = LaurentPoly::term(-1, Rational(-2));
    LaurentPoly s = a + b;
    CHECK(s.terms().size() == 1);
    CHECK(s.coeff(1) == Rational(1));
    CHECK(*s.min_power() == 1);
    CHECK((a - a).is_zero());
}

TEST_CASE("Laurent calculus and conversions") {
    LaurentPoly a = LaurentPoly::term(-2, Rational(3)) + LaurentPoly::term(2, Rational(1));
    LaurentPoly d = a.derivative();
    CHECK(d.coeff(-3) == Rational(-6));
    CHECK(d.coeff(1) == Rational(2));
    CHECK_FALSE(a.to_poly().has_value());
    CHECK(a.times_power(2).to_poly() == Poly({Rational(3), Rational(0), Rational(0), Rational(0), Rational(1)}));
    CHECK(a.scaled(Rational(2)).coeff(-2) == Rational(3, 4));
    CHECK_THROWS_AS(a.shifted(Rational(1)), std::domain_error);
    CHECK((a * LaurentPoly::term(-2, Rational(1))).coeff(-4) == Rational(3));
}
