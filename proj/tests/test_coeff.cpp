#include "anick/coeff.hpp"
#include "anick/error.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace anick;

namespace {
const Field Qt{"tau"};
const Field Q{};

Scalar tau() { return Scalar::parameter(Qt); }
Scalar c(const Field& f, int n) { return Scalar::constant(f, Rational(n)); }
}  // namespace

TEST_CASE("rationals are exact and canonical")
{
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-4/2")) == "-2");
    CHECK(parse_rational("-10/4") == Rational(-5, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), DivisionByZero);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("polynomial gcd and division")
{
    // (t - 1)(t + 2) and (t - 1)(t - 3)
    UPoly a = UPoly::from_coefficients({Rational(-2), Rational(1), Rational(1)});
    UPoly b = UPoly::from_coefficients({Rational(3), Rational(-4), Rational(1)});
    CHECK(gcd(a, b) == UPoly::from_coefficients({Rational(-1), Rational(1)}));
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(gcd(UPoly(), UPoly()).is_zero());
    CHECK(a.to_string("tau") == "tau^2 + tau - 2");
}

TEST_CASE("rational functions normalize")
{
    // (t^2 - 1) / (2t - 2) = (t + 1)/2
    RationalFunction f("tau", UPoly::from_coefficients({Rational(-1), Rational(0), Rational(1)}), UPoly::from_coefficients({Rational(-2), Rational(2)}));
    CHECK(f.denominator() == UPoly(Rational(1)));
    CHECK(f.numerator() == UPoly::from_coefficients({Rational(1, 2), Rational(1, 2)}));
    CHECK(f.evaluate(Rational(3)) == Rational(2));
}

TEST_CASE("scalar printing")
{
    CHECK(tau().to_string() == "tau");
    CHECK((-tau()).to_string() == "-tau");
    CHECK((tau() * tau() - c(Qt, 2) * tau() + c(Qt, 1)).to_string() == "tau^2 - 2*tau + 1");
    CHECK(tau_from_A().to_string() == "(-A^4 - 1)/A^2");
    CHECK(Scalar(Rational(-3, 4)).to_string() == "-3/4");
}

TEST_CASE("field axioms in Q(tau)")
{
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Scalar a = testing::random_scalar(rng, Qt), b = testing::random_scalar(rng, Qt), d = testing::random_scalar(rng, Qt);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + d == a + (b + d));
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * (b + d) == a * b + a * d);
        CHECK(a - a == Scalar::zero(Qt));
        CHECK(a * Scalar::one(Qt) == a);
        if (!a.is_zero())
            CHECK(a * a.inverse() == Scalar::one(Qt));
    }
}

TEST_CASE("specialization is a ring homomorphism away from poles")
{
    std::mt19937 rng(11);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        Scalar a = testing::random_scalar(rng, Qt), b = testing::random_scalar(rng, Qt);
        Rational v = testing::random_rational(rng);
        try {
            Rational sa = a.specialize(v), sb = b.specialize(v);
            CHECK((a + b).specialize(v) == sa + sb);
            CHECK((a * b).specialize(v) == sa * sb);
            ++checked;
        }
        catch (const PoleError&) {
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS(Scalar::zero(Qt).inverse(), DivisionByZero);
    CHECK_THROWS_AS(c(Q, 1) + tau(), FieldMismatch);
    CHECK_THROWS_AS(c(Qt, 1) + Scalar::parameter(Field{"A"}), FieldMismatch);
    Scalar inv = (tau() - c(Qt, 1)).inverse();
    CHECK_THROWS_AS(inv.specialize(Rational(1)), PoleError);
    CHECK(inv.specialize(Rational(3)) == Rational(1, 2));
}

TEST_CASE("degree and size measures")
{
    CHECK(c(Qt, 5).parameter_degree() == 0);
    CHECK((tau() * tau()).parameter_degree() == 2);
    CHECK(tau().inverse().parameter_degree() == 1);
    CHECK(Scalar(Rational(1, 1024)).bit_size() > Scalar(Rational(1, 2)).bit_size());
    CHECK(c(Qt, 1).is_one());
    CHECK_FALSE(tau().is_one());
}
