#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace anick {

using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/* Coefficient field descriptor: Q when `parameter` is empty, Q(parameter) otherwise. */
struct Field {
    std::string parameter;

    bool is_rational() const { return parameter.empty(); }
    bool operator==(const Field&) const = default;
    std::string to_string() const { return parameter.empty() ? "Q" : "Q(" + parameter + ")"; }
};

/* Dense univariate polynomial over Q; coefficient k multiplies x^k. Never stores leading zeros. */
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(Rational constant);
    static UPoly monomial(Rational coefficient, int degree);
    static UPoly from_coefficients(std::vector<Rational> coefficients);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coefficient(int k) const;
    const Rational& leading_coefficient() const { return c_.back(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational evaluate(const Rational& x) const;
    UPoly monic() const;
    std::size_t term_count() const;

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& rhs);
    UPoly& operator-=(const UPoly& rhs);
    UPoly& operator*=(const Rational& rhs);
    friend UPoly operator+(UPoly lhs, const UPoly& rhs) { return lhs += rhs; }
    friend UPoly operator-(UPoly lhs, const UPoly& rhs) { return lhs -= rhs; }
    friend UPoly operator*(const UPoly& lhs, const UPoly& rhs);
    friend UPoly operator*(UPoly lhs, const Rational& rhs) { return lhs *= rhs; }

    bool operator==(const UPoly& rhs) const { return c_ == rhs.c_; }

    std::string to_string(const std::string& variable) const;

private:
    void trim();
    std::vector<Rational> c_;
};

/* Quotient and remainder of a / b, b != 0. */
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/* Monic gcd; gcd(0, 0) = 0. */
UPoly gcd(UPoly a, UPoly b);

/* Element of Q(parameter), kept as num/den with gcd 1 and den monic. */
class RationalFunction {
public:
    explicit RationalFunction(std::string parameter);
    RationalFunction(std::string parameter, UPoly numerator, UPoly denominator = UPoly(Rational(1)));

    const std::string& parameter() const { return parameter_; }
    const UPoly& numerator() const { return num_; }
    const UPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational evaluate(const Rational& value) const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& rhs) const;
    RationalFunction operator-(const RationalFunction& rhs) const;
    RationalFunction operator*(const RationalFunction& rhs) const;
    RationalFunction operator/(const RationalFunction& rhs) const;
    RationalFunction inverse() const;

    bool operator==(const RationalFunction& rhs) const = default;

    std::string to_string() const;

private:
    void normalize();
    void require_same(const RationalFunction& rhs) const;

    std::string parameter_;
    UPoly num_;
    UPoly den_;
};

/* A coefficient: an exact rational or a rational function in the field's parameter.
 * All arithmetic requires both operands to live in the same Field. */
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    explicit Scalar(Rational q) : v_(std::move(q)) {}
    explicit Scalar(RationalFunction f) : v_(std::move(f)) {}
    explicit Scalar(int n) : v_(Rational(n)) {}

    static Scalar zero(const Field& field) { return constant(field, Rational(0)); }
    static Scalar one(const Field& field) { return constant(field, Rational(1)); }
    static Scalar constant(const Field& field, const Rational& q);
    /* The field's generator (tau, A, ...). */
    static Scalar parameter(const Field& field);

    Field field() const;
    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rational() const { return std::get<Rational>(v_); }
    const RationalFunction& function() const { return std::get<RationalFunction>(v_); }

    bool is_zero() const;
    bool is_one() const;
    /* max(deg num, deg den) in the parameter; 0 for rationals. */
    int parameter_degree() const;
    /* Rough size measure used for pivot selection. */
    std::size_t bit_size() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);
    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    Scalar inverse() const;

    bool operator==(const Scalar& rhs) const { return v_ == rhs.v_; }

    /* Evaluation homomorphism parameter -> value. Identity on rationals. */
    Rational specialize(const Rational& value) const;

    std::string to_string() const;

private:
    std::variant<Rational, RationalFunction> v_;
};

/* tau = -A^2 - A^-2 as an element of Q(A). */
Scalar tau_from_A();

}  // namespace anick
