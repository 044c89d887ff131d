#include "anick/coeff.hpp"

#include "anick/error.hpp"

#include <algorithm>

namespace anick {

std::string to_string(const Rational& q)
{
    return q.get_str();
}

Rational parse_rational(const std::string& text)
{
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw ParseError("not a rational number: '" + text + "'", 1, 1);
    if (q.get_den() == 0)
        throw DivisionByZero();
    q.canonicalize();
    return q;
}

/****************************************************
 *                   UPoly
 ***************************************************/

UPoly::UPoly(Rational constant)
{
    if (constant != 0)
        c_.push_back(std::move(constant));
}

UPoly UPoly::monomial(Rational coefficient, int degree)
{
    UPoly p;
    if (coefficient != 0) {
        p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
        p.c_.back() = std::move(coefficient);
    }
    return p;
}

UPoly UPoly::from_coefficients(std::vector<Rational> coefficients)
{
    UPoly p;
    p.c_ = std::move(coefficients);
    p.trim();
    return p;
}

void UPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rational UPoly::coefficient(int k) const
{
    if (k < 0 || k > degree())
        return Rational(0);
    return c_[static_cast<std::size_t>(k)];
}

Rational UPoly::evaluate(const Rational& x) const
{
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

UPoly UPoly::monic() const
{
    if (is_zero())
        return *this;
    UPoly p = *this;
    Rational lc = leading_coefficient();
    for (auto& c : p.c_)
        c /= lc;
    return p;
}

std::size_t UPoly::term_count() const
{
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Rational& c) { return c != 0; }));
}

UPoly UPoly::operator-() const
{
    UPoly p = *this;
    for (auto& c : p.c_)
        c = -c;
    return p;
}

UPoly& UPoly::operator+=(const UPoly& rhs)
{
    if (rhs.c_.size() > c_.size())
        c_.resize(rhs.c_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i)
        c_[i] += rhs.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs)
{
    if (rhs.c_.size() > c_.size())
        c_.resize(rhs.c_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i)
        c_[i] -= rhs.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rational& rhs)
{
    if (rhs == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= rhs;
    return *this;
}

UPoly operator*(const UPoly& lhs, const UPoly& rhs)
{
    if (lhs.is_zero() || rhs.is_zero())
        return UPoly();
    std::vector<Rational> out(lhs.c_.size() + rhs.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
        if (lhs.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            out[i + j] += lhs.c_[i] * rhs.c_[j];
    }
    return UPoly::from_coefficients(std::move(out));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
{
    if (b.is_zero())
        throw DivisionByZero();
    UPoly q;
    UPoly r = a;
    const Rational& lb = b.leading_coefficient();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        UPoly t = UPoly::monomial(r.leading_coefficient() / lb, r.degree() - b.degree());
        q += t;
        r -= t * b;
    }
    return {std::move(q), std::move(r)};
}

UPoly gcd(UPoly a, UPoly b)
{
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string UPoly::to_string(const std::string& variable) const
{
    if (is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        std::string term;
        if (k == 0)
            term = anick::to_string(mag);
        else {
            std::string power = k == 1 ? variable : variable + "^" + std::to_string(k);
            term = mag == 1 ? power : anick::to_string(mag) + "*" + power;
        }
        if (first)
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

/****************************************************
 *                   RationalFunction
 ***************************************************/

RationalFunction::RationalFunction(std::string parameter)
    : parameter_(std::move(parameter)), den_(Rational(1))
{
}

RationalFunction::RationalFunction(std::string parameter, UPoly numerator, UPoly denominator)
    : parameter_(std::move(parameter)), num_(std::move(numerator)), den_(std::move(denominator))
{
    if (den_.is_zero())
        throw DivisionByZero();
    normalize();
}

void RationalFunction::normalize()
{
    if (num_.is_zero()) {
        den_ = UPoly(Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        UPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
    }
    Rational lc = den_.leading_coefficient();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

void RationalFunction::require_same(const RationalFunction& rhs) const
{
    if (parameter_ != rhs.parameter_)
        throw FieldMismatch("rational functions in different parameters: " + parameter_ + " vs " + rhs.parameter_);
}

Rational RationalFunction::evaluate(const Rational& value) const
{
    Rational d = den_.evaluate(value);
    if (d == 0)
        throw PoleError(parameter_, anick::to_string(value));
    return num_.evaluate(value) / d;
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const
{
    require_same(rhs);
    if (den_ == rhs.den_)
        return RationalFunction(parameter_, num_ + rhs.num_, den_);
    return RationalFunction(parameter_, num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const
{
    return *this + (-rhs);
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const
{
    require_same(rhs);
    return RationalFunction(parameter_, num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::inverse() const
{
    if (num_.is_zero())
        throw DivisionByZero();
    return RationalFunction(parameter_, den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const
{
    require_same(rhs);
    return *this * rhs.inverse();
}

std::string RationalFunction::to_string() const
{
    std::string n = num_.to_string(parameter_);
    if (den_ == UPoly(Rational(1)))
        return n;
    if (num_.term_count() > 1)
        n = "(" + n + ")";
    std::string d = den_.to_string(parameter_);
    if (den_.term_count() > 1)
        d = "(" + d + ")";
    return n + "/" + d;
}

/****************************************************
 *                   Scalar
 ***************************************************/

Scalar Scalar::constant(const Field& field, const Rational& q)
{
    if (field.is_rational())
        return Scalar(q);
    return Scalar(RationalFunction(field.parameter, UPoly(q)));
}

Scalar Scalar::parameter(const Field& field)
{
    if (field.is_rational())
        throw FieldMismatch("the rational field has no parameter");
    return Scalar(RationalFunction(field.parameter, UPoly::monomial(Rational(1), 1)));
}

Field Scalar::field() const
{
    if (is_rational())
        return Field{};
    return Field{function().parameter()};
}

bool Scalar::is_zero() const
{
    return is_rational() ? rational() == 0 : function().is_zero();
}

bool Scalar::is_one() const
{
    if (is_rational())
        return rational() == 1;
    const auto& f = function();
    return f.denominator() == UPoly(Rational(1)) && f.numerator() == UPoly(Rational(1));
}

int Scalar::parameter_degree() const
{
    if (is_rational())
        return 0;
    return std::max(function().numerator().degree(), function().denominator().degree());
}

namespace {
std::size_t rational_bits(const Rational& q)
{
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}
std::size_t poly_bits(const UPoly& p)
{
    std::size_t n = 0;
    for (const auto& c : p.coefficients())
        n += rational_bits(c);
    return n;
}
}  // namespace

std::size_t Scalar::bit_size() const
{
    if (is_rational())
        return rational_bits(rational());
    return poly_bits(function().numerator()) + poly_bits(function().denominator());
}

namespace {
[[noreturn]] void mismatch(const Scalar& a, const Scalar& b)
{
    throw FieldMismatch("scalar field mismatch: " + a.field().to_string() + " vs " + b.field().to_string());
}
}  // namespace

Scalar Scalar::operator-() const
{
    if (is_rational())
        return Scalar(Rational(-rational()));
    return Scalar(-function());
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    if (v_.index() != rhs.v_.index())
        mismatch(*this, rhs);
    if (is_rational())
        std::get<Rational>(v_) += rhs.rational();
    else
        v_ = function() + rhs.function();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    if (v_.index() != rhs.v_.index())
        mismatch(*this, rhs);
    if (is_rational())
        std::get<Rational>(v_) -= rhs.rational();
    else
        v_ = function() - rhs.function();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs)
{
    if (v_.index() != rhs.v_.index())
        mismatch(*this, rhs);
    if (is_rational())
        std::get<Rational>(v_) *= rhs.rational();
    else
        v_ = function() * rhs.function();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs)
{
    if (v_.index() != rhs.v_.index())
        mismatch(*this, rhs);
    if (rhs.is_zero())
        throw DivisionByZero();
    if (is_rational())
        std::get<Rational>(v_) /= rhs.rational();
    else
        v_ = function() / rhs.function();
    return *this;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw DivisionByZero();
    if (is_rational())
        return Scalar(Rational(1 / rational()));
    return Scalar(function().inverse());
}

Rational Scalar::specialize(const Rational& value) const
{
    if (is_rational())
        return rational();
    return function().evaluate(value);
}

std::string Scalar::to_string() const
{
    return is_rational() ? anick::to_string(rational()) : function().to_string();
}

Scalar tau_from_A()
{
    // -(A^4 + 1) / A^2
    UPoly num = UPoly::from_coefficients({Rational(-1), Rational(0), Rational(0), Rational(0), Rational(-1)});
    return Scalar(RationalFunction("A", num, UPoly::monomial(Rational(1), 2)));
}

}  // namespace anick
