#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <utility>

#include "colsym/errors.hpp"

namespace colsym {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; zero is 0/1. Arithmetic is arbitrary precision.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}
    Rational(long long n) : value_(static_cast<std::int64_t>(n)) {}
    Rational(const Integer& n) : value_(n) {}

    Rational(Integer num, Integer den) {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        value_ = backend(std::move(num), std::move(den));
    }

    Integer numerator() const { return boost::multiprecision::numerator(value_); }
    Integer denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    Rational operator-() const { return Rational(-value_); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// "p" for integers, "p/q" otherwise; the sign sits on the numerator.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    /// Inverse of str(); accepts optional surrounding spaces.
    static Rational from_string(const std::string& text) {
        std::size_t begin = text.find_first_not_of(" \t");
        std::size_t end = text.find_last_not_of(" \t");
        if (begin == std::string::npos) throw Error("empty rational literal");
        std::string body = text.substr(begin, end - begin + 1);
        std::size_t slash = body.find('/');
        try {
            if (slash == std::string::npos) return Rational(Integer(body));
            return Rational(Integer(body.substr(0, slash)), Integer(body.substr(slash + 1)));
        } catch (const std::runtime_error& e) {
            throw Error("malformed rational literal '" + body + "'");
        }
    }

private:
    using backend = boost::multiprecision::cpp_rational;

    explicit Rational(backend v) : value_(std::move(v)) {}

    backend value_;
};

inline Integer factorial(int n) {
    if (n < 0) throw Error("factorial of negative integer");
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace colsym
