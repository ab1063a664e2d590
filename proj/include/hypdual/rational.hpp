#ifndef HYPDUAL_RATIONAL_HPP
#define HYPDUAL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

namespace hypdual {

/// Arbitrary-precision rational, kept in canonical form at all times:
/// denominator > 0 and gcd(|numerator|, denominator) = 1. Values are
/// immutable in spirit; every operation returns a canonical result.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);

    /// Accepts "p" or "p/q" with an optional leading sign; the denominator
    /// must be nonzero. Round-trips exactly with str().
    static Rational parse(std::string_view text);

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// Canonical text form: "p/q", or "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    Rational operator-() const;
    Rational abs() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational x, const Rational& y) { return x += y; }
    friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
    friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
    friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return mpq_equal(x.v_.get_mpq_t(), y.v_.get_mpq_t()) != 0;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) < 0; }
    friend bool operator<=(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) <= 0; }
    friend bool operator>(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) > 0; }
    friend bool operator>=(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) >= 0; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}  // must already be canonical

    mpq_class v_;
};

} // namespace hypdual

#endif // HYPDUAL_RATIONAL_HPP
