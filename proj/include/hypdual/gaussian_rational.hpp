#ifndef HYPDUAL_GAUSSIAN_RATIONAL_HPP
#define HYPDUAL_GAUSSIAN_RATIONAL_HPP

#include "hypdual/rational.hpp"

#include <complex>
#include <string>
#include <string_view>
#include <utility>

namespace hypdual {

/// Exact element of Q(i). All parameters and series coefficients in this
/// library are values of this type; nothing is ever rounded.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    /// Accepts the str() forms: "re", "re+im*i", "re-im*i", plus the pure
    /// imaginary shorthand "im*i".
    static GaussianRational parse(std::string_view text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_integer() const { return im_.is_zero() && re_.is_integer(); }

    Rational norm_squared() const { return re_ * re_ + im_ * im_; }
    GaussianRational conj() const { return {re_, -im_}; }
    GaussianRational inv() const;

    std::string str() const;
    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational x, const GaussianRational& y) { return x += y; }
    friend GaussianRational operator-(GaussianRational x, const GaussianRational& y) { return x -= y; }
    friend GaussianRational operator*(GaussianRational x, const GaussianRational& y) { return x *= y; }
    friend GaussianRational operator/(GaussianRational x, const GaussianRational& y) { return x /= y; }

    friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
        return x.re_ == y.re_ && x.im_ == y.im_;
    }
    friend bool operator!=(const GaussianRational& x, const GaussianRational& y) { return !(x == y); }

private:
    Rational re_;
    Rational im_;
};

} // namespace hypdual

#endif // HYPDUAL_GAUSSIAN_RATIONAL_HPP
