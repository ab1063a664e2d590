#ifndef HYPDUAL_TRUNCATED_SERIES_HPP
#define HYPDUAL_TRUNCATED_SERIES_HPP

#include "hypdual/gaussian_rational.hpp"

#include <complex>
#include <string>
#include <vector>

namespace hypdual {

/// Default truncation order for verification suites.
inline constexpr int kDefaultOrder = 12;

/// Formal power series in z over Q(i), carried to a fixed order N: exactly
/// the coefficients of z^0 .. z^N. Arithmetic truncates to the smaller
/// operand order.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(int order);

    /// order = coeffs.size() - 1; coeffs must be non-empty.
    static TruncatedSeries from_coeffs(std::vector<GaussianRational> coeffs);

    static TruncatedSeries constant(const GaussianRational& c, int order);

    /// c / (1 - ratio*z): coeffs[k] = c * ratio^k.
    static TruncatedSeries geometric(const GaussianRational& c, const GaussianRational& ratio,
                                     int order);

    /// z / (1-z)^2: coeffs[k] = k.
    static TruncatedSeries ramp(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const GaussianRational& coeff(int k) const;
    void set_coeff(int k, GaussianRational value);

    bool is_zero() const;

    /// Horner evaluation of the truncated polynomial in double precision.
    std::complex<double> eval(std::complex<double> z) const;

    /// Coefficients in canonical text form, index = power of z.
    std::vector<std::string> coeff_strings() const;

    friend TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t);
    friend TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t);
    /// Cauchy product truncated at min(order(s), order(t)).
    friend TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t);
    friend TruncatedSeries operator*(const GaussianRational& c, const TruncatedSeries& s);

    friend bool operator==(const TruncatedSeries& s, const TruncatedSeries& t) {
        return s.coeffs_ == t.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& s, const TruncatedSeries& t) { return !(s == t); }

private:
    std::vector<GaussianRational> coeffs_;
};

/// True iff the coefficients of s and t agree at every index k >= from_degree
/// (up to the common order). from_degree = 0 is plain coefficient equality.
/// Requires 0 <= from_degree <= order of both series.
bool equal_mod_poly(const TruncatedSeries& s, const TruncatedSeries& t, int from_degree);

/// Indices in [0, common order] where the coefficients differ.
std::vector<int> mismatched_indices(const TruncatedSeries& s, const TruncatedSeries& t);

} // namespace hypdual

#endif // HYPDUAL_TRUNCATED_SERIES_HPP
