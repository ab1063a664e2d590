#include "hypdual/truncated_series.hpp"

#include "hypdual/errors.hpp"

#include <algorithm>

namespace hypdual {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw domain_violation("series order must be non-negative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::from_coeffs(std::vector<GaussianRational> coeffs) {
    if (coeffs.empty()) throw domain_violation("series needs at least the z^0 coefficient");
    TruncatedSeries s(0);
    s.coeffs_ = std::move(coeffs);
    return s;
}

TruncatedSeries TruncatedSeries::constant(const GaussianRational& c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::geometric(const GaussianRational& c, const GaussianRational& ratio,
                                           int order) {
    TruncatedSeries s(order);
    GaussianRational term = c;
    for (int k = 0; k <= order; ++k) {
        s.coeffs_[k] = term;
        term *= ratio;
    }
    return s;
}

TruncatedSeries TruncatedSeries::ramp(int order) {
    TruncatedSeries s(order);
    for (int k = 0; k <= order; ++k) s.coeffs_[k] = GaussianRational(k);
    return s;
}

const GaussianRational& TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order()) throw domain_violation("coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::set_coeff(int k, GaussianRational value) {
    if (k < 0 || k > order()) throw domain_violation("coefficient index out of range");
    coeffs_[static_cast<std::size_t>(k)] = std::move(value);
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const GaussianRational& c) { return c.is_zero(); });
}

std::complex<double> TruncatedSeries::eval(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_complex();
    return acc;
}

std::vector<std::string> TruncatedSeries::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.str());
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t) {
    TruncatedSeries out(std::min(s.order(), t.order()));
    for (int k = 0; k <= out.order(); ++k) out.coeffs_[k] = s.coeffs_[k] + t.coeffs_[k];
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t) {
    TruncatedSeries out(std::min(s.order(), t.order()));
    for (int k = 0; k <= out.order(); ++k) out.coeffs_[k] = s.coeffs_[k] - t.coeffs_[k];
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t) {
    TruncatedSeries out(std::min(s.order(), t.order()));
    for (int k = 0; k <= out.order(); ++k) {
        GaussianRational sum;
        for (int j = 0; j <= k; ++j) sum += s.coeffs_[j] * t.coeffs_[k - j];
        out.coeffs_[k] = std::move(sum);
    }
    return out;
}

TruncatedSeries operator*(const GaussianRational& c, const TruncatedSeries& s) {
    TruncatedSeries out(s.order());
    for (int k = 0; k <= s.order(); ++k) out.coeffs_[k] = c * s.coeffs_[k];
    return out;
}

bool equal_mod_poly(const TruncatedSeries& s, const TruncatedSeries& t, int from_degree) {
    if (from_degree < 0 || from_degree > s.order() || from_degree > t.order())
        throw domain_violation("equal_mod_poly: degree out of range");
    const int top = std::min(s.order(), t.order());
    for (int k = from_degree; k <= top; ++k) {
        if (s.coeff(k) != t.coeff(k)) return false;
    }
    return true;
}

std::vector<int> mismatched_indices(const TruncatedSeries& s, const TruncatedSeries& t) {
    std::vector<int> out;
    const int top = std::min(s.order(), t.order());
    for (int k = 0; k <= top; ++k) {
        if (s.coeff(k) != t.coeff(k)) out.push_back(k);
    }
    return out;
}

} // namespace hypdual
