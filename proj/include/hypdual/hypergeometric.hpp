#ifndef HYPDUAL_HYPERGEOMETRIC_HPP
#define HYPDUAL_HYPERGEOMETRIC_HPP

#include "hypdual/gaussian_rational.hpp"
#include "hypdual/truncated_series.hpp"

#include <vector>

namespace hypdual {

/// Parameter rows of a (basic) hypergeometric series. argument_scale is the
/// constant multiplying z (it is folded into the coefficients, so the series
/// variable stays the shared z of the bilinear sums).
struct HypergeometricSpec {
    std::vector<GaussianRational> upper;
    std::vector<GaussianRational> lower;
    GaussianRational argument_scale = GaussianRational(1);
};

/// pFq coefficients as a truncated series:
///   coeffs[k] = scale^k * prod_j (upper_j)_k / (prod_j (lower_j)_k * k!),
/// generated by the term ratio. Throws pole_error if some lower_j + k
/// vanishes with k < order.
TruncatedSeries hypergeometric_series(const HypergeometricSpec& spec, int order);

/// Basic analogue:
///   coeffs[k] = scale^k * prod_j (upper_j;q)_k / (prod_j (lower_j;q)_k * (q;q)_k).
TruncatedSeries basic_hypergeometric_series(const HypergeometricSpec& spec,
                                            const GaussianRational& q, int order);

} // namespace hypdual

#endif // HYPDUAL_HYPERGEOMETRIC_HPP
