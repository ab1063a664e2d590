#ifndef HYPDUAL_POCHHAMMER_HPP
#define HYPDUAL_POCHHAMMER_HPP

#include "hypdual/gaussian_rational.hpp"

namespace hypdual {

/// Rising factorial (a)_k.
///
/// k >= 0: prod_{j=0}^{k-1} (a+j), empty product = 1.
/// k <  0: 1 / prod_{j=1}^{-k} (a-j), the unique extension satisfying the
///         functional equation (a)_{k+1} = (a)_k * (a+k) for all k.
/// Throws pole_error when a negative-index denominator factor vanishes.
GaussianRational rising_factorial(const GaussianRational& a, int k);

/// q-Pochhammer symbol (a;q)_k for integer k, as the finite product.
///
/// k >= 0: prod_{j=0}^{k-1} (1 - a q^j).
/// k <  0: 1 / prod_{j=1}^{-k} (1 - a q^{-j}).
/// Requires q != 0; throws pole_error on a vanishing denominator factor.
GaussianRational q_pochhammer(const GaussianRational& a, const GaussianRational& q, int k);

/// Exact x^n for any integer n; requires x != 0 when n < 0.
GaussianRational integer_power(const GaussianRational& x, int n);

/// k! as a Gaussian rational.
GaussianRational factorial(int k);

} // namespace hypdual

#endif // HYPDUAL_POCHHAMMER_HPP
