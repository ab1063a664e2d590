#include "hypdual/pochhammer.hpp"

#include "hypdual/errors.hpp"

namespace hypdual {

GaussianRational rising_factorial(const GaussianRational& a, int k) {
    GaussianRational prod(1);
    if (k >= 0) {
        GaussianRational factor = a;
        for (int j = 0; j < k; ++j) {
            prod *= factor;
            factor += GaussianRational(1);
        }
        return prod;
    }
    GaussianRational factor = a;
    for (int j = 1; j <= -k; ++j) {
        factor -= GaussianRational(1);
        if (factor.is_zero())
            throw pole_error("rising_factorial: factor a-" + std::to_string(j) + " vanishes");
        prod *= factor;
    }
    return prod.inv();
}

GaussianRational q_pochhammer(const GaussianRational& a, const GaussianRational& q, int k) {
    if (q.is_zero()) throw domain_violation("q_pochhammer: q must be nonzero");
    GaussianRational prod(1);
    if (k >= 0) {
        GaussianRational qpow(1);
        for (int j = 0; j < k; ++j) {
            prod *= GaussianRational(1) - a * qpow;
            qpow *= q;
        }
        return prod;
    }
    const GaussianRational qinv = q.inv();
    GaussianRational qpow(1);
    for (int j = 1; j <= -k; ++j) {
        qpow *= qinv;
        GaussianRational factor = GaussianRational(1) - a * qpow;
        if (factor.is_zero())
            throw pole_error("q_pochhammer: factor 1-a*q^-" + std::to_string(j) + " vanishes");
        prod *= factor;
    }
    return prod.inv();
}

GaussianRational integer_power(const GaussianRational& x, int n) {
    GaussianRational base = x;
    if (n < 0) base = x.inv();  // throws division_by_zero on x = 0

    unsigned long e = n < 0 ? -static_cast<long>(n) : n;
    GaussianRational result(1);
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

GaussianRational factorial(int k) {
    return rising_factorial(GaussianRational(1), k);
}

} // namespace hypdual
