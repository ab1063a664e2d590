#include "hypdual/hypergeometric.hpp"

#include "hypdual/errors.hpp"

namespace hypdual {

TruncatedSeries hypergeometric_series(const HypergeometricSpec& spec, int order) {
    TruncatedSeries out(order);
    GaussianRational term(1);
    out.set_coeff(0, term);
    for (int k = 0; k < order; ++k) {
        const GaussianRational shift(k);
        GaussianRational num = spec.argument_scale;
        for (const auto& u : spec.upper) num *= u + shift;
        GaussianRational den(k + 1);
        for (const auto& l : spec.lower) {
            GaussianRational factor = l + shift;
            if (factor.is_zero())
                throw pole_error("hypergeometric_series: lower parameter hits a non-positive integer");
            den *= factor;
        }
        term = term * num / den;
        out.set_coeff(k + 1, term);
    }
    return out;
}

TruncatedSeries basic_hypergeometric_series(const HypergeometricSpec& spec,
                                            const GaussianRational& q, int order) {
    if (q.is_zero()) throw domain_violation("basic_hypergeometric_series: q must be nonzero");
    TruncatedSeries out(order);
    GaussianRational term(1);
    out.set_coeff(0, term);
    const GaussianRational one(1);
    GaussianRational qk(1);  // q^k
    for (int k = 0; k < order; ++k) {
        GaussianRational num = spec.argument_scale;
        for (const auto& u : spec.upper) num *= one - u * qk;
        GaussianRational qk1 = qk * q;  // q^{k+1}
        GaussianRational den = one - qk1;
        if (den.is_zero()) throw pole_error("basic_hypergeometric_series: (q;q)_k vanishes");
        for (const auto& l : spec.lower) {
            GaussianRational factor = one - l * qk;
            if (factor.is_zero())
                throw pole_error("basic_hypergeometric_series: lower q-parameter factor vanishes");
            den *= factor;
        }
        term = term * num / den;
        out.set_coeff(k + 1, term);
        qk = std::move(qk1);
    }
    return out;
}

} // namespace hypdual
