#pragma once

// Complex gamma function by Spouge's approximation.

#include "gosper/mpcomplex.hpp"

#include <cmath>
#include <string>

namespace gosper {

namespace detail {

/// Spouge parameter a such that the truncation error (2 pi)^{-a} is below
/// 2^{-prec}.
inline long spouge_terms(Precision prec) {
    return static_cast<long>(std::ceil(static_cast<double>(prec) * std::log(2.0) / std::log(2.0 * M_PI))) + 2;
}

/// Gamma(w + 1) for Re w >= -1/2 at working precision.
inline CFloat spouge(const CFloat& w, long a, Precision wp) {
    const Real a_real(a, wp);
    Real sum = sqrt(pi(wp) * 2L);
    CFloat series(sum);
    Real fact(1L, wp);  // (k-1)!
    for (long k = 1; k < a; ++k) {
        if (k > 1) {
            fact = fact * (k - 1);
        }
        const Real base(a - k, wp);
        // (a-k)^{k-1/2} e^{a-k} / (k-1)!
        Real ck = exp(log(base) * Real(static_cast<double>(k) - 0.5, wp) + base) / fact;
        if (k % 2 == 0) {
            ck = -ck;
        }
        series += CFloat(ck) / (w + CFloat(k, wp));
    }
    const CFloat shifted = w + CFloat(a_real);
    const CFloat power = exp(log(shifted) * (w + CFloat(Rational(1, 2), wp)) - shifted);
    return power * series;
}

}  // namespace detail

/// Gamma(z) at `prec` bits. Reflection is used for Re z < 1/2.
inline CFloat gamma_c(const CFloat& z, Precision prec) {
    const auto [dist, n] = nearest_integer(z.re());
    if (n <= 0) {
        const Real d = hypot(dist, z.im());
        if (d < pow2(-static_cast<long>(prec) / 2, prec)) {
            throw NumericError(NumericError::Kind::pole, "gamma evaluated within 2^-(prec/2) of the pole at " + std::to_string(n));
        }
    }
    const long a = detail::spouge_terms(prec);
    const Precision wp = prec + 2 * a + 32;
    const CFloat zw = z.with_precision(wp);
    if (zw.re() < Real(0.5, wp)) {
        const CFloat pi_c(pi(wp));
        const CFloat g = detail::spouge(-zw, a, wp);  // Gamma(1 - z)
        return (pi_c / (sin(pi_c * zw) * g)).with_precision(prec);
    }
    return detail::spouge(zw - CFloat(1L, wp), a, wp).with_precision(prec);
}

/// 1/Gamma(z); zero at the poles.
inline CFloat rgamma_c(const CFloat& z, Precision prec) {
    const auto [dist, n] = nearest_integer(z.re());
    if (n <= 0 && dist.is_zero() && z.im().is_zero()) {
        return CFloat(prec);
    }
    return CFloat(1L, prec) / gamma_c(z, prec);
}

}  // namespace gosper
