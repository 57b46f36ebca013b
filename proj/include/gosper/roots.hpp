#pragma once

// Complex roots of rational polynomials by Aberth-Ehrlich simultaneous
// iteration at multiple precision.

#include "gosper/errors.hpp"
#include "gosper/mpcomplex.hpp"
#include "gosper/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace gosper {

struct Root {
    CFloat value;
    std::size_t multiplicity = 1;
};

struct RootSet {
    std::vector<Root> roots;
    Poly source_poly;
    /// Every root satisfies |P(root)| <= residual_bound.
    Real residual_bound;

    std::size_t count_with_multiplicity() const {
        std::size_t n = 0;
        for (const auto& r : roots) {
            n += r.multiplicity;
        }
        return n;
    }
};

namespace detail {

/// P(z) and P'(z) by Horner's rule.
inline std::pair<CFloat, CFloat> horner(const std::vector<CFloat>& coeffs, const CFloat& z) {
    CFloat p = coeffs.back();
    CFloat dp(z.precision());
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + coeffs[k];
    }
    return {p, dp};
}

/// sum |a_k| |z|^k, the natural scale of rounding error in P(z).
inline Real abs_horner(const std::vector<CFloat>& coeffs, const Real& r) {
    Real acc = abs(coeffs.back());
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
        acc = acc * r + abs(coeffs[k]);
    }
    return acc;
}

}  // namespace detail

namespace detail {

/// Yun's square-free decomposition: P = const * prod f_i^i with each f_i
/// square-free and pairwise coprime. Returns (f_i, i) for deg f_i >= 1.
inline std::vector<std::pair<Poly, std::size_t>> squarefree_factors(const Poly& P) {
    std::vector<std::pair<Poly, std::size_t>> out;
    const Poly dP = P.derivative();
    const Poly a0 = gcd(P, dP);
    Poly b = divmod(P, a0).first;
    Poly c = divmod(dP, a0).first;
    Poly d = c - b.derivative();
    for (std::size_t i = 1; b.degree().value_or(0) >= 1; ++i) {
        const Poly a = gcd(b, d);
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = c - b.derivative();
        if (a.degree().value_or(0) >= 1) {
            out.emplace_back(a, i);
        }
    }
    return out;
}

/// Aberth-Ehrlich iteration for a square-free P of degree >= 2. Iterates at
/// wp bits until every relative step is below 2^{-quiet_bits}.
inline std::vector<CFloat> aberth(const Poly& P, Precision wp, long quiet_bits, std::size_t max_iter) {
    const std::size_t n = *P.degree();
    std::vector<CFloat> coeffs;
    coeffs.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        coeffs.emplace_back(Rational(P[k] / P.leading()), wp);
    }

    // Initial guesses on a circle inside the Cauchy bound, rotated off the
    // real axis.
    Real radius(1L, wp);
    for (std::size_t k = 0; k < n; ++k) {
        radius = max(radius, abs(coeffs[k]));
    }
    radius = radius * Real(0.5, wp) + Real(0.5, wp);
    std::vector<CFloat> z;
    const Real two_pi = pi(wp) * 2L;
    for (std::size_t k = 0; k < n; ++k) {
        const Real theta = two_pi * Real((static_cast<double>(k) + 0.4) / static_cast<double>(n), wp);
        z.emplace_back(radius * cos(theta), radius * sin(theta));
    }

    const Real tiny = pow2(-quiet_bits, wp);
    std::size_t quiet_rounds = 0;
    for (std::size_t iter = 0; iter < max_iter && quiet_rounds < 3; ++iter) {
        bool moved = false;
        for (std::size_t i = 0; i < n; ++i) {
            auto [p, dp] = horner(coeffs, z[i]);
            if (p.is_zero()) {
                continue;
            }
            const CFloat ratio = p / dp;
            CFloat sum(wp);
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) {
                    sum += CFloat(1L, wp) / (z[i] - z[j]);
                }
            }
            const CFloat step = ratio / (CFloat(1L, wp) - ratio * sum);
            z[i] = z[i] - step;
            if (abs(step) / max(abs(z[i]), Real(1L, wp)) > tiny) {
                moved = true;
            }
        }
        quiet_rounds = moved ? 0 : quiet_rounds + 1;
    }
    if (quiet_rounds == 0) {
        throw NumericError(NumericError::Kind::no_convergence,
                           "root iteration did not converge in " + std::to_string(max_iter) + " rounds; best iterate " +
                               z.front().to_string(20));
    }
    return z;
}

}  // namespace detail

/// All roots of P (degree >= 1) with multiplicities. Multiplicities come
/// from an exact square-free decomposition, so the numeric iteration only
/// sees simple roots; linear factors give exact rational roots. Roots come
/// in exact conjugate pairs, and roots whose imaginary part is below
/// 2^{-prec/3} are made real.
inline RootSet find_roots(const Poly& P, Precision prec, std::size_t max_iter = 600) {
    const auto deg = P.degree();
    if (!deg || *deg < 1) {
        throw ParameterError("find_roots needs a polynomial of degree >= 1");
    }
    const Precision wp = prec + 64;
    const Real cluster_tol = pow2(-static_cast<long>(prec) / 3, wp);
    std::vector<Root> roots;
    for (const auto& [f, m] : detail::squarefree_factors(P)) {
        if (*f.degree() == 1) {
            roots.push_back({CFloat(Rational(-f[0] / f[1]), wp), m});
            continue;
        }
        for (auto& z : detail::aberth(f, wp, static_cast<long>(prec) + 32, max_iter)) {
            roots.push_back({std::move(z), m});
        }
    }

    // Conjugate symmetry.
    for (auto& r : roots) {
        if (abs(r.value.im()) <= cluster_tol * max(abs(r.value), Real(1L, wp))) {
            r.value = CFloat(r.value.re());
        }
    }
    std::vector<bool> paired(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (paired[i] || roots[i].value.is_real()) {
            continue;
        }
        std::size_t best = roots.size();
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j == i || paired[j] || roots[j].value.is_real() || roots[j].multiplicity != roots[i].multiplicity) {
                continue;
            }
            if (best == roots.size() ||
                abs(roots[j].value - roots[i].value.conj()) < abs(roots[best].value - roots[i].value.conj())) {
                best = j;
            }
        }
        if (best == roots.size()) {
            throw InconsistencyError("complex root without a conjugate partner for a real polynomial");
        }
        const CFloat mean = (roots[i].value + roots[best].value.conj()) / Real(2L, wp);
        roots[i].value = mean;
        roots[best].value = mean.conj();
        paired[i] = paired[best] = true;
    }

    // Order: by real part, then imaginary part, for deterministic reports.
    std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) {
        if (!(x.value.re() == y.value.re())) {
            return x.value.re() < y.value.re();
        }
        return x.value.im() < y.value.im();
    });

    std::vector<CFloat> coeffs;
    for (std::size_t k = 0; k <= *deg; ++k) {
        coeffs.emplace_back(Rational(P[k] / P.leading()), wp);
    }
    Real bound(prec);
    const Real rel = pow2(-static_cast<long>(prec) / 2, wp);
    for (auto& r : roots) {
        r.value = r.value.with_precision(prec);
        bound = max(bound, rel * detail::abs_horner(coeffs, abs(r.value)) * abs(CFloat(P.leading(), wp)));
    }
    return {std::move(roots), P, bound.with_precision(prec)};
}

/// |P(z)| for an exact polynomial at working precision.
inline Real poly_abs_at(const Poly& P, const CFloat& z) {
    std::vector<CFloat> coeffs;
    for (std::size_t k = 0; k <= P.degree().value_or(0); ++k) {
        coeffs.emplace_back(P[k], z.precision());
    }
    return abs(detail::horner(coeffs, z).first);
}

}  // namespace gosper
