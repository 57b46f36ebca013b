#pragma once

// Numeric Gauss hypergeometric function F(a,b,c;z) for exact rational
// parameters and complex argument.
//
// The evaluator picks, among the series that represent F at z, the one
// whose argument has the smallest modulus:
//   direct          F(a,b,c;z)
//   euler           (1-z)^{c-a-b} F(c-a,c-b,c;z)               (only when it terminates)
//   pfaff-a         (1-z)^{-a} F(a,c-b,c;z/(z-1))
//   pfaff-b         (1-z)^{-b} F(c-a,b,c;z/(z-1))
//   connection-1mz  the two-term expansion around z = 1, in powers of 1-z
// and pfaff-a followed by connection-1mz, which works in powers of 1/(1-z).
// A terminating series is always preferred and is summed as a finite sum.
// Working precision grows with the observed cancellation.

#include "gosper/gamma.hpp"
#include "gosper/hypergeometric.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace gosper {

enum class EvalPath { direct_series, pfaff_a, pfaff_b, euler, connection_1mz, unsupported };

inline const char* to_string(EvalPath p) {
    switch (p) {
        case EvalPath::direct_series: return "direct-series";
        case EvalPath::pfaff_a: return "pfaff-a";
        case EvalPath::pfaff_b: return "pfaff-b";
        case EvalPath::euler: return "euler";
        case EvalPath::connection_1mz: return "connection-1mz";
        case EvalPath::unsupported: return "unsupported";
    }
    return "unknown";
}

struct EvalResult {
    CFloat value;
    /// Heuristic absolute error bound.
    Real est_error;
    /// Transformations applied, outermost first.
    std::vector<EvalPath> path;

    std::string path_string() const {
        std::string s;
        for (EvalPath p : path) {
            s += (s.empty() ? "" : "+") + std::string(to_string(p));
        }
        return s;
    }
};

struct Hyp2F1Options {
    /// Largest argument modulus summed directly; beyond it the evaluator
    /// reports the point as unsupported.
    double max_modulus = 0.985;
    /// Modulus at or below which the plain series is used without
    /// considering transformations.
    double direct_threshold = 0.7;
    std::size_t max_terms = 400000;
};

namespace detail {

struct SeriesSum {
    CFloat value;
    Real est_error;
    /// Largest |term| seen; sets the rounding error scale.
    Real max_term;
};

/// Sums F(a,b,c;z) term by term at working precision wp.
inline SeriesSum sum_series(const HypParams& p, const CFloat& z, Precision wp, std::size_t max_terms) {
    const CFloat zw = z.with_precision(wp);
    const auto terminates = termination_degree(p);
    const Real ar(p.a, wp), br(p.b, wp), cr(p.c, wp);
    const Real zabs = abs(zw);
    CFloat term(1L, wp);
    CFloat sum(1L, wp);
    Real max_term(1L, wp);
    const Real eps = pow2(-static_cast<long>(wp), wp);
    const double param_scale = std::abs(mpq_get_d(p.a.get_mpq_t())) + std::abs(mpq_get_d(p.b.get_mpq_t())) +
                               std::abs(mpq_get_d(p.c.get_mpq_t()));
    const auto settle = static_cast<std::size_t>(2.0 * param_scale) + 8;
    const std::size_t limit = terminates ? *terminates : max_terms;
    Real tail(wp);
    std::size_t n = 0;
    for (; n < limit; ++n) {
        const Real cn = cr + Real(static_cast<long>(n), wp);
        if (cn.is_zero()) {
            throw ParameterError("hypergeometric series hits the pole of its lower parameter");
        }
        const Real ratio = (ar + Real(static_cast<long>(n), wp)) * (br + Real(static_cast<long>(n), wp)) /
                           (cn * static_cast<long>(n + 1));
        term = term * zw * ratio;
        sum += term;
        const Real mag = abs(term);
        max_term = max(max_term, mag);
        if (!terminates && n > settle) {
            const Real q = abs(ratio) * zabs;
            if (q < Real(1L, wp) && mag <= eps * max(abs(sum), max_term * eps)) {
                // Ratios approach |z| from the current value; bound the tail
                // geometrically with the larger of the two.
                const Real qq = max(q, zabs);
                tail = mag * qq / (Real(1L, wp) - qq);
                break;
            }
        }
    }
    if (!terminates && n == limit) {
        throw NumericError(NumericError::Kind::no_convergence,
                           "hypergeometric series did not converge within " + std::to_string(max_terms) + " terms");
    }
    const Real rounding = max_term * eps * static_cast<long>(n + 2) * 4L;
    return {std::move(sum), tail + rounding, std::move(max_term)};
}

struct Candidate {
    double modulus;
    std::vector<EvalPath> path;
    std::function<EvalResult(Precision)> run;
};

inline bool on_cut(const CFloat& z) { return z.is_real() && z.re() >= Real(1L, z.precision()); }

inline CFloat one_minus(const CFloat& z) { return CFloat(1L, z.precision()) - z; }

inline EvalResult scale_result(const CFloat& factor, const SeriesSum& s, std::vector<EvalPath> path) {
    const Real f = abs(factor);
    const Real eps = pow2(-static_cast<long>(factor.precision()), factor.precision());
    return {factor * s.value, f * s.est_error + f * abs(s.value) * eps * 8L, std::move(path)};
}

/// Two-term expansion of F(a,b,c;z) in powers of 1-z; c-a-b must not be an
/// integer.
inline EvalResult connection(const HypParams& p, const CFloat& z, Precision wp, std::size_t max_terms,
                             std::vector<EvalPath> path) {
    const auto& [a, b, c] = p;
    const Rational s = c - a - b;
    const CFloat w = one_minus(z.with_precision(wp));
    const SeriesSum f1 = sum_series({a, b, Rational(1 - s)}, w, wp, max_terms);
    const SeriesSum f2 = sum_series({Rational(c - a), Rational(c - b), Rational(1 + s)}, w, wp, max_terms);
    auto g = [wp](const Rational& q) { return gamma_c(CFloat(q, wp), wp); };
    auto rg = [wp](const Rational& q) { return rgamma_c(CFloat(q, wp), wp); };
    const CFloat gc = g(c);
    const CFloat coef1 = gc * g(s) * rg(Rational(c - a)) * rg(Rational(c - b));
    const CFloat coef2 = gc * g(Rational(-s)) * rg(a) * rg(b) * pow(w, s);
    const CFloat v1 = coef1 * f1.value;
    const CFloat v2 = coef2 * f2.value;
    const Real eps = pow2(-static_cast<long>(wp), wp);
    // Gamma values carry a few ulps each; the two terms may cancel.
    const Real err = abs(coef1) * f1.est_error + abs(coef2) * f2.est_error + (abs(v1) + abs(v2)) * eps * 64L;
    path.push_back(EvalPath::connection_1mz);
    return {v1 + v2, err, std::move(path)};
}

inline double modulus(const CFloat& z) { return abs(z).to_double(); }

inline std::vector<Candidate> candidates(const HypParams& p, const CFloat& z, const Hyp2F1Options& opt) {
    const auto& [a, b, c] = p;
    std::vector<Candidate> out;
    const std::size_t mt = opt.max_terms;

    if (termination_degree(p)) {
        out.push_back({0.0, {EvalPath::direct_series}, [=](Precision wp) {
                           auto s = sum_series(p, z, wp, mt);
                           return EvalResult{std::move(s.value), std::move(s.est_error), {EvalPath::direct_series}};
                       }});
        return out;
    }
    if (on_cut(z)) {
        throw NumericError(NumericError::Kind::branch_cut,
                           "argument " + z.to_string(20) + " lies on the branch cut [1, inf)");
    }
    const Rational cma = c - a, cmb = c - b, s = c - a - b;
    if (is_nonpositive_integer(cma) || is_nonpositive_integer(cmb)) {
        out.push_back({0.0, {EvalPath::euler}, [=](Precision wp) {
                           const CFloat zw = z.with_precision(wp);
                           auto sum = sum_series({cma, cmb, c}, zw, wp, mt);
                           return scale_result(pow(one_minus(zw), s), sum, {EvalPath::euler});
                       }});
        return out;
    }
    const double rz = modulus(z);
    out.push_back({rz, {EvalPath::direct_series}, [=](Precision wp) {
                       auto sum = sum_series(p, z, wp, mt);
                       return EvalResult{std::move(sum.value), std::move(sum.est_error), {EvalPath::direct_series}};
                   }});
    if (rz <= opt.direct_threshold) {
        return out;
    }
    const CFloat one_z = one_minus(z);
    const CFloat w = z / (z - CFloat(1L, z.precision()));
    const double rw = modulus(w);
    out.push_back({rw, {EvalPath::pfaff_a}, [=](Precision wp) {
                       const CFloat zw = z.with_precision(wp);
                       const CFloat ww = zw / (zw - CFloat(1L, wp));
                       auto sum = sum_series({a, cmb, c}, ww, wp, mt);
                       return scale_result(pow(one_minus(zw), Rational(-a)), sum, {EvalPath::pfaff_a});
                   }});
    out.push_back({rw, {EvalPath::pfaff_b}, [=](Precision wp) {
                       const CFloat zw = z.with_precision(wp);
                       const CFloat ww = zw / (zw - CFloat(1L, wp));
                       auto sum = sum_series({cma, b, c}, ww, wp, mt);
                       return scale_result(pow(one_minus(zw), Rational(-b)), sum, {EvalPath::pfaff_b});
                   }});
    if (!is_integer(s)) {
        out.push_back({modulus(one_z), {EvalPath::connection_1mz},
                       [=](Precision wp) { return connection(p, z, wp, mt, {}); }});
    }
    // Inner function after pfaff-a is F(a, c-b, c; w) whose c'-a'-b' is b-a.
    if (!is_integer(Rational(b - a))) {
        out.push_back({modulus(one_minus(w)), {EvalPath::pfaff_a, EvalPath::connection_1mz}, [=](Precision wp) {
                           const CFloat zw = z.with_precision(wp);
                           const CFloat ww = zw / (zw - CFloat(1L, wp));
                           const CFloat factor = pow(one_minus(zw), Rational(-a));
                           EvalResult inner = connection({a, cmb, c}, ww, wp, mt, {EvalPath::pfaff_a});
                           const Real f = abs(factor);
                           return EvalResult{factor * inner.value, f * inner.est_error, std::move(inner.path)};
                       }});
    }
    return out;
}

}  // namespace detail

/// F(a,b,c;z) at `prec` bits. c must not be a nonpositive integer unless an
/// upper parameter terminates the series first.
///
/// Throws NumericError for arguments on the cut [1, inf) of a
/// non-terminating series, and for points where the only usable expansion
/// needs the excluded integer c-a-b connection case. Returns path
/// `unsupported` with infinite est_error when every expansion converges too
/// slowly.
inline EvalResult hyp2f1_num(const HypParams& p, const CFloat& z, Precision prec, const Hyp2F1Options& opt = {}) {
    if (is_nonpositive_integer(p.c)) {
        const auto t = termination_degree(p);
        if (!t || Rational(-p.c).get_num().get_ui() < *t) {
            throw ParameterError("lower parameter c = " + to_string(p.c) + " is a pole of the series");
        }
    }
    if (z.is_zero()) {
        return {CFloat(1L, prec), Real(prec), {EvalPath::direct_series}};
    }
    const auto cands = detail::candidates(p, z, opt);
    const detail::Candidate* best = nullptr;
    for (const auto& cand : cands) {
        if (!best || cand.modulus < best->modulus) {
            best = &cand;
        }
    }
    if (best->modulus > opt.max_modulus) {
        const Rational s = p.c - p.a - p.b;
        if (is_integer(s) || is_integer(Rational(p.b - p.a))) {
            throw NumericError(NumericError::Kind::degenerate_connection,
                               "no convergent expansion at z = " + z.to_string(20) +
                                   " without the integer c-a-b connection case");
        }
        Real inf(prec);
        mpfr_set_inf(inf.get(), 1);
        Real nan(prec);
        mpfr_set_nan(nan.get());
        return {CFloat(nan, nan), inf, {EvalPath::unsupported}};
    }

    const Real target_scale = pow2(-static_cast<long>(prec), prec + 64);
    Precision wp = prec + 32;
    EvalResult r = best->run(wp);
    for (int attempt = 0; attempt < 4; ++attempt) {
        const Real mag = abs(r.value);
        const Real target = target_scale * max(mag, pow2(-static_cast<long>(prec), prec));
        if (r.est_error <= target) {
            break;
        }
        // Raise the working precision by the bits lost to cancellation.
        const long lost = r.est_error.exponent() - target.exponent();
        wp += static_cast<Precision>(std::max(32L, lost + 16));
        r = best->run(wp);
    }
    return {r.value.with_precision(prec), r.est_error.with_precision(prec), std::move(r.path)};
}

}  // namespace gosper
