#pragma once

// End-to-end numeric checks of the strange evaluations
//   F(a,1+l,c;t)   = -(1-c) q0(t) / ((1,l) (1-t)^l)
//   F(c-a,c-1-l,c;t) = -(1-c)/(1,l) (1-t)^{a+1-c} q0(t)
// at the roots t of F(1-a,-l,2-c;x), of Gosper's identity
//   F(1-a,b,b+2;b/(a+b)) = (b+1) (a/(a+b))^a,
// and of the integral representation of F(a,1,c;x).

#include "gosper/hyp2f1.hpp"
#include "gosper/operator.hpp"
#include "gosper/roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gosper {

/// |lhs - rhs| / (1 + |rhs|)
inline Real relative_residual(const CFloat& lhs, const CFloat& rhs) {
    return abs(lhs - rhs) / (Real(1L, rhs.precision()) + abs(rhs));
}

/// p(z) with exact coefficients, evaluated at the precision of z.
inline CFloat eval_poly(const Poly& p, const CFloat& z) {
    CFloat acc(z.precision());
    const auto& cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc = acc * z + CFloat(*it, z.precision());
    }
    return acc;
}

enum class Q0Method { series, operator_division, reversal };

inline const char* to_string(Q0Method m) {
    switch (m) {
        case Q0Method::series: return "series";
        case Q0Method::operator_division: return "operator";
        case Q0Method::reversal: return "reversal";
    }
    return "unknown";
}

/// q0 and r0 at b = 1 by every applicable method, with agreement checked.
struct Q0Provenance {
    QRPair series;
    FactoredRemainder factored;
    ReductionData reduction;
    std::optional<Poly> reversal;
    /// Why the reversal method was not used, when it was not.
    std::optional<std::string> reversal_note;
    std::vector<Q0Method> methods;
    bool reconstruction_ok = false;
    bool agree = false;
};

inline Q0Provenance compute_q0(const Rational& a, const Rational& c, ContigOrder ell,
                               std::optional<std::size_t> order = std::nullopt) {
    require_noninteger_c(c);
    Q0Provenance out;
    out.series = q0_r0_by_series(a, c, ell, order.value_or(default_order(ell)));
    out.methods.push_back(Q0Method::series);

    const DiffOp L = build_L({a, 1, c});
    const DiffOp H = build_H(1, ell);
    out.reduction = right_reduce(H, L);
    out.reconstruction_ok = reconstruct(out.reduction, L) == H;
    out.factored = factor_remainder(out.reduction.q, out.reduction.r, ell);
    out.methods.push_back(Q0Method::operator_division);

    bool agree = out.reconstruction_ok && out.factored.q0 == out.series.q0 && out.factored.r0 == out.series.r0;
    if (is_integer(a)) {
        out.reversal_note = "skipped: the 1/x expansion needs a non-integer a";
    } else {
        out.reversal = q0_by_reversal(a, c, ell);
        out.methods.push_back(Q0Method::reversal);
        agree = agree && *out.reversal == out.series.q0;
    }
    out.agree = agree;
    return out;
}

struct RootRecord {
    CFloat lambda;
    std::size_t multiplicity = 1;
    std::optional<CFloat> lhs_shifted;    // F(a,1+l,c;t)
    std::optional<CFloat> rhs_shifted;
    std::optional<CFloat> lhs_euler;      // F(c-a,c-1-l,c;t)
    std::optional<CFloat> rhs_euler;
    std::optional<Real> residual_shifted;
    std::optional<Real> residual_euler;
    std::string path_shifted;
    std::string path_euler;
    /// Machine-readable skip reason: branch-cut, degenerate-connection,
    /// unsupported, no-convergence, pole.
    std::optional<std::string> skip_reason;
    std::optional<std::string> skip_detail;

    bool skipped() const { return skip_reason.has_value(); }
};

struct VerifyReport {
    Rational a;
    Rational c;
    unsigned ell = 1;
    Precision precision = kDefaultPrecision;
    Poly terminating;
    Q0Provenance q0;
    GenericityFlags flags;
    std::vector<RootRecord> records;
    std::optional<Real> root_residual_bound;
    bool no_roots = false;

    std::size_t skipped() const {
        std::size_t n = 0;
        for (const auto& r : records) {
            n += r.skipped() ? 1 : 0;
        }
        return n;
    }
    /// Largest residual over non-skipped roots; zero if there are none.
    Real max_residual() const {
        Real m(precision);
        for (const auto& r : records) {
            if (!r.skipped()) {
                m = max(m, max(*r.residual_shifted, *r.residual_euler));
            }
        }
        return m;
    }
    bool passed(const Real& tolerance) const { return q0.agree && !(max_residual() > tolerance); }
};

/// Checks both evaluations at every root of F(1-a,-l,2-c;x).
inline VerifyReport verify_theorem(const Rational& a, const Rational& c, ContigOrder ell, Precision prec,
                                   std::optional<std::size_t> order = std::nullopt) {
    require_noninteger_c(c);
    const unsigned l = ell;
    VerifyReport rep;
    rep.a = a;
    rep.c = c;
    rep.ell = l;
    rep.precision = prec;
    rep.terminating = terminating_poly({1 - a, Rational(-static_cast<long>(l)), 2 - c});
    rep.flags = genericity_flags({a, 1, c}, ell);
    rep.q0 = compute_q0(a, c, ell, order);
    if (!rep.q0.agree) {
        throw InconsistencyError("q0 methods disagree for a = " + to_string(a) + ", c = " + to_string(c) +
                                 ", l = " + std::to_string(l));
    }
    if (rep.terminating.degree().value_or(0) == 0) {
        rep.no_roots = true;
        return rep;
    }

    const RootSet roots = find_roots(rep.terminating, prec);
    rep.root_residual_bound = roots.residual_bound;
    const Precision wp = prec + 32;
    const Rational one_c = 1 - c;
    const Rational scale = Rational(-one_c / factorial(l));
    for (const auto& root : roots.roots) {
        RootRecord rec;
        rec.lambda = root.value;
        rec.multiplicity = root.multiplicity;
        const CFloat t = root.value.with_precision(wp);
        if (t.is_real() && t.re() >= Real(1L, wp)) {
            rec.skip_reason = "branch-cut";
            rec.skip_detail = "root lies on [1, inf)";
            rep.records.push_back(std::move(rec));
            continue;
        }
        try {
            const EvalResult shifted = hyp2f1_num({a, Rational(1 + l), c}, root.value, prec);
            const EvalResult euler = hyp2f1_num({Rational(c - a), Rational(c - 1 - l), c}, root.value, prec);
            rec.path_shifted = shifted.path_string();
            rec.path_euler = euler.path_string();
            if (shifted.path.front() == EvalPath::unsupported || euler.path.front() == EvalPath::unsupported) {
                rec.skip_reason = "unsupported";
                rec.skip_detail = "no expansion converges fast enough at this root";
                rep.records.push_back(std::move(rec));
                continue;
            }
            const CFloat one_t = CFloat(1L, wp) - t;
            const CFloat q0_t = eval_poly(rep.q0.series.q0, t);
            const CFloat rhs_shifted = CFloat(scale, wp) * q0_t / pow(one_t, static_cast<long>(l));
            const CFloat rhs_euler = CFloat(scale, wp) * pow(one_t, Rational(a + 1 - c)) * q0_t;
            rec.lhs_shifted = shifted.value;
            rec.rhs_shifted = rhs_shifted.with_precision(prec);
            rec.lhs_euler = euler.value;
            rec.rhs_euler = rhs_euler.with_precision(prec);
            rec.residual_shifted = relative_residual(shifted.value, *rec.rhs_shifted);
            rec.residual_euler = relative_residual(euler.value, *rec.rhs_euler);
        } catch (const NumericError& e) {
            rec.skip_reason = to_string(e.kind());
            rec.skip_detail = e.what();
        }
        rep.records.push_back(std::move(rec));
    }
    return rep;
}

struct GosperReport {
    Rational a;
    Rational b;
    Rational argument;  // b/(a+b)
    Precision precision = kDefaultPrecision;
    /// Exact values when the left side terminates and a is a positive integer.
    std::optional<Rational> exact_lhs;
    std::optional<Rational> exact_rhs;
    CFloat lhs;
    CFloat rhs;
    Real residual;
    std::string path;

    bool exact() const { return exact_lhs.has_value(); }
};

/// F(1-a, b, b+2; b/(a+b)) against (b+1)(a/(a+b))^a.
inline GosperReport gosper_check(const Rational& a, const Rational& b, Precision prec) {
    if (sgn(Rational(a + b)) == 0) {
        throw ParameterError("a + b must be nonzero");
    }
    const Rational lower = b + 2;
    const Rational z = b / (a + b);
    const HypParams p{Rational(1 - a), b, lower};
    const bool terminates = termination_degree(p).has_value();
    if (is_nonpositive_integer(lower) && !terminates) {
        throw ParameterError("b + 2 is a nonpositive integer");
    }
    if (z >= 1 && !terminates) {
        throw NumericError(NumericError::Kind::branch_cut, "argument b/(a+b) = " + to_string(z) + " lies on [1, inf)");
    }
    GosperReport rep{a, b, z, prec, std::nullopt, std::nullopt, CFloat(prec), CFloat(prec), Real(prec), ""};
    const Rational base = a / (a + b);
    if (terminates && is_integer(a) && sgn(a) >= 0) {
        const auto deg = *termination_degree(p);
        rep.exact_lhs = hyp_series(p, deg).partial_sum(deg)(z);
        Rational pw = 1;
        for (Integer k = 0; k < a.get_num(); ++k) {
            pw *= base;
        }
        rep.exact_rhs = (b + 1) * pw;
        rep.lhs = CFloat(*rep.exact_lhs, prec);
        rep.rhs = CFloat(*rep.exact_rhs, prec);
        rep.residual = relative_residual(rep.lhs, rep.rhs);
        if (*rep.exact_lhs == *rep.exact_rhs) {
            rep.residual = Real(prec);
        }
        rep.path = "exact";
        return rep;
    }
    const EvalResult lhs = hyp2f1_num(p, CFloat(z, prec), prec);
    if (lhs.path.front() == EvalPath::unsupported) {
        throw NumericError(NumericError::Kind::unsupported, "no expansion converges fast enough at b/(a+b)");
    }
    const Precision wp = prec + 32;
    rep.lhs = lhs.value;
    rep.rhs = (CFloat(Rational(b + 1), wp) * pow(CFloat(base, wp), a)).with_precision(prec);
    rep.residual = relative_residual(rep.lhs, rep.rhs);
    rep.path = lhs.path_string();
    return rep;
}

struct IntegralReport {
    CFloat series_side;    // F(a,1,c;x)
    CFloat integral_side;  // -(1-c) y2(x) * integral
    Real residual;
    /// Bound on the neglected terms of the termwise integral.
    Real truncation_bound;
};

/// F(a,1,c;x) against -(1-c) y2(x) int_0^x t^{c-2}(1-t)^{a-c} dt with
/// y2(x) = x^{1-c}(1-x)^{c-a-1}. The integrand is expanded by the binomial
/// series and integrated termwise through t^{c-2+N}.
inline IntegralReport incomplete_beta_check(const Rational& a, const Rational& c, const Rational& x, std::size_t N,
                                            Precision prec) {
    if (!(c > 1)) {
        throw ParameterError("the integral representation needs c > 1");
    }
    if (!(sgn(x) > 0 && x < 1)) {
        throw ParameterError("x must lie in (0, 1)");
    }
    const Precision wp = prec + 32;
    const TruncatedSeries coeffs = binomial_series(a - c, N);
    const CFloat xw(x, wp);
    const CFloat cm1(Rational(c - 1), wp);
    // sum_n coeff_n x^{c-1+n} / (c-1+n)
    CFloat integral(wp);
    const CFloat x_pow_c1 = pow(xw, Rational(c - 1));
    CFloat xn(1L, wp);
    Real last(wp);
    for (std::size_t n = 0; n <= N; ++n) {
        const Rational denom = c - 1 + static_cast<unsigned long>(n);
        const CFloat term = CFloat(Rational(coeffs[n] / denom), wp) * xn;
        integral += term;
        last = abs(term);
        xn = xn * xw;
    }
    integral = integral * x_pow_c1;
    const CFloat y2 = pow(xw, Rational(1 - c)) * pow(CFloat(Rational(1 - x), wp), Rational(c - a - 1));
    const CFloat integral_side = CFloat(Rational(c - 1), wp) * y2 * integral;
    const EvalResult series = hyp2f1_num({a, 1, c}, CFloat(x, prec), prec);

    // Coefficients of (1-t)^{a-c} are eventually bounded by C n^{c-a-1};
    // the remaining terms are dominated by a geometric tail in x.
    const Real xr(x, wp);
    const Real tail = last * xr / (Real(1L, wp) - xr) * abs(y2) * abs(x_pow_c1) * abs(cm1) *
                      Real(static_cast<long>(N + 2), wp);
    IntegralReport rep{series.value, integral_side.with_precision(prec), Real(prec), tail.with_precision(prec)};
    rep.residual = relative_residual(rep.series_side, rep.integral_side);
    return rep;
}

}  // namespace gosper
