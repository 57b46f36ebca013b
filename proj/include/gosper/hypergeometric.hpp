#pragma once

// Exact Gauss hypergeometric series and the remainder polynomials q0, r0
// attached to the contiguity operator H(l) = (x d + b + l - 1)...(x d + b).
//
// q0 and r0 are computed from closed products of hypergeometric series.
// Each product is known to be a polynomial of degree at most l - 1, so the
// series are expanded well past l and the tail is required to vanish
// exactly.

#include "gosper/series.hpp"

#include <cstddef>
#include <string>

namespace gosper {

struct HypParams {
    Rational a;
    Rational b;
    Rational c;
};

/// Contiguity order l >= 1.
class ContigOrder {
public:
    explicit ContigOrder(long ell) : ell_(ell) {
        if (ell < 1) {
            throw ParameterError("contiguity order must be a positive integer, got " + std::to_string(ell));
        }
    }
    unsigned value() const { return static_cast<unsigned>(ell_); }
    operator unsigned() const { return value(); }  // NOLINT(implicit)

private:
    long ell_;
};

struct QRPair {
    Poly q0;
    Poly r0;
};

/// Default truncation order for tail checks.
inline std::size_t default_order(ContigOrder ell) { return ell.value() + 32; }

inline void require_noninteger_c(const Rational& c) {
    if (is_integer(c)) {
        throw ParameterError("c must not be an integer, got " + to_string(c));
    }
}

/// F(a,b,c;x) through x^N. Terminating series carry exact trailing zeros.
inline TruncatedSeries hyp_series(const HypParams& p, std::size_t order) {
    std::vector<Rational> v(order + 1);
    v[0] = 1;
    for (std::size_t n = 0; n < order; ++n) {
        if (sgn(v[n]) == 0) {
            break;
        }
        const Rational cn = p.c + static_cast<unsigned long>(n);
        if (sgn(cn) == 0) {
            throw ParameterError("hypergeometric series hits the pole of its lower parameter c = " + to_string(p.c));
        }
        v[n + 1] = v[n] * (p.a + static_cast<unsigned long>(n)) * (p.b + static_cast<unsigned long>(n)) /
                   (cn * static_cast<unsigned long>(n + 1));
    }
    return TruncatedSeries(std::move(v));
}

/// Number of terms after which F(a,b,c;x) terminates, if an upper parameter
/// is a nonpositive integer.
inline std::optional<std::size_t> termination_degree(const HypParams& p) {
    std::optional<std::size_t> d;
    for (const Rational* u : {&p.a, &p.b}) {
        if (is_nonpositive_integer(*u)) {
            const std::size_t k = Rational(-*u).get_num().get_ui();
            d = d ? std::min(*d, k) : k;
        }
    }
    return d;
}

/// F(a,b,c;x) as an exact polynomial when one upper parameter is a
/// nonpositive integer. The lower parameter may not hit a pole before the
/// series stops.
inline Poly terminating_poly(const HypParams& p) {
    const auto deg = termination_degree(p);
    if (!deg) {
        throw ParameterError("series does not terminate: no upper parameter is a nonpositive integer");
    }
    if (is_nonpositive_integer(p.c) && Rational(-p.c).get_num().get_ui() < *deg) {
        throw ParameterError("lower parameter pole inside the summation range");
    }
    return hyp_series(p, *deg).partial_sum(*deg);
}

namespace detail {

inline Poly extract_polynomial(const TruncatedSeries& s, unsigned ell, const char* what) {
    for (std::size_t k = ell; k <= s.order(); ++k) {
        if (sgn(s[k]) != 0) {
            throw InconsistencyError(std::string(what) + ": nonzero coefficient at x^" + std::to_string(k) +
                                     " where a polynomial of degree < " + std::to_string(ell) + " was expected");
        }
    }
    return s.partial_sum(ell - 1);
}

}  // namespace detail

/// Series combinations for q0 and r0 with general b:
///   q0 = -(b,l)/(1-c) F(c-a,c-b-l,c) F(a+1-c,b+1-c,2-c)
///        + (b+1-c,l)/(1-c) F(a,b,c) F(1-a,1-b-l,2-c)
///   r0 = (b,l) F(c-a,c-b-l,c) F(a+1-c,b+1-c,1-c)
///        - ab(b+1-c,l)/(c(1-c)) x F(a+1,b+1,c+1) F(1-a,1-b-l,2-c)
/// Returned unreduced so callers can inspect the tails.
inline std::pair<TruncatedSeries, TruncatedSeries> q0_r0_series_general_b(const HypParams& p, ContigOrder ell,
                                                                          std::size_t order) {
    require_noninteger_c(p.c);
    const unsigned l = ell;
    const Rational& a = p.a;
    const Rational& b = p.b;
    const Rational& c = p.c;
    const Rational one_c = 1 - c;
    const TruncatedSeries f_euler = hyp_series({c - a, c - b - l, c}, order);
    const TruncatedSeries f_abc = hyp_series(p, order);
    const TruncatedSeries f_second = hyp_series({1 - a, 1 - b - l, 2 - c}, order);
    const Rational bl = poch(b, l);
    const Rational b1cl = poch(b + 1 - c, l);

    TruncatedSeries q = Rational(-bl / one_c) * (f_euler * hyp_series({a + 1 - c, b + 1 - c, 2 - c}, order)) +
                        Rational(b1cl / one_c) * (f_abc * f_second);
    TruncatedSeries r = bl * (f_euler * hyp_series({a + 1 - c, b + 1 - c, 1 - c}, order)) -
                        Rational(a * b * b1cl / (c * one_c)) *
                            (hyp_series({a + 1, b + 1, c + 1}, order) * f_second).shifted_up(1).truncated(order);
    return {std::move(q), std::move(r)};
}

/// Same combinations at b = 1, using (1-x)^{c-a-1} for F(a+1-c,2-c,2-c;x):
///   q0 = -(1,l)/(1-c) (1-x)^{c-a-1} F(c-a,c-1-l,c) + (2-c,l)/(1-c) F(a,1,c) F(1-a,-l,2-c)
///   r0 = (1,l) F(c-a,c-1-l,c) F(a+1-c,2-c,1-c) - a(2-c,l)/(c(1-c)) x F(a+1,2,c+1) F(1-a,-l,2-c)
inline std::pair<TruncatedSeries, TruncatedSeries> q0_r0_series_b1(const Rational& a, const Rational& c,
                                                                   ContigOrder ell, std::size_t order) {
    require_noninteger_c(c);
    const unsigned l = ell;
    const Rational one_c = 1 - c;
    const Rational lfact = factorial(l);
    const Rational two_c_l = poch(2 - c, l);
    const TruncatedSeries f_euler = hyp_series({c - a, c - 1 - l, c}, order);
    const TruncatedSeries f_term = hyp_series({1 - a, Rational(-static_cast<long>(l)), 2 - c}, order);

    TruncatedSeries q = Rational(-lfact / one_c) * (binomial_series(c - a - 1, order) * f_euler) +
                        Rational(two_c_l / one_c) * (hyp_series({a, 1, c}, order) * f_term);
    TruncatedSeries r = lfact * (f_euler * hyp_series({a + 1 - c, 2 - c, 1 - c}, order)) -
                        Rational(a * two_c_l / (c * one_c)) *
                            (hyp_series({a + 1, 2, c + 1}, order) * f_term).shifted_up(1).truncated(order);
    return {std::move(q), std::move(r)};
}

/// q0, r0 at b = 1 from the series combinations, with every coefficient of
/// index l..N checked to vanish.
inline QRPair q0_r0_by_series(const Rational& a, const Rational& c, ContigOrder ell, std::size_t order) {
    if (order < ell.value() + 16) {
        throw ParameterError("truncation order must be at least l + 16");
    }
    auto [q, r] = q0_r0_series_b1(a, c, ell, order);
    return {detail::extract_polynomial(q, ell, "q0 series"), detail::extract_polynomial(r, ell, "r0 series")};
}

inline QRPair q0_r0_by_series(const Rational& a, const Rational& c, ContigOrder ell) {
    return q0_r0_by_series(a, c, ell, default_order(ell));
}

/// General-b analogue of q0_r0_by_series.
inline QRPair q0_r0_general_b(const HypParams& p, ContigOrder ell, std::size_t order) {
    if (order < ell.value() + 16) {
        throw ParameterError("truncation order must be at least l + 16");
    }
    auto [q, r] = q0_r0_series_general_b(p, ell, order);
    return {detail::extract_polynomial(q, ell, "q0 series (general b)"),
            detail::extract_polynomial(r, ell, "r0 series (general b)")};
}

/// q0 at b = 1 from the expansion in 1/x, valid for non-integer a:
///   q0(x) = (2-a,l-1) (-x)^{l-1} * [partial sum through (1/x)^{l-1} of
///           F(2-c,1,2-a;1/x) F(c-1-l,-l,a-l;1/x)].
/// The series in 1/x reuse TruncatedSeries; multiplying by x^{l-1} reverses
/// the coefficient order.
inline Poly q0_by_reversal(const Rational& a, const Rational& c, ContigOrder ell) {
    if (is_integer(a)) {
        throw ParameterError("the 1/x expansion of q0 requires a non-integer a, got " + to_string(a));
    }
    require_noninteger_c(c);
    const unsigned l = ell;
    const std::size_t n = l - 1;
    const TruncatedSeries prod =
        hyp_series({2 - c, 1, 2 - a}, n) * hyp_series({c - 1 - l, Rational(-static_cast<long>(l)), a - l}, n);
    Rational scale = poch(2 - a, l - 1);
    if (n % 2 == 1) {
        scale = -scale;
    }
    std::vector<Rational> v(l);
    for (std::size_t k = 0; k <= n; ++k) {
        v[n - k] = scale * prod[k];
    }
    return Poly(std::move(v));
}

/// (1-x)^{c-a-b} F(c-a,c-b,c;x) through x^N.
inline TruncatedSeries euler_transform_series(const HypParams& p, std::size_t order) {
    return binomial_series(p.c - p.a - p.b, order) * hyp_series({p.c - p.a, p.c - p.b, p.c}, order);
}

}  // namespace gosper
