#pragma once

// Differential operators sum_k f_k(x) d^k with rational-function
// coefficients: composition under d f = f d + f', right division by the
// hypergeometric operator, and action on generalized series.

#include "gosper/hypergeometric.hpp"
#include "gosper/ratfunc.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gosper {

class DiffOp {
public:
    DiffOp() = default;
    explicit DiffOp(std::vector<RatFunc> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    DiffOp(const RatFunc& f) : coeffs_{f} { trim(); }  // NOLINT(implicit)

    /// f * d^k
    static DiffOp term(const RatFunc& f, std::size_t k) {
        std::vector<RatFunc> v(k + 1);
        v[k] = f;
        return DiffOp(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Highest power of d; nullopt for the zero operator.
    std::optional<std::size_t> order() const {
        if (coeffs_.empty()) {
            return std::nullopt;
        }
        return coeffs_.size() - 1;
    }
    /// Coefficient of d^k.
    RatFunc operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : RatFunc(); }
    const std::vector<RatFunc>& coeffs() const { return coeffs_; }

    friend bool operator==(const DiffOp&, const DiffOp&) = default;

    friend DiffOp operator+(const DiffOp& A, const DiffOp& B) {
        std::vector<RatFunc> v(std::max(A.coeffs_.size(), B.coeffs_.size()));
        for (std::size_t k = 0; k < v.size(); ++k) {
            v[k] = A[k] + B[k];
        }
        return DiffOp(std::move(v));
    }
    friend DiffOp operator-(const DiffOp& A) {
        std::vector<RatFunc> v = A.coeffs_;
        for (auto& f : v) {
            f = -f;
        }
        return DiffOp(std::move(v));
    }
    friend DiffOp operator-(const DiffOp& A, const DiffOp& B) { return A + (-B); }

    std::string to_string() const {
        if (is_zero()) {
            return "0";
        }
        std::string out;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            if (coeffs_[k].is_zero()) {
                continue;
            }
            if (!out.empty()) {
                out += " + ";
            }
            const std::string f = coeffs_[k].to_string();
            if (k == 0) {
                out += f;
            } else {
                const std::string d = k == 1 ? "D" : "D^" + std::to_string(k);
                out += (f == "1") ? d : "[" + f + "]" + d;
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) {
            coeffs_.pop_back();
        }
    }

    std::vector<RatFunc> coeffs_;
};

/// Composition A*B using d^i b = sum_m C(i,m) b^{(m)} d^{i-m}.
inline DiffOp ore_mul(const DiffOp& A, const DiffOp& B) {
    if (A.is_zero() || B.is_zero()) {
        return {};
    }
    const std::size_t na = *A.order();
    const std::size_t nb = *B.order();
    std::vector<RatFunc> out(na + nb + 1);
    for (std::size_t j = 0; j <= nb; ++j) {
        if (B[j].is_zero()) {
            continue;
        }
        // derivs[m] = m-th derivative of B_j
        std::vector<RatFunc> derivs{B[j]};
        for (std::size_t i = 0; i <= na; ++i) {
            if (A[i].is_zero()) {
                continue;
            }
            while (derivs.size() <= i) {
                derivs.push_back(derivs.back().derivative());
            }
            Integer binom = 1;
            for (std::size_t m = 0; m <= i; ++m) {
                if (!derivs[m].is_zero()) {
                    out[i - m + j] = out[i - m + j] + A[i] * derivs[m] * Rational(binom);
                }
                binom = binom * static_cast<unsigned long>(i - m) / static_cast<unsigned long>(m + 1);
            }
        }
    }
    return DiffOp(std::move(out));
}

/// Hypergeometric operator d^2 + (c-(a+b+1)x)/(x(1-x)) d - ab/(x(1-x)).
inline DiffOp build_L(const HypParams& p) {
    const Poly x_one_minus_x{0, 1, -1};
    const RatFunc d1(Poly{p.c, Rational(-(p.a + p.b + 1))}, x_one_minus_x);
    const RatFunc d0(Poly{Rational(-p.a * p.b)}, x_one_minus_x);
    return DiffOp({d0, d1, RatFunc(Rational(1))});
}

/// (x d + b + l - 1) ... (x d + b + 1)(x d + b), expanded.
inline DiffOp build_H(const Rational& b, ContigOrder ell) {
    DiffOp h = RatFunc(Rational(1));
    for (unsigned k = 0; k < ell.value(); ++k) {
        const DiffOp factor({RatFunc(Rational(b + k)), RatFunc(Poly::x())});
        h = ore_mul(factor, h);
    }
    return h;
}

/// dividend = quotient * divisor + q d + r
struct ReductionData {
    DiffOp quotient;
    RatFunc q;
    RatFunc r;
};

/// Right division by an operator of order 2 with unit leading coefficient,
/// eliminating the leading term of the running remainder one order at a time.
inline ReductionData right_reduce(const DiffOp& H, const DiffOp& L) {
    if (L.order() != std::optional<std::size_t>{2} || L[2] != RatFunc(Rational(1))) {
        throw ParameterError("right_reduce expects a monic operator of order 2");
    }
    DiffOp rem = H;
    DiffOp quotient;
    while (rem.order() && *rem.order() >= 2) {
        const std::size_t k = *rem.order();
        const DiffOp step = DiffOp::term(rem[k], k - 2);
        quotient = quotient + step;
        rem = rem - ore_mul(step, L);
        if (rem.order() && *rem.order() >= k) {
            throw InconsistencyError("right_reduce failed to lower the remainder order");
        }
    }
    return {std::move(quotient), rem[1], rem[0]};
}

/// quotient * L + q d + r
inline DiffOp reconstruct(const ReductionData& red, const DiffOp& L) {
    return ore_mul(red.quotient, L) + DiffOp({red.r, red.q});
}

/// Remainder of H(l) in the shape q = x^v0 (1-x)^v1 q0core,
/// r = x^w0 (1-x)^w1 r0core with q0core, r0core nonvanishing at 0 and 1.
///
/// q0 and r0 are the degree <= l-1 polynomials x^{-1}(1-x)^{l-1} q and
/// (1-x)^{l-1} r. In the generic case they coincide with the cores and
/// (v0,v1,g) = (1,1-l,l-1), (w0,w1,h) = (0,1-l,l-1).
struct FactoredRemainder {
    Rational v0;
    Rational v1;
    Degree g;
    Rational w0;
    Rational w1;
    Degree h;
    Poly q0;
    Poly r0;
    Poly q0_core;
    Poly r0_core;

    bool generic_shape(ContigOrder ell) const {
        const long l = ell.value();
        return v0 == 1 && v1 == 1 - l && g == Degree{ell.value() - 1} && w0 == 0 && w1 == 1 - l &&
               h == Degree{ell.value() - 1};
    }
};

namespace detail {

struct Shape {
    Rational x_exp;
    Rational one_minus_x_exp;
    Poly core;
};

/// Splits p = x^i (1-x)^j core. Zero stays zero with exponents as given.
inline Shape split_shape(const Poly& p, Rational x_exp, Rational omx_exp) {
    if (p.is_zero()) {
        return {std::move(x_exp), std::move(omx_exp), p};
    }
    const std::size_t vx = *p.valuation();
    Poly core = divmod(p, Poly::monomial(1, vx)).first;
    const std::size_t vomx = *one_minus_x_multiplicity(core);
    core = divmod(core, Poly::one_minus_x_pow(vomx)).first;
    return {x_exp + static_cast<unsigned long>(vx), omx_exp + static_cast<unsigned long>(vomx), std::move(core)};
}

inline Poly require_polynomial(const RatFunc& f, const char* what) {
    if (!f.is_polynomial()) {
        throw InconsistencyError(std::string(what) + " has a denominator other than powers of x and 1-x: " +
                                 f.to_string());
    }
    return f.num();
}

}  // namespace detail

inline FactoredRemainder factor_remainder(const RatFunc& q, const RatFunc& r, ContigOrder ell) {
    const unsigned l = ell;
    const RatFunc lift(Poly::one_minus_x_pow(l - 1));
    const Poly q0 = detail::require_polynomial(q * lift / RatFunc(Poly::x()), "x^-1 (1-x)^(l-1) q");
    const Poly r0 = detail::require_polynomial(r * lift, "(1-x)^(l-1) r");
    for (const Poly* p : {&q0, &r0}) {
        if (p->degree() && *p->degree() > l - 1) {
            throw InconsistencyError("remainder polynomial exceeds degree l-1: " + p->to_string());
        }
    }
    const Rational base_omx = 1 - static_cast<long>(l);
    auto qs = detail::split_shape(q0, 1, base_omx);
    auto rs = detail::split_shape(r0, 0, base_omx);
    return {qs.x_exp,  qs.one_minus_x_exp, qs.core.degree(), rs.x_exp, rs.one_minus_x_exp, rs.core.degree(),
            q0,        r0,                 qs.core,          rs.core};
}

/// Boolean genericity conditions on (a, b, c, l):
///   A1: a, b, c-a, c-b not integers
///   A2: c, c-a-b, a-b not integers
///   E1: (b,l) - (b+1-c,l) != 0
///   E2': l != 1 or (b+1,l-1)/a - (c-a,l-1)/(c-b-1) != 0
struct GenericityFlags {
    bool a1 = false;
    bool a2 = false;
    bool e1 = false;
    bool e2 = false;
    /// Set when E2' could not be evaluated because a = 0 or c-b-1 = 0.
    std::optional<std::string> e2_note;

    bool all() const { return a1 && a2 && e1 && e2; }
};

inline GenericityFlags genericity_flags(const HypParams& p, ContigOrder ell) {
    const auto& [a, b, c] = p;
    const unsigned l = ell;
    GenericityFlags f;
    f.a1 = !is_integer(a) && !is_integer(b) && !is_integer(Rational(c - a)) && !is_integer(Rational(c - b));
    f.a2 = !is_integer(c) && !is_integer(Rational(c - a - b)) && !is_integer(Rational(a - b));
    f.e1 = poch(b, l) != poch(b + 1 - c, l);
    if (l != 1) {
        f.e2 = true;
    } else if (sgn(a) == 0 || sgn(Rational(c - b - 1)) == 0) {
        f.e2 = false;
        f.e2_note = sgn(a) == 0 ? "division by zero: a = 0" : "division by zero: c - b - 1 = 0";
    } else {
        f.e2 = poch(b + 1, l - 1) / a != poch(c - a, l - 1) / (c - b - 1);
    }
    return f;
}

namespace detail {

/// Splits a denominator into const * x^i (1-x)^j; nullopt if it has any
/// other factor.
struct DenShape {
    std::size_t x_pow;
    std::size_t omx_pow;
    Rational scale;
};

inline std::optional<DenShape> denominator_shape(const Poly& den) {
    const std::size_t vx = *den.valuation();
    Poly rest = divmod(den, Poly::monomial(1, vx)).first;
    const std::size_t vomx = *one_minus_x_multiplicity(rest);
    rest = divmod(rest, Poly::one_minus_x_pow(vomx)).first;
    if (rest.degree() != Degree{0}) {
        return std::nullopt;
    }
    return DenShape{vx, vomx, rest[0]};
}

/// d/dx of x^mu (1-x)^nu f = x^{mu-1}(1-x)^{nu-1} [mu(1-x)f - nu x f + x(1-x) f'].
inline GenSeries differentiate(const GenSeries& g) {
    const TruncatedSeries& f = g.body;
    const Poly mu_part{g.mu, Rational(-g.mu - g.nu)};
    TruncatedSeries body = mu_part * f + Poly{1, -1} * f.euler_derivative();
    return {g.mu - 1, g.nu - 1, std::move(body)};
}

}  // namespace detail

/// Applies A to x^mu (1-x)^nu body. Coefficients of A must have
/// denominators of the form x^i (1-x)^j. The body order is tracked so that
/// every returned coefficient is exact; N caps it from above.
inline GenSeries apply_to_genseries(const DiffOp& A, const GenSeries& g, std::size_t order) {
    if (A.is_zero()) {
        return normalize({g.mu, g.nu, TruncatedSeries(std::vector<Rational>(std::min(order, g.order()) + 1))});
    }
    std::vector<GenSeries> terms;
    GenSeries deriv{g.mu, g.nu, g.body.truncated(order)};
    for (std::size_t k = 0; k <= *A.order(); ++k) {
        if (k > 0) {
            deriv = detail::differentiate(deriv);
        }
        const RatFunc& f = A[k];
        if (f.is_zero()) {
            continue;
        }
        const auto shape = detail::denominator_shape(f.den());
        if (!shape) {
            throw ParameterError("operator coefficient has a denominator outside x^i (1-x)^j: " + f.to_string());
        }
        const Rational inv = Rational(1) / shape->scale;
        TruncatedSeries body = Rational(inv) * (f.num() * deriv.body);
        terms.push_back({deriv.mu - static_cast<unsigned long>(shape->x_pow),
                         deriv.nu - static_cast<unsigned long>(shape->omx_pow), std::move(body)});
    }
    GenSeries acc = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        auto [lhs, rhs] = align(acc, terms[i]);
        acc = {lhs.mu, lhs.nu, lhs.body + rhs.body};
    }
    return normalize(std::move(acc));
}

}  // namespace gosper
