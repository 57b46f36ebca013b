#pragma once

// Thin RAII wrapper over MPFR values with explicit per-value precision.
// Binary operations produce a result at the larger operand precision.

#include "gosper/rational.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdio>
#include <string>
#include <utility>

namespace gosper {

/// Mantissa bits used throughout one numeric computation.
using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 192;

class Real {
public:
    explicit Real(Precision prec = kDefaultPrecision) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(long v, Precision prec) : Real(prec) { mpfr_set_si(v_, v, MPFR_RNDN); }
    Real(double v, Precision prec) : Real(prec) { mpfr_set_d(v_, v, MPFR_RNDN); }
    Real(const Rational& q, Precision prec) : Real(prec) { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
    /// Decimal or hex-float text; throws ParameterError on malformed input.
    Real(const std::string& text, Precision prec) : Real(prec) {
        if (mpfr_set_str(v_, text.c_str(), 0, MPFR_RNDN) != 0) {
            throw ParameterError("malformed floating-point literal '" + text + "'");
        }
    }
    Real(const Real& o) : Real(o.precision()) { mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept : Real(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.precision());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    Precision precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    /// Same value rounded to a new precision.
    Real with_precision(Precision prec) const {
        Real r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    /// Binary exponent e with 2^{e-1} <= |x| < 2^e; very negative for zero.
    long exponent() const { return is_zero() ? -(1L << 40) : mpfr_get_exp(v_); }

    /// Decimal string with enough digits to round-trip at this precision.
    std::string to_string(int digits = 0) const {
        if (!is_finite()) {
            return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
        }
        if (digits <= 0) {
            digits = static_cast<int>(mpfr_get_str_ndigits(10, precision()));
        }
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rg", digits, v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }
    std::string to_hex() const {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%Ra", v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }

#define GOSPER_REAL_BINOP(op, fn)                                                   \
    friend Real operator op(const Real& x, const Real& y) {                         \
        Real r(std::max(x.precision(), y.precision()));                             \
        fn(r.v_, x.v_, y.v_, MPFR_RNDN);                                            \
        return r;                                                                   \
    }                                                                               \
    Real& operator op##=(const Real& y) {                                           \
        if (y.precision() > precision()) {                                          \
            mpfr_prec_round(v_, y.precision(), MPFR_RNDN);                          \
        }                                                                           \
        fn(v_, v_, y.v_, MPFR_RNDN);                                                \
        return *this;                                                               \
    }
    GOSPER_REAL_BINOP(+, mpfr_add)
    GOSPER_REAL_BINOP(-, mpfr_sub)
    GOSPER_REAL_BINOP(*, mpfr_mul)
    GOSPER_REAL_BINOP(/, mpfr_div)
#undef GOSPER_REAL_BINOP

    friend Real operator-(const Real& x) {
        Real r(x.precision());
        mpfr_neg(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& x, long s) {
        Real r(x.precision());
        mpfr_mul_si(r.v_, x.v_, s, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& x, long s) {
        Real r(x.precision());
        mpfr_div_si(r.v_, x.v_, s, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const Real& x, const Real& y) { return mpfr_less_p(x.v_, y.v_) != 0; }
    friend bool operator>(const Real& x, const Real& y) { return mpfr_greater_p(x.v_, y.v_) != 0; }
    friend bool operator<=(const Real& x, const Real& y) { return mpfr_lessequal_p(x.v_, y.v_) != 0; }
    friend bool operator>=(const Real& x, const Real& y) { return mpfr_greaterequal_p(x.v_, y.v_) != 0; }
    friend bool operator==(const Real& x, const Real& y) { return mpfr_equal_p(x.v_, y.v_) != 0; }

private:
    mpfr_t v_;
};

namespace detail {
template <int (*Fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
Real unary(const Real& x) {
    Real r(x.precision());
    Fn(r.get(), x.get(), MPFR_RNDN);
    return r;
}
}  // namespace detail

inline Real abs(const Real& x) { return detail::unary<mpfr_abs>(x); }
inline Real sqrt(const Real& x) { return detail::unary<mpfr_sqrt>(x); }
inline Real exp(const Real& x) { return detail::unary<mpfr_exp>(x); }
inline Real log(const Real& x) { return detail::unary<mpfr_log>(x); }
inline Real sin(const Real& x) { return detail::unary<mpfr_sin>(x); }
inline Real cos(const Real& x) { return detail::unary<mpfr_cos>(x); }
inline Real sinh(const Real& x) { return detail::unary<mpfr_sinh>(x); }
inline Real cosh(const Real& x) { return detail::unary<mpfr_cosh>(x); }

inline Real atan2(const Real& y, const Real& x) {
    Real r(std::max(x.precision(), y.precision()));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}
inline Real hypot(const Real& x, const Real& y) {
    Real r(std::max(x.precision(), y.precision()));
    mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}
inline Real pi(Precision prec) {
    Real r(prec);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}
/// 2^e at the given precision.
inline Real pow2(long e, Precision prec) {
    Real r(1L, prec);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}
inline Real max(const Real& x, const Real& y) { return x < y ? y : x; }

/// Distance from x to the nearest integer, and that integer.
inline std::pair<Real, long> nearest_integer(const Real& x) {
    Real n(x.precision());
    mpfr_rint(n.get(), x.get(), MPFR_RNDN);
    return {abs(x - n), mpfr_get_si(n.get(), MPFR_RNDN)};
}

}  // namespace gosper
