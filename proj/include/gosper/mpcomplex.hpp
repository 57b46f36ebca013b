#pragma once

// Complex numbers over Real. Elementary functions use the principal
// branch: log has imaginary part in (-pi, pi].

#include "gosper/mpreal.hpp"

#include <string>
#include <utility>

namespace gosper {

class CFloat {
public:
    explicit CFloat(Precision prec = kDefaultPrecision) : re_(prec), im_(prec) {}
    CFloat(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit CFloat(Real re) : re_(std::move(re)), im_(re_.precision()) {}
    CFloat(const Rational& re, Precision prec) : re_(re, prec), im_(prec) {}
    CFloat(long re, Precision prec) : re_(re, prec), im_(prec) {}

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    Precision precision() const { return std::max(re_.precision(), im_.precision()); }
    bool is_real() const { return im_.is_zero(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

    CFloat with_precision(Precision prec) const { return {re_.with_precision(prec), im_.with_precision(prec)}; }
    CFloat conj() const { return {re_, -im_}; }

    friend CFloat operator+(const CFloat& x, const CFloat& y) { return {x.re_ + y.re_, x.im_ + y.im_}; }
    friend CFloat operator-(const CFloat& x, const CFloat& y) { return {x.re_ - y.re_, x.im_ - y.im_}; }
    friend CFloat operator-(const CFloat& x) { return {-x.re_, -x.im_}; }
    friend CFloat operator*(const CFloat& x, const CFloat& y) {
        return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
    }
    friend CFloat operator*(const CFloat& x, const Real& s) { return {x.re_ * s, x.im_ * s}; }
    friend CFloat operator*(const Real& s, const CFloat& x) { return x * s; }
    friend CFloat operator/(const CFloat& x, const Real& s) { return {x.re_ / s, x.im_ / s}; }
    friend CFloat operator/(const CFloat& x, const CFloat& y) {
        if (y.im_.is_zero()) {
            return x / y.re_;
        }
        const Real den = y.re_ * y.re_ + y.im_ * y.im_;
        return {(x.re_ * y.re_ + x.im_ * y.im_) / den, (x.im_ * y.re_ - x.re_ * y.im_) / den};
    }
    CFloat& operator+=(const CFloat& y) {
        re_ += y.re_;
        im_ += y.im_;
        return *this;
    }
    CFloat& operator*=(const CFloat& y) { return *this = *this * y; }

    std::string to_string(int digits = 0) const {
        if (im_.is_zero()) {
            return re_.to_string(digits);
        }
        const std::string im = im_.to_string(digits);
        return re_.to_string(digits) + (im.front() == '-' ? " - " + im.substr(1) : " + " + im) + "i";
    }

private:
    Real re_;
    Real im_;
};

inline Real abs(const CFloat& z) { return hypot(z.re(), z.im()); }
inline Real arg(const CFloat& z) { return atan2(z.im(), z.re()); }

inline CFloat exp(const CFloat& z) {
    const Real m = exp(z.re());
    return {m * cos(z.im()), m * sin(z.im())};
}

/// Principal logarithm. The argument of a negative real is +pi.
inline CFloat log(const CFloat& z) {
    if (z.im().is_zero() && z.re().sign() < 0) {
        return {log(-z.re()), pi(z.precision())};
    }
    return {log(abs(z)), arg(z)};
}

inline CFloat sin(const CFloat& z) {
    return {sin(z.re()) * cosh(z.im()), cos(z.re()) * sinh(z.im())};
}

/// Principal power w^s = exp(s log w); 0^s = 0 for Re s > 0.
inline CFloat pow(const CFloat& w, const CFloat& s) {
    if (w.is_zero()) {
        if (s.re().sign() > 0) {
            return CFloat(w.precision());
        }
        throw ParameterError("zero raised to a power with nonpositive real part");
    }
    if (s.is_real() && w.is_real() && w.re().sign() > 0) {
        return CFloat(exp(s.re() * log(w.re())));
    }
    return exp(s * log(w));
}

inline CFloat pow(const CFloat& w, const Rational& s) { return pow(w, CFloat(s, w.precision())); }

/// Integer power by repeated squaring; exact sign handling for negative bases.
inline CFloat pow(const CFloat& w, long n) {
    if (n < 0) {
        return CFloat(1L, w.precision()) / pow(w, -n);
    }
    CFloat result(1L, w.precision());
    CFloat base = w;
    while (n > 0) {
        if (n & 1) {
            result = result * base;
        }
        base = base * base;
        n >>= 1;
    }
    return result;
}

}  // namespace gosper
