#pragma once

// Rational functions num/den in x over the rationals, kept in normal form:
// gcd(num, den) = 1 and den monic.

#include "gosper/poly.hpp"

#include <string>
#include <utility>

namespace gosper {

class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(implicit)
    RatFunc(Poly p) : num_(std::move(p)), den_(Rational(1)) {}   // NOLINT(implicit)
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == Degree{0}; }

    friend bool operator==(const RatFunc&, const RatFunc&) = default;

    friend RatFunc operator+(const RatFunc& f, const RatFunc& g) {
        if (f.den_ == g.den_) {
            return {f.num_ + g.num_, f.den_};
        }
        return {f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_};
    }
    friend RatFunc operator-(const RatFunc& f) { return {-f.num_, f.den_}; }
    friend RatFunc operator-(const RatFunc& f, const RatFunc& g) { return f + (-g); }
    friend RatFunc operator*(const RatFunc& f, const RatFunc& g) {
        if (f.is_zero() || g.is_zero()) {
            return {};
        }
        return {f.num_ * g.num_, f.den_ * g.den_};
    }
    friend RatFunc operator/(const RatFunc& f, const RatFunc& g) {
        if (g.is_zero()) {
            throw ParameterError("rational function division by zero");
        }
        return {f.num_ * g.den_, f.den_ * g.num_};
    }

    /// Quotient rule: (n/d)' = (n'd - nd')/d^2.
    RatFunc derivative() const {
        if (is_polynomial()) {
            return RatFunc(num_.derivative());
        }
        return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
    }

    std::string to_string() const {
        if (is_polynomial()) {
            return num_.to_string();
        }
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) {
            throw ParameterError("rational function with zero denominator");
        }
        if (num_.is_zero()) {
            den_ = Poly(Rational(1));
            return;
        }
        const Poly g = gcd(num_, den_);
        if (g.degree() != Degree{0}) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        const Rational lc = den_.leading();
        if (lc != 1) {
            const Rational inv = Rational(1) / lc;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Poly num_;
    Poly den_;
};

}  // namespace gosper
