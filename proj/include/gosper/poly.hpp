#pragma once

// Dense univariate polynomials in x over the rationals.

#include "gosper/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gosper {

/// Degree of a polynomial; std::nullopt is the degree of the zero polynomial.
using Degree = std::optional<std::size_t>;

class Poly {
public:
    Poly() = default;
    Poly(const Rational& constant) : coeffs_{constant} { trim(); }  // NOLINT(implicit)
    Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly{0, 1}; }
    static Poly monomial(const Rational& c, std::size_t k) {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }
    /// (1 - x)^k
    static Poly one_minus_x_pow(std::size_t k) {
        Poly r(Rational(1));
        const Poly f{1, -1};
        for (std::size_t i = 0; i < k; ++i) {
            r = r * f;
        }
        return r;
    }

    bool is_zero() const { return coeffs_.empty(); }
    Degree degree() const {
        if (coeffs_.empty()) {
            return std::nullopt;
        }
        return coeffs_.size() - 1;
    }
    /// Coefficient of x^k; zero beyond the degree.
    Rational operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    /// Largest k with x^k dividing the polynomial; nullopt for zero.
    std::optional<std::size_t> valuation() const {
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (sgn(coeffs_[k]) != 0) {
                return k;
            }
        }
        return std::nullopt;
    }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) {
            return {};
        }
        std::vector<Rational> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) {
            d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
        }
        return Poly(std::move(d));
    }

    /// Multiply by x^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) {
            return {};
        }
        std::vector<Rational> v(k, Rational(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Poly(std::move(v));
    }

    Poly monic() const {
        if (is_zero()) {
            return {};
        }
        const Rational lc = leading();
        std::vector<Rational> v = coeffs_;
        for (auto& c : v) {
            c /= lc;
        }
        return Poly(std::move(v));
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    friend Poly operator+(const Poly& f, const Poly& g) {
        std::vector<Rational> v(std::max(f.coeffs_.size(), g.coeffs_.size()));
        for (std::size_t k = 0; k < v.size(); ++k) {
            v[k] = f[k] + g[k];
        }
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& f) {
        std::vector<Rational> v = f.coeffs_;
        for (auto& c : v) {
            c = -c;
        }
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }
    friend Poly operator*(const Poly& f, const Poly& g) {
        if (f.is_zero() || g.is_zero()) {
            return {};
        }
        std::vector<Rational> v(f.coeffs_.size() + g.coeffs_.size() - 1);
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
            if (sgn(f.coeffs_[i]) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
                v[i + j] += f.coeffs_[i] * g.coeffs_[j];
            }
        }
        return Poly(std::move(v));
    }
    friend Poly operator*(const Rational& s, const Poly& f) { return Poly(s) * f; }

    /// Euclidean division f = quot * g + rem with deg rem < deg g.
    friend std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
        if (g.is_zero()) {
            throw ParameterError("polynomial division by zero");
        }
        std::vector<Rational> rem = f.coeffs_;
        const std::size_t dg = g.coeffs_.size() - 1;
        if (rem.size() <= dg) {
            return {Poly{}, f};
        }
        std::vector<Rational> quot(rem.size() - dg);
        const Rational lg = g.leading();
        for (std::size_t k = rem.size(); k-- > dg;) {
            const Rational t = rem[k] / lg;
            quot[k - dg] = t;
            if (sgn(t) == 0) {
                continue;
            }
            for (std::size_t j = 0; j <= dg; ++j) {
                rem[k - dg + j] -= t * g.coeffs_[j];
            }
        }
        rem.resize(dg);
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    friend Poly gcd(Poly f, Poly g) {
        while (!g.is_zero()) {
            auto r = divmod(f, g).second;
            f = std::move(g);
            g = std::move(r);
        }
        return f.monic();
    }

    /// Human-readable form in ascending powers, e.g. "7/2 + 3x - (1/2)x^2".
    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) {
            return "0";
        }
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Rational& c = coeffs_[k];
            if (sgn(c) == 0) {
                continue;
            }
            const Rational mag = abs(c);
            if (out.empty()) {
                out += sgn(c) < 0 ? "-" : "";
            } else {
                out += sgn(c) < 0 ? " - " : " + ";
            }
            std::string mono;
            if (k >= 1) {
                mono = var + (k > 1 ? "^" + std::to_string(k) : "");
            }
            if (k == 0) {
                out += gosper::to_string(mag);
            } else if (mag == 1) {
                out += mono;
            } else if (is_integer(mag)) {
                out += gosper::to_string(mag) + mono;
            } else {
                out += "(" + gosper::to_string(mag) + ")" + mono;
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Rational> coeffs_;
};

/// Exponent of the factor (1 - x) in f; nullopt for the zero polynomial.
inline std::optional<std::size_t> one_minus_x_multiplicity(Poly f) {
    if (f.is_zero()) {
        return std::nullopt;
    }
    const Poly factor{1, -1};
    std::size_t m = 0;
    for (;;) {
        auto [q, r] = divmod(f, factor);
        if (!r.is_zero()) {
            return m;
        }
        f = std::move(q);
        ++m;
    }
}

}  // namespace gosper
