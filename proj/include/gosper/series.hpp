#pragma once

// Truncated power series with exact coefficients, and generalized series
// x^mu (1-x)^nu * body with rational exponents.

#include "gosper/poly.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace gosper {

/// Power series c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}).
///
/// The order N records how many coefficients are known. Binary operations
/// return the smaller of the two orders and never look past it.
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1) {}
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
    TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {  // NOLINT(implicit)
        if (coeffs_.empty()) {
            coeffs_.resize(1);
        }
    }
    /// Polynomial viewed as a series known through x^order.
    TruncatedSeries(const Poly& p, std::size_t order) : coeffs_(order + 1) {
        for (std::size_t k = 0; k <= order; ++k) {
            coeffs_[k] = p[k];
        }
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    Rational& operator[](std::size_t k) { return coeffs_.at(k); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    TruncatedSeries truncated(std::size_t order) const {
        std::vector<Rational> v(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
        return TruncatedSeries(std::move(v));
    }

    /// Polynomial formed by coefficients 0..k.
    Poly partial_sum(std::size_t k) const {
        std::vector<Rational> v(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(k, order()) + 1));
        return Poly(std::move(v));
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
    }

    /// Index of the first nonzero coefficient, or nullopt when all known ones vanish.
    std::optional<std::size_t> valuation() const {
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (sgn(coeffs_[k]) != 0) {
                return k;
            }
        }
        return std::nullopt;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
        const std::size_t n = std::min(f.order(), g.order());
        std::vector<Rational> v(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            v[k] = f.coeffs_[k] + g.coeffs_[k];
        }
        return TruncatedSeries(std::move(v));
    }
    friend TruncatedSeries operator-(const TruncatedSeries& f) {
        std::vector<Rational> v = f.coeffs_;
        for (auto& c : v) {
            c = -c;
        }
        return TruncatedSeries(std::move(v));
    }
    friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) { return f + (-g); }
    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& f) {
        std::vector<Rational> v = f.coeffs_;
        for (auto& c : v) {
            c *= s;
        }
        return TruncatedSeries(std::move(v));
    }
    /// Cauchy product truncated at the smaller input order.
    friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
        const std::size_t n = std::min(f.order(), g.order());
        std::vector<Rational> v(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            if (sgn(f.coeffs_[i]) == 0) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                v[i + j] += f.coeffs_[i] * g.coeffs_[j];
            }
        }
        return TruncatedSeries(std::move(v));
    }
    /// Product with an exact polynomial p = x^v p1 is known through x^{N+v}.
    friend TruncatedSeries operator*(const Poly& p, const TruncatedSeries& f) {
        const auto v = p.valuation();
        if (!v) {
            return TruncatedSeries(f.order());
        }
        const Poly rest = divmod(p, Poly::monomial(1, *v)).first;
        const TruncatedSeries shifted = f.shifted_up(*v);
        return TruncatedSeries(rest, shifted.order()) * shifted;
    }

    /// x^k * f, known through x^{N+k}.
    TruncatedSeries shifted_up(std::size_t k) const {
        std::vector<Rational> v(k);
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return TruncatedSeries(std::move(v));
    }
    /// f / x^k; the k lowest coefficients must vanish.
    TruncatedSeries shifted_down(std::size_t k) const {
        for (std::size_t i = 0; i < std::min(k, coeffs_.size()); ++i) {
            if (sgn(coeffs_[i]) != 0) {
                throw InconsistencyError("shifted_down would discard a nonzero coefficient");
            }
        }
        if (k > order()) {
            throw InconsistencyError("shifted_down past the truncation order");
        }
        return TruncatedSeries(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
    }

    /// x d/dx, same order.
    TruncatedSeries euler_derivative() const {
        std::vector<Rational> v = coeffs_;
        for (std::size_t k = 0; k < v.size(); ++k) {
            v[k] *= static_cast<unsigned long>(k);
        }
        return TruncatedSeries(std::move(v));
    }

    /// d/dx, order drops by one (order 0 stays 0 with a zero coefficient).
    TruncatedSeries derivative() const {
        if (order() == 0) {
            return TruncatedSeries(std::size_t{0});
        }
        std::vector<Rational> v(order());
        for (std::size_t k = 1; k <= order(); ++k) {
            v[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
        }
        return TruncatedSeries(std::move(v));
    }

    /// Coefficientwise equality through the smaller order.
    friend bool agree(const TruncatedSeries& f, const TruncatedSeries& g) {
        const std::size_t n = std::min(f.order(), g.order());
        for (std::size_t k = 0; k <= n; ++k) {
            if (f.coeffs_[k] != g.coeffs_[k]) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// (1 - x)^alpha through x^N via c_{n+1} = c_n (n - alpha)/(n + 1).
inline TruncatedSeries binomial_series(const Rational& alpha, std::size_t order) {
    std::vector<Rational> v(order + 1);
    v[0] = 1;
    for (std::size_t n = 0; n < order; ++n) {
        v[n + 1] = v[n] * (Rational(static_cast<unsigned long>(n)) - alpha) / static_cast<unsigned long>(n + 1);
    }
    return TruncatedSeries(std::move(v));
}

/// x^mu (1 - x)^nu * body.
///
/// In normal form the body has a nonzero constant term (unless it vanishes
/// identically), and an integer total x-exponent that is nonnegative lives
/// entirely in the body with mu = 0.
struct GenSeries {
    Rational mu;
    Rational nu;
    TruncatedSeries body;

    /// Highest power of x, relative to x^mu, whose coefficient is known.
    std::size_t order() const { return body.order(); }
};

inline GenSeries normalize(GenSeries g) {
    const auto v = g.body.valuation();
    if (!v) {
        g.mu = is_integer(g.mu) ? Rational(0) : g.mu - floor_rational(g.mu);
        return g;
    }
    TruncatedSeries stripped = g.body.shifted_down(*v);
    const Rational total = g.mu + static_cast<unsigned long>(*v);
    if (is_integer(total) && sgn(total) >= 0) {
        return {Rational(0), g.nu, stripped.shifted_up(total.get_num().get_ui())};
    }
    return {total, g.nu, std::move(stripped)};
}

/// Rewrites f and g over common exponents (the smaller mu and nu) so their
/// bodies can be compared coefficientwise. Exponent differences must be
/// integers.
inline std::pair<GenSeries, GenSeries> align(const GenSeries& f, const GenSeries& g) {
    const Rational dmu = f.mu - g.mu;
    const Rational dnu = f.nu - g.nu;
    if (!is_integer(dmu) || !is_integer(dnu)) {
        throw ParameterError("generalized series with non-integer exponent offset cannot be aligned");
    }
    auto lift = [](const GenSeries& s, const Rational& mu, const Rational& nu) {
        const auto up = Rational(s.mu - mu).get_num().get_ui();
        const auto onu = Rational(s.nu - nu).get_num().get_ui();
        TruncatedSeries body = Poly::one_minus_x_pow(onu) * s.body;
        return GenSeries{mu, nu, body.shifted_up(up)};
    };
    const Rational mu = sgn(dmu) < 0 ? f.mu : g.mu;
    const Rational nu = sgn(dnu) < 0 ? f.nu : g.nu;
    return {lift(f, mu, nu), lift(g, mu, nu)};
}

/// Exact agreement through the common known order after alignment.
inline bool agree(const GenSeries& f, const GenSeries& g) {
    auto [a, b] = align(f, g);
    return agree(a.body, b.body);
}

}  // namespace gosper
