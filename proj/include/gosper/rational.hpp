#pragma once

// Exact rational scalars backed by GMP.

#include "gosper/errors.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gosper {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) {
        throw ParameterError("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_nonpositive_integer(const Rational& q) {
    return is_integer(q) && sgn(q) <= 0;
}

/// Rising factorial a(a+1)...(a+n-1); empty product for n = 0.
inline Rational poch(const Rational& a, unsigned n) {
    Rational r = 1;
    Rational f = a;
    for (unsigned k = 0; k < n; ++k) {
        r *= f;
        f += 1;
    }
    return r;
}

inline Rational factorial(unsigned n) { return poch(Rational(1), n); }

/// "p/q" or "p" (integers only, no decimals). Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        if (s.empty()) {
            return false;
        }
        for (char ch : s) {
            if (ch < '0' || ch > '9') {
                return false;
            }
        }
        return true;
    };
    auto strip_plus = [](std::string_view s) {
        return (!s.empty() && s.front() == '+') ? s.substr(1) : s;
    };
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
        throw ParameterError("not a rational of the form p/q: '" + std::string(text) + "'");
    }
    Integer n(std::string(strip_plus(num)), 10);
    Integer d(std::string(strip_plus(den)), 10);
    if (d == 0) {
        throw ParameterError("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// Canonical "p/q" form; integers print without a denominator.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline Rational floor_rational(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(f);
}

}  // namespace gosper
