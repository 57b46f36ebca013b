#include "gosper/hypergeometric.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace gosper {
namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

struct Draw {
    Rational a;
    Rational c;
    unsigned ell;
};

/// Parameter pool shared by the property tests: a, c with numerators and
/// denominators bounded by 20, c not an integer, l in 1..6.
std::vector<Draw> parameter_pool(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> ell(1, 6);
    std::vector<Draw> out;
    for (std::size_t i = 0; i < n; ++i) {
        const Rational a = testing::random_rational(rng);
        const Rational c = testing::random_noninteger(rng);
        out.push_back({a, c, ell(rng)});
    }
    return out;
}

TEST(HypSeries, Examples) {
    EXPECT_EQ(hyp_series({q(7, 3), q(-2, 5), q(1, 9)}, 5)[0], 1);
    EXPECT_EQ(hyp_series({-1, 1, 3}, 3), TruncatedSeries(Poly{1, q(-1, 3)}, 3));
    EXPECT_EQ(hyp_series({3, 2, q(3, 2)}, 2)[1], 4);
}

TEST(HypSeries, PoleBeforeTerminationIsRejected) {
    EXPECT_THROW(hyp_series({q(1, 2), q(1, 3), -2}, 6), ParameterError);
    // Terminates at x^1 before reaching the pole at n = 2.
    EXPECT_NO_THROW(hyp_series({-1, q(1, 3), -2}, 6));
}

TEST(TerminatingPoly, Examples) {
    const Rational a = 3, c = q(3, 2);
    const Poly p = terminating_poly({1 - a, -1, 2 - c});
    EXPECT_EQ(p, (Poly{1, 4}));
    // its root is (c-2)/(a-1)
    EXPECT_EQ(p(Rational((c - 2) / (a - 1))), 0);
    EXPECT_EQ(terminating_poly({0, -4, q(3, 7)}), Poly{1});
}

TEST(TerminatingPoly, DegreeDropsExactlyWhenPochhammerVanishes) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational a = make_rational(std::uniform_int_distribution<long>(-6, 8)(rng));
        const Rational c = testing::random_noninteger(rng);
        const unsigned l = std::uniform_int_distribution<unsigned>(1, 6)(rng);
        const Poly p = terminating_poly({1 - a, Rational(-static_cast<long>(l)), 2 - c});
        EXPECT_EQ(p.degree() == Degree{l}, poch(1 - a, l) != 0) << a << " " << c << " " << l;
    }
}

TEST(TerminatingPoly, RejectsNonTerminatingAndPoles) {
    EXPECT_THROW(terminating_poly({q(1, 2), q(1, 3), q(1, 5)}), ParameterError);
    EXPECT_THROW(terminating_poly({-3, q(1, 2), -1}), ParameterError);
}

TEST(Q0R0BySeries, LowOrderClosedForms) {
    for (const auto& [a, c] : std::vector<std::pair<Rational, Rational>>{
             {3, q(3, 2)}, {q(1, 2), q(1, 3)}, {q(-7, 4), q(11, 5)}, {5, q(1, 2)}, {0, q(-3, 7)}}) {
        const QRPair one = q0_r0_by_series(a, c, ContigOrder(1));
        EXPECT_EQ(one.q0, Poly{1});
        EXPECT_EQ(one.r0, Poly{1});
        const QRPair two = q0_r0_by_series(a, c, ContigOrder(2));
        EXPECT_EQ(two.q0, (Poly{Rational(4 - c), Rational(a - 2)}));
        EXPECT_EQ(two.r0, (Poly{2, Rational(a - 2)}));
    }
}

TEST(Q0R0BySeries, FrozenHigherOrderValues) {
    // Values from an independent exact-fraction implementation.
    const QRPair three = q0_r0_by_series(q(1, 2), q(1, 3), ContigOrder(3));
    EXPECT_EQ(three.q0, (Poly{q(139, 9), q(-37, 3), q(15, 4)}));
    EXPECT_EQ(three.r0, (Poly{6, q(-49, 6), q(15, 4)}));

    const QRPair four = q0_r0_by_series(q(-12, 19), q(-16, 9), ContigOrder(4));
    EXPECT_EQ(four.q0, (Poly{q(179200, 729), q(-26728, 81), q(211784, 1083), q(-303600, 6859)}));
    EXPECT_EQ(four.r0, (Poly{24, q(-64240, 513), q(47656, 361), q(-303600, 6859)}));
}

TEST(Q0R0BySeries, Preconditions) {
    EXPECT_THROW(q0_r0_by_series(q(1, 2), 2, ContigOrder(2)), ParameterError);
    EXPECT_THROW(q0_r0_by_series(q(1, 2), q(1, 3), ContigOrder(2), 10), ParameterError);
    EXPECT_THROW(ContigOrder(0), ParameterError);
}

TEST(Q0R0BySeries, TailVanishesAndConstantTermsMatch) {
    for (const auto& [a, c, l] : parameter_pool(200, 2024)) {
        const ContigOrder ell(l);
        auto [qs, rs] = q0_r0_series_b1(a, c, ell, l + 24);
        for (std::size_t k = l; k <= l + 24; ++k) {
            ASSERT_EQ(qs[k], 0) << "q0 tail at x^" << k << " a=" << a << " c=" << c << " l=" << l;
            ASSERT_EQ(rs[k], 0) << "r0 tail at x^" << k << " a=" << a << " c=" << c << " l=" << l;
        }
        const QRPair p = q0_r0_by_series(a, c, ell);
        EXPECT_EQ(p.r0[0], factorial(l));
        EXPECT_EQ(p.q0[0], (poch(2 - c, l) - factorial(l)) / (1 - c));
        EXPECT_LE(p.q0.degree().value_or(0), l - 1);
        EXPECT_LE(p.r0.degree().value_or(0), l - 1);
        if (!is_integer(a)) {
            EXPECT_EQ(p.q0.degree(), Degree{l - 1}) << a << " " << c << " " << l;
        }
    }
}

TEST(Q0R0GeneralB, AnchorValues) {
    EXPECT_EQ(q0_r0_general_b({q(5, 3), 1, q(2, 7)}, ContigOrder(1), 20).q0, Poly{1});
    EXPECT_EQ(q0_r0_general_b({q(5, 3), 1, q(1, 2)}, ContigOrder(2), 20).q0[0], q(7, 2));
    EXPECT_EQ(q0_r0_general_b({q(-3, 4), 2, q(9, 5)}, ContigOrder(3), 20).r0[0], 24);
}

TEST(Q0R0GeneralB, FrozenValue) {
    const QRPair p = q0_r0_general_b({q(2, 3), q(-4, 3), q(7, 20)}, ContigOrder(3), 24);
    EXPECT_EQ(p.q0, (Poly{q(-1073, 1200), q(79, 90)}));
    EXPECT_EQ(p.r0, (Poly{q(8, 27), q(-158, 135)}));
}

TEST(Q0R0GeneralB, AgreesWithBEqualsOne) {
    for (const auto& [a, c, l] : parameter_pool(60, 99)) {
        const QRPair general = q0_r0_general_b({a, 1, c}, ContigOrder(l), l + 20);
        const QRPair special = q0_r0_by_series(a, c, ContigOrder(l), l + 20);
        EXPECT_EQ(general.q0, special.q0);
        EXPECT_EQ(general.r0, special.r0);
    }
}

TEST(Q0R0GeneralB, ConstantTerms) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const Rational a = testing::random_rational(rng), b = testing::random_rational(rng);
        const Rational c = testing::random_noninteger(rng);
        const unsigned l = std::uniform_int_distribution<unsigned>(1, 5)(rng);
        const QRPair p = q0_r0_general_b({a, b, c}, ContigOrder(l), l + 20);
        EXPECT_EQ(p.q0[0], (poch(b + 1 - c, l) - poch(b, l)) / (1 - c));
        EXPECT_EQ(p.r0[0], poch(b, l));
    }
}

TEST(Q0ByReversal, Examples) {
    EXPECT_EQ(q0_by_reversal(q(1, 2), q(1, 3), ContigOrder(1)), Poly{1});
    EXPECT_EQ(q0_by_reversal(q(1, 2), q(1, 3), ContigOrder(2)), (Poly{q(11, 3), q(-3, 2)}));
    EXPECT_THROW(q0_by_reversal(3, q(1, 2), ContigOrder(2)), ParameterError);
    EXPECT_THROW(q0_by_reversal(q(1, 2), 1, ContigOrder(2)), ParameterError);
}

TEST(Q0ByReversal, MatchesSeriesForNonIntegerA) {
    std::size_t checked = 0;
    for (const auto& [a, c, l] : parameter_pool(200, 2024)) {
        if (is_integer(a)) {
            continue;
        }
        const Poly rev = q0_by_reversal(a, c, ContigOrder(l));
        EXPECT_EQ(rev, q0_r0_by_series(a, c, ContigOrder(l)).q0) << a << " " << c << " " << l;
        EXPECT_EQ(rev.degree(), Degree{l - 1});
        ++checked;
    }
    EXPECT_GT(checked, 100u);
}

TEST(EulerTransform, Examples) {
    EXPECT_EQ(euler_transform_series({q(2, 9), q(-5, 3), q(4, 7)}, 4)[0], 1);
    EXPECT_EQ(euler_transform_series({1, 1, 2}, 8), hyp_series({1, 1, 2}, 8));
    EXPECT_EQ(euler_transform_series({q(1, 2), q(1, 3), q(5, 7)}, 32), hyp_series({q(1, 2), q(1, 3), q(5, 7)}, 32));
}

TEST(EulerTransform, RandomParameters) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const HypParams p{testing::random_rational(rng), testing::random_rational(rng), testing::random_noninteger(rng)};
        EXPECT_EQ(hyp_series(p, 48), euler_transform_series(p, 48));
    }
}

TEST(ContiguityRelation, RaisesB) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const HypParams p{testing::random_rational(rng), testing::random_rational(rng), testing::random_noninteger(rng)};
        const TruncatedSeries f = hyp_series(p, 48);
        const TruncatedSeries lhs = f.euler_derivative() + p.b * f;
        EXPECT_EQ(lhs, p.b * hyp_series({p.a, Rational(p.b + 1), p.c}, 48));
    }
}

}  // namespace
}  // namespace gosper
