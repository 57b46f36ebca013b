#include "gosper/operator.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace gosper {
namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

const Poly kX = Poly::x();
const Poly kOneMinusX{1, -1};
const Poly kXOneMinusX{0, 1, -1};

DiffOp x_d() { return DiffOp({RatFunc(), RatFunc(kX)}); }
DiffOp d() { return DiffOp::term(RatFunc(Rational(1)), 1); }

TEST(BuildL, Examples) {
    EXPECT_EQ(build_L({0, 0, 1}), DiffOp({RatFunc(), RatFunc(Poly{1}, kX), RatFunc(Rational(1))}));
    const DiffOp L = build_L({3, 1, q(3, 2)});
    EXPECT_EQ(L[1], RatFunc(Poly{q(3, 2), -5}, kXOneMinusX));
    EXPECT_EQ(L[0], RatFunc(Poly{-3}, kXOneMinusX));
    EXPECT_EQ(L[2], RatFunc(Rational(1)));
    EXPECT_EQ(build_L({q(-2, 7), q(9, 4), q(1, 3)}).order(), 2u);
}

TEST(OreMul, CommutationRule) {
    EXPECT_EQ(ore_mul(d(), DiffOp(RatFunc(kX))), DiffOp({RatFunc(Rational(1)), RatFunc(kX)}));
    EXPECT_EQ(ore_mul(x_d(), x_d()), DiffOp({RatFunc(), RatFunc(kX), RatFunc(Poly{0, 0, 1})}));
    const DiffOp A = build_L({q(1, 2), q(2, 3), q(3, 4)});
    EXPECT_EQ(ore_mul(A, DiffOp(RatFunc(Rational(1)))), A);
    EXPECT_EQ(ore_mul(DiffOp(RatFunc(Rational(1))), A), A);
    EXPECT_TRUE(ore_mul(A, DiffOp()).is_zero());
}

TEST(OreMul, DerivativeOfRationalCoefficient) {
    // d * 1/(1-x) = 1/(1-x) d + 1/(1-x)^2
    const RatFunc f(Poly{1}, kOneMinusX);
    const DiffOp prod = ore_mul(d(), DiffOp(f));
    EXPECT_EQ(prod[1], f);
    EXPECT_EQ(prod[0], RatFunc(Poly{1}, Poly{1, -2, 1}));
}

TEST(OreMul, Associative) {
    std::mt19937_64 rng(21);
    auto rand_op = [&] {
        std::vector<RatFunc> v(std::uniform_int_distribution<int>(1, 3)(rng));
        for (auto& f : v) {
            Poly den = testing::random_poly(rng, 1);
            if (den.is_zero()) {
                den = Poly{1};
            }
            f = RatFunc(testing::random_poly(rng, 2), den);
        }
        return DiffOp(std::move(v));
    };
    for (int trial = 0; trial < 15; ++trial) {
        const DiffOp A = rand_op(), B = rand_op(), C = rand_op();
        EXPECT_EQ(ore_mul(ore_mul(A, B), C), ore_mul(A, ore_mul(B, C)));
    }
}

TEST(BuildH, Examples) {
    EXPECT_EQ(build_H(1, ContigOrder(1)), DiffOp({RatFunc(Rational(1)), RatFunc(kX)}));
    EXPECT_EQ(build_H(1, ContigOrder(2)), DiffOp({RatFunc(Rational(2)), RatFunc(Poly{0, 4}), RatFunc(Poly{0, 0, 1})}));
    EXPECT_EQ(build_H(q(-5, 3), ContigOrder(1)), DiffOp({RatFunc(q(-5, 3)), RatFunc(kX)}));
}

TEST(RightReduce, OrderOneNeedsNoDivision) {
    const ReductionData red = right_reduce(build_H(1, ContigOrder(1)), build_L({q(2, 5), 1, q(1, 3)}));
    EXPECT_TRUE(red.quotient.is_zero());
    EXPECT_EQ(red.q, RatFunc(kX));
    EXPECT_EQ(red.r, RatFunc(Rational(1)));
}

TEST(RightReduce, OrderTwoClosedForm) {
    for (const auto& [a, c] : std::vector<std::pair<Rational, Rational>>{{3, q(3, 2)}, {q(1, 2), q(1, 3)}, {2, q(7, 5)}}) {
        const DiffOp L = build_L({a, 1, c});
        const ReductionData red = right_reduce(build_H(1, ContigOrder(2)), L);
        EXPECT_EQ(red.quotient, DiffOp(RatFunc(Poly{0, 0, 1})));
        EXPECT_EQ(red.q, RatFunc(kX * Poly{Rational(4 - c), Rational(a - 2)}, kOneMinusX));
        EXPECT_EQ(red.r, RatFunc(Poly{2, Rational(a - 2)}, kOneMinusX));
    }
}

TEST(RightReduce, RejectsNonMonicDivisor) {
    EXPECT_THROW(right_reduce(build_H(1, ContigOrder(3)), x_d()), ParameterError);
}

TEST(RightReduce, ReconstructsDividend) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const Rational a = testing::random_rational(rng), c = testing::random_noninteger(rng);
        const unsigned l = std::uniform_int_distribution<unsigned>(1, 6)(rng);
        const DiffOp H = build_H(1, ContigOrder(l));
        const DiffOp L = build_L({a, 1, c});
        const ReductionData red = right_reduce(H, L);
        EXPECT_EQ(reconstruct(red, L), H);
        EXPECT_LE(red.quotient.order().value_or(0), l >= 2 ? l - 2 : 0);
    }
}

TEST(FactorRemainder, Examples) {
    const Rational a = q(7, 3), c = q(2, 5);
    const auto one = factor_remainder(RatFunc(kX), RatFunc(Rational(1)), ContigOrder(1));
    EXPECT_EQ(one.q0, Poly{1});
    EXPECT_EQ(one.r0, Poly{1});

    const ReductionData red = right_reduce(build_H(1, ContigOrder(2)), build_L({a, 1, c}));
    const auto two = factor_remainder(red.q, red.r, ContigOrder(2));
    EXPECT_EQ(two.q0, (Poly{Rational(4 - c), Rational(a - 2)}));
    EXPECT_EQ(two.r0, (Poly{2, Rational(a - 2)}));
    EXPECT_TRUE(two.generic_shape(ContigOrder(2)));
}

TEST(FactorRemainder, DegenerateDegreeIsReported) {
    const Rational c = q(2, 5);
    const ReductionData red = right_reduce(build_H(1, ContigOrder(2)), build_L({2, 1, c}));
    const auto fr = factor_remainder(red.q, red.r, ContigOrder(2));
    EXPECT_EQ(fr.q0, Poly{Rational(4 - c)});
    EXPECT_EQ(fr.g, Degree{0});
    EXPECT_FALSE(fr.generic_shape(ContigOrder(2)));
    // q = x (1-x)^{-1} (4 - c): shape exponents stay put
    EXPECT_EQ(fr.v0, 1);
    EXPECT_EQ(fr.v1, -1);
}

TEST(FactorRemainder, RootAtOneRaisesExponent) {
    // a = 0, l = 2: r0 = 2 - 2x = 2(1-x), so w1 rises from -1 to 0.
    const ReductionData red = right_reduce(build_H(1, ContigOrder(2)), build_L({0, 1, q(1, 3)}));
    const auto fr = factor_remainder(red.q, red.r, ContigOrder(2));
    EXPECT_EQ(fr.r0, (Poly{2, -2}));
    EXPECT_EQ(fr.w1, 0);
    EXPECT_EQ(fr.r0_core, Poly{2});
    EXPECT_EQ(fr.h, Degree{0});
}

TEST(FactorRemainder, RejectsForeignDenominator) {
    const RatFunc bad(Poly{1}, Poly{2, 1});
    EXPECT_THROW(factor_remainder(bad, RatFunc(Rational(1)), ContigOrder(2)), InconsistencyError);
}

TEST(OperatorOracle, MatchesSeriesMethod) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const Rational a = testing::random_rational(rng), c = testing::random_noninteger(rng);
        const unsigned l = std::uniform_int_distribution<unsigned>(1, 6)(rng);
        const ReductionData red = right_reduce(build_H(1, ContigOrder(l)), build_L({a, 1, c}));
        const auto fr = factor_remainder(red.q, red.r, ContigOrder(l));
        const QRPair series = q0_r0_by_series(a, c, ContigOrder(l));
        EXPECT_EQ(fr.q0, series.q0) << a << " " << c << " " << l;
        EXPECT_EQ(fr.r0, series.r0) << a << " " << c << " " << l;
        const GenericityFlags flags = genericity_flags({a, 1, c}, ContigOrder(l));
        if (flags.all() && !is_integer(a)) {
            EXPECT_TRUE(fr.generic_shape(ContigOrder(l)));
        }
        // Degeneracies only lower degrees or raise the x and (1-x) exponents.
        EXPECT_GE(fr.v0, 1);
        EXPECT_GE(fr.v1, 1 - static_cast<long>(l));
        EXPECT_GE(fr.w0, 0);
        EXPECT_GE(fr.w1, 1 - static_cast<long>(l));
    }
}

TEST(OperatorOracle, MatchesGeneralBSeries) {
    std::mt19937_64 rng(78);
    for (int trial = 0; trial < 30; ++trial) {
        const Rational a = testing::random_rational(rng), b = testing::random_rational(rng);
        const Rational c = testing::random_noninteger(rng);
        const unsigned l = std::uniform_int_distribution<unsigned>(1, 4)(rng);
        const ReductionData red = right_reduce(build_H(b, ContigOrder(l)), build_L({a, b, c}));
        const auto fr = factor_remainder(red.q, red.r, ContigOrder(l));
        const QRPair series = q0_r0_general_b({a, b, c}, ContigOrder(l), l + 20);
        EXPECT_EQ(fr.q0, series.q0) << a << " " << b << " " << c << " " << l;
        EXPECT_EQ(fr.r0, series.r0) << a << " " << b << " " << c << " " << l;
    }
}

TEST(ApplyToGenSeries, Examples) {
    const Rational b = q(5, 4), c = q(2, 7);
    const DiffOp op = DiffOp({RatFunc(b), RatFunc(kX)});
    const GenSeries power{Rational(1 - c), 0, TruncatedSeries(Poly{1}, 8)};
    const GenSeries out = apply_to_genseries(op, power, 8);
    EXPECT_TRUE(agree(out, GenSeries{Rational(1 - c), 0, TruncatedSeries(Poly{Rational(1 - c + b)}, 8)}));

    const GenSeries one{0, 0, TruncatedSeries(Poly{1}, 8)};
    EXPECT_TRUE(agree(apply_to_genseries(op, one, 8), GenSeries{0, 0, TruncatedSeries(Poly{b}, 8)}));
}

TEST(ApplyToGenSeries, SecondSolutionContiguity) {
    // (x d + b) x^{1-c}(1-x)^{c-a-b} F(1-a,1-b,2-c) = (b+1-c) x^{1-c}(1-x)^{c-a-b-1} F(1-a,-b,2-c)
    const Rational a = q(1, 2), b = 1, c = q(1, 3);
    const std::size_t N = 32;
    const GenSeries lhs_in{Rational(1 - c), Rational(c - a - b), hyp_series({1 - a, 1 - b, 2 - c}, N)};
    const GenSeries lhs = apply_to_genseries(build_H(b, ContigOrder(1)), lhs_in, N);
    const GenSeries rhs{Rational(1 - c), Rational(c - a - b - 1),
                        Rational(b + 1 - c) * hyp_series({1 - a, Rational(-b), 2 - c}, N)};
    EXPECT_GE(lhs.order(), N);
    EXPECT_TRUE(agree(lhs, rhs));
}

TEST(ApplyToGenSeries, RejectsUnsupportedDenominators) {
    const DiffOp op({RatFunc(Poly{1}, Poly{1, 1})});
    EXPECT_THROW(apply_to_genseries(op, GenSeries{0, 0, TruncatedSeries(Poly{1}, 4)}, 4), ParameterError);
}

TEST(ApplyToGenSeries, FirstSolutionAction) {
    std::mt19937_64 rng(12);
    const std::size_t N = 48;
    for (int trial = 0; trial < 20; ++trial) {
        const Rational a = testing::random_rational(rng), c = testing::random_noninteger(rng);
        const unsigned l = std::uniform_int_distribution<unsigned>(1, 6)(rng);
        const GenSeries y1{0, 0, hyp_series({a, 1, c}, N)};
        const GenSeries out = apply_to_genseries(build_H(1, ContigOrder(l)), y1, N);
        const GenSeries expected{0, 0, factorial(l) * hyp_series({a, Rational(1 + l), c}, N)};
        EXPECT_GE(out.order() + static_cast<std::size_t>(l), N);
        EXPECT_TRUE(agree(out, expected));
    }
}

TEST(ApplyToGenSeries, ReducedOperatorMatchesDirectActionOnY2) {
    // H1(l) y2 = (2-c,l) y2 (1-x)^{-l} F(1-a,-l,2-c)
    std::mt19937_64 rng(13);
    const std::size_t N = 48;
    for (int trial = 0; trial < 20; ++trial) {
        const Rational a = testing::random_rational(rng), c = testing::random_noninteger(rng);
        const unsigned l = std::uniform_int_distribution<unsigned>(1, 6)(rng);
        const GenSeries y2{Rational(1 - c), Rational(c - a - 1), TruncatedSeries(Poly{1}, N)};
        const GenSeries out = apply_to_genseries(build_H(1, ContigOrder(l)), y2, N);
        const GenSeries expected{Rational(1 - c), Rational(c - a - 1 - l),
                                 poch(2 - c, l) * hyp_series({1 - a, Rational(-static_cast<long>(l)), 2 - c}, N)};
        EXPECT_TRUE(agree(out, expected)) << a << " " << c << " " << l;
    }
}

TEST(GenericityFlags, Examples) {
    EXPECT_FALSE(genericity_flags({3, 1, q(3, 2)}, ContigOrder(1)).a1);
    const auto e1 = genericity_flags({q(1, 3), 1, q(1, 2)}, ContigOrder(2));
    EXPECT_TRUE(e1.e1);
    EXPECT_EQ(poch(Rational(1), 2) - poch(Rational(q(3, 2)), 2), q(-7, 4));
    EXPECT_TRUE(genericity_flags({q(1, 3), 1, q(1, 2)}, ContigOrder(2)).e2);
}

TEST(GenericityFlags, DivisionByZeroAnnotation) {
    const auto at_zero = genericity_flags({0, 1, q(1, 2)}, ContigOrder(1));
    EXPECT_FALSE(at_zero.e2);
    ASSERT_TRUE(at_zero.e2_note.has_value());
    const auto at_c = genericity_flags({q(1, 3), q(-1, 2), q(1, 2)}, ContigOrder(1));  // c - b - 1 = 0
    EXPECT_FALSE(at_c.e2);
    EXPECT_TRUE(at_c.e2_note.has_value());
}

TEST(GenericityFlags, GenericPoint) {
    const auto f = genericity_flags({q(1, 3), q(2, 7), q(3, 11)}, ContigOrder(1));
    EXPECT_TRUE(f.all());
}

}  // namespace
}  // namespace gosper
