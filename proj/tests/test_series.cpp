#include <gtest/gtest.h>

#include "grcm/series.hpp"
#include "support.hpp"

using namespace grcm;

namespace {

Series poly(int order, std::initializer_list<Rational> c) { return Series(order, c); }

TEST(Series, DifferenceOfSquares) {
    const int N = 16;
    EXPECT_EQ(poly(N, {1, 1}) * poly(N, {1, -1}), poly(N, {1, 0, -1}));
}

TEST(Series, ProductTruncatesAtBoundary) {
    const int N = 16;
    EXPECT_TRUE((Series::t(N) * Series::monomial(N, N - 1)).is_zero());
    EXPECT_EQ(Series::t(N) * Series::monomial(N, N - 2), Series::monomial(N, N - 1));
}

TEST(Series, AdditiveInverse) {
    const int N = 16;
    EXPECT_TRUE((poly(N, {1, 1}) + poly(N, {-1, -1})).is_zero());
}

TEST(Series, MismatchedOrdersThrow) {
    try {
        (void)(Series::one(16) + Series::one(8));
        FAIL() << "expected MismatchedOrder";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::MismatchedOrder);
    }
    EXPECT_THROW((void)(Series::one(16) * Series::one(8)), Error);
}

TEST(Series, OrderBelowTwoRejected) {
    EXPECT_THROW(Series::zero(1), Error);
    EXPECT_THROW(SeriesRing(1), Error);
}

TEST(Series, DivisibleByT) {
    const int N = 16;
    EXPECT_TRUE(poly(N, {0, 1, 1}).divisible_by_t());
    EXPECT_FALSE(poly(N, {1, 1}).divisible_by_t());
    EXPECT_TRUE(Series::zero(N).divisible_by_t());
}

TEST(Series, InvertIdentity) { EXPECT_EQ(Series::one(16).invert(), Series::one(16)); }

TEST(Series, InvertGeometric) {
    const int N = 16;
    Series expect = Series::zero(N);
    for (int d = 0; d < N; ++d) expect[d] = 1;
    EXPECT_EQ(poly(N, {1, -1}).invert(), expect);
}

TEST(Series, InvertTwoPlusT) {
    // Closed form 1/(2+t) = sum (-1)^d t^d / 2^(d+1), independent of the recursion.
    const Series u = poly(3, {2, 1}).invert();
    EXPECT_EQ(u, poly(3, {Rational(1, 2), Rational(-1, 4), Rational(1, 8)}));
    EXPECT_EQ(u * poly(3, {2, 1}), Series::one(3));
    const int N = 16;
    Series closed = Series::zero(N);
    Rational p = Rational(1, 2);
    for (int d = 0; d < N; ++d, p /= -2) closed[d] = p;
    EXPECT_EQ(poly(N, {2, 1}).invert(), closed);
}

TEST(Series, InvertNonUnitThrows) {
    try {
        (void)Series::t(16).invert();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotAUnit);
    }
}

TEST(Series, ShiftDownExamples) {
    const int N = 16;
    EXPECT_EQ(Series::monomial(N, 2).shift_down(1), Series::t(N));
    EXPECT_EQ(poly(N, {0, 1, 0, 1}).shift_down(1), poly(N, {1, 0, 1}));
    try {
        (void)poly(N, {1, 1}).shift_down(1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotDivisible);
    }
}

TEST(Series, ShiftDownDropsTopCoefficients) {
    const int N = 4;
    const Series s = poly(N, {0, 1, 2, 3}).shift_down(1);
    EXPECT_EQ(s, poly(N, {1, 2, 3, 0}));
}

TEST(Series, WithOrderTruncatesAndExtends) {
    const Series s = poly(4, {1, 2, 3, 4});
    EXPECT_EQ(s.with_order(2), poly(2, {1, 2}));
    EXPECT_EQ(s.with_order(6), poly(6, {1, 2, 3, 4}));
}

TEST(Series, ToStringAndValuation) {
    EXPECT_EQ(poly(16, {1, Rational(-1, 2)}).to_string(), "1 - t/2");
    EXPECT_EQ(poly(16, {0, 0, 3}).to_string(), "3*t^2");
    EXPECT_EQ(Series::zero(16).to_string(), "0");
    EXPECT_EQ(poly(16, {0, 0, 3}).valuation(), 2);
}

TEST(Series, ParseRational) {
    EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("x"), Error);
    EXPECT_THROW(parse_rational(""), Error);
}

TEST(SeriesRing, Factories) {
    const SeriesRing R(8);
    EXPECT_EQ(R.t() * R.t(), R.monomial(2));
    EXPECT_EQ(R({1, 2}), Series(8, {1, 2}));
    EXPECT_EQ(R.one().order(), 8);
}

class SeriesProperties : public ::testing::TestWithParam<int> {};

TEST_P(SeriesProperties, UnitTimesInverseIsOne) {
    std::mt19937 rng(GetParam());
    for (int i = 0; i < 25; ++i) {
        const Series u = gen::random_unit(rng, 16);
        EXPECT_EQ(u * u.invert(), Series::one(16));
    }
}

TEST_P(SeriesProperties, ShiftRoundTripOnLowDegree) {
    std::mt19937 rng(GetParam());
    for (int d = 1; d <= 4; ++d) {
        const Series p = gen::random_series(rng, 16, 16 - d - 1);
        EXPECT_EQ(p.shift_up(d).shift_down(d), p);
        EXPECT_EQ(Series::monomial(16, d) * p.shift_up(d).shift_down(d), p.shift_up(d));
    }
}

TEST_P(SeriesProperties, DivisibilityOfSumDependsOnConstantTerms) {
    std::mt19937 rng(GetParam());
    for (int i = 0; i < 25; ++i) {
        const Series a = gen::random_series(rng, 16), b = gen::random_series(rng, 16);
        EXPECT_EQ((a + b).divisible_by_t(), a[0] + b[0] == 0);
        EXPECT_TRUE((a + (Series::constant(16, -a[0]))).divisible_by_t());
    }
}

TEST_P(SeriesProperties, RingAxioms) {
    std::mt19937 rng(GetParam());
    for (int i = 0; i < 10; ++i) {
        const Series a = gen::random_series(rng, 12), b = gen::random_series(rng, 12),
                     c = gen::random_series(rng, 12);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SeriesProperties, ::testing::Values(1, 2, 3, 4));

} // namespace
