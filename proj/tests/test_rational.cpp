#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "logleg/rational.hpp"

using logleg::BigInt;
using logleg::ExactRational;

namespace {

// r is the nearest double to v (ties to even) iff neither neighbour is closer.
void expect_correctly_rounded(const ExactRational& v, double r)
{
    const ExactRational err = abs(v - logleg::from_double(r));
    for (double neighbour : {std::nextafter(r, -INFINITY), std::nextafter(r, INFINITY)}) {
        const ExactRational other = abs(v - logleg::from_double(neighbour));
        ASSERT_LE(err, other) << logleg::to_fraction_string(v);
        if (err == other) {
            std::int64_t bits = 0;
            std::memcpy(&bits, &r, sizeof r);
            EXPECT_EQ(bits & 1, 0) << "tie not rounded to even for " << logleg::to_fraction_string(v);
        }
    }
}

} // namespace

TEST(Rational, ToDoubleExactlyRepresentable)
{
    EXPECT_EQ(logleg::to_double(ExactRational(-1)), -1.0);
    EXPECT_EQ(logleg::to_double(ExactRational(1, 2)), 0.5);
    EXPECT_EQ(logleg::to_double(ExactRational(0)), 0.0);
    EXPECT_EQ(logleg::to_double(ExactRational(BigInt(3), BigInt(1) << 70)), std::ldexp(3.0, -70));
}

TEST(Rational, ToDoubleMatchesHardwareDivisionOnSmallOperands)
{
    // Both operands are exact doubles, so IEEE division is correctly rounded.
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(-(std::int64_t{1} << 52), std::int64_t{1} << 52);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t p = dist(rng);
        std::int64_t q = dist(rng);
        if (q == 0)
            q = 1;
        if (q < 0) {
            p = -p;
            q = -q;
        }
        EXPECT_EQ(logleg::to_double(ExactRational(BigInt(p), BigInt(q))),
                  static_cast<double>(p) / static_cast<double>(q));
    }
}

TEST(Rational, ToDoubleIsNearestForLargeOperands)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        BigInt p = 0;
        BigInt q = 0;
        const int limbs_p = 1 + static_cast<int>(rng() % 6);
        const int limbs_q = 1 + static_cast<int>(rng() % 6);
        for (int k = 0; k < limbs_p; ++k)
            p = (p << 64) + rng();
        for (int k = 0; k < limbs_q; ++k)
            q = (q << 64) + rng();
        if (q == 0)
            q = 1;
        const ExactRational v(rng() % 2 ? p : BigInt(-p), q);
        expect_correctly_rounded(v, logleg::to_double(v));
    }
}

TEST(Rational, ToDoubleHalfwayCasesRoundToEven)
{
    const ExactRational one_plus_half_ulp = ExactRational(1) + ExactRational(BigInt(1), BigInt(1) << 53);
    EXPECT_EQ(logleg::to_double(one_plus_half_ulp), 1.0);
    const ExactRational three_half_ulps = ExactRational(1) + ExactRational(BigInt(3), BigInt(1) << 53);
    EXPECT_EQ(logleg::to_double(three_half_ulps), 1.0 + std::ldexp(1.0, -51));
    const ExactRational above_half =
        one_plus_half_ulp + ExactRational(BigInt(1), BigInt(1) << 200);
    EXPECT_EQ(logleg::to_double(above_half), 1.0 + std::ldexp(1.0, -52));
}

TEST(Rational, EntryValueRounding)
{
    EXPECT_EQ(logleg::to_double(ExactRational(-41, 150)), -41.0 / 150.0);
    EXPECT_EQ(logleg::to_shortest_string(logleg::to_double(ExactRational(-41, 150))),
              "-0.2733333333333333");
}

TEST(Rational, FractionStringAlwaysCarriesDenominator)
{
    EXPECT_EQ(logleg::to_fraction_string(ExactRational(-1)), "-1/1");
    EXPECT_EQ(logleg::to_fraction_string(ExactRational(-2, 8)), "-1/4");
}

TEST(Rational, ParseFraction)
{
    EXPECT_EQ(logleg::parse_fraction("1/4"), ExactRational(1, 4));
    EXPECT_EQ(logleg::parse_fraction("-6/8"), ExactRational(-3, 4));
    EXPECT_EQ(logleg::parse_fraction("7"), ExactRational(7));
    EXPECT_EQ(logleg::parse_fraction("+7"), ExactRational(7));
    EXPECT_THROW((void)logleg::parse_fraction("1/0"), logleg::DomainError);
    EXPECT_THROW((void)logleg::parse_fraction("1/-2"), logleg::DomainError);
    EXPECT_THROW((void)logleg::parse_fraction("x"), logleg::DomainError);
    EXPECT_THROW((void)logleg::parse_fraction(""), logleg::DomainError);
    EXPECT_THROW((void)logleg::parse_fraction("0.5"), logleg::DomainError);
}

TEST(Rational, FractionStringRoundTrips)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const ExactRational v(BigInt(static_cast<std::int64_t>(rng())) * rng(),
                              BigInt(rng() | 1) * (rng() | 1));
        EXPECT_EQ(logleg::parse_fraction(logleg::to_fraction_string(v)), v);
    }
}
