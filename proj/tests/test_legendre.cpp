#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "logleg/legendre.hpp"

using logleg::BigInt;
using logleg::ExactRational;
using logleg::MonomialPoly;
using logleg::Order;

namespace {

BigInt binomial(unsigned n, unsigned k)
{
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return result;
}

BigInt factorial(unsigned n)
{
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i)
        result *= i;
    return result;
}

// Explicit form P_n(2x-1) = sum_k (-1)^(n+k) C(n,k) C(n+k,k) x^k, independent
// of the recurrence.
MonomialPoly explicit_shifted(unsigned n)
{
    MonomialPoly p;
    for (unsigned k = 0; k <= n; ++k) {
        BigInt c = binomial(n, k) * binomial(n + k, k);
        p.coeffs.push_back((n + k) % 2 == 0 ? c : BigInt(-c));
    }
    return p;
}

MonomialPoly shifted_x(const MonomialPoly& p)
{
    // (2x - 1) * p
    MonomialPoly out{std::vector<BigInt>(p.coeffs.size() + 1)};
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        out.coeffs[i] -= p.coeffs[i];
        out.coeffs[i + 1] += 2 * p.coeffs[i];
    }
    return out;
}

MonomialPoly scaled(const MonomialPoly& p, const BigInt& s)
{
    MonomialPoly out = p;
    for (auto& c : out.coeffs)
        c *= s;
    return out;
}

MonomialPoly add(const MonomialPoly& a, const MonomialPoly& b)
{
    MonomialPoly out{std::vector<BigInt>(std::max(a.coeffs.size(), b.coeffs.size()))};
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        out.coeffs[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
        out.coeffs[i] += b.coeffs[i];
    return out;
}

} // namespace

TEST(Legendre, EvalShiftedEndpointsAndMidpoint)
{
    EXPECT_EQ(logleg::eval_shifted(Order(5), 1.0), 1.0);
    EXPECT_EQ(logleg::eval_shifted(Order(5), 0.0), -1.0);
    EXPECT_EQ(logleg::eval_shifted(Order(2), 0.5), -0.5);
}

TEST(Legendre, EvalBatchExamples)
{
    EXPECT_EQ(logleg::eval_batch(Order(2), 1.0), (std::vector<double>{1, 1, 1}));
    EXPECT_EQ(logleg::eval_batch(Order(2), 0.0), (std::vector<double>{1, -1, 1}));
    EXPECT_EQ(logleg::eval_batch(Order(2), 0.5), (std::vector<double>{1, 0, -0.5}));
}

TEST(Legendre, EvalBatchBitIdenticalToSingleEvaluation)
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> dist(-0.25, 1.25);
    for (int trial = 0; trial < 50; ++trial) {
        const double x = dist(rng);
        const auto batch = logleg::eval_batch(Order(200), x);
        for (std::size_t n = 0; n <= 200; ++n)
            ASSERT_EQ(batch[n], logleg::eval_shifted(Order(n), x)) << "n=" << n << " x=" << x;
    }
}

TEST(Legendre, OrderCeilingIsEnforced)
{
    EXPECT_THROW((void)logleg::eval_shifted(Order(257), 0.5), logleg::BoundsError);
    EXPECT_THROW((void)logleg::eval_batch(Order(257), 0.5), logleg::BoundsError);
    EXPECT_THROW((void)logleg::coeffs_exact(Order(257)), logleg::BoundsError);
    EXPECT_NO_THROW((void)logleg::eval_shifted(Order(300), 0.5, logleg::Limits{300}));
    EXPECT_NO_THROW((void)logleg::coeffs_exact(Order(256)));
}

TEST(Legendre, CoefficientExamples)
{
    EXPECT_EQ(logleg::coeffs_exact(Order(0)).coeffs, (std::vector<BigInt>{1}));
    EXPECT_EQ(logleg::coeffs_exact(Order(1)).coeffs, (std::vector<BigInt>{-1, 2}));
    EXPECT_EQ(logleg::coeffs_exact(Order(2)).coeffs, (std::vector<BigInt>{1, -6, 6}));
}

TEST(Legendre, CoefficientsMatchExplicitBinomialForm)
{
    const auto table = logleg::coeffs_exact_table(Order(80));
    for (unsigned n = 0; n <= 80; ++n)
        ASSERT_EQ(table[n], explicit_shifted(n)) << "n=" << n;
}

TEST(Legendre, MonomialPolyInvariants)
{
    const auto table = logleg::coeffs_exact_table(Order(256));
    for (std::size_t n = 0; n < table.size(); ++n) {
        const auto& p = table[n];
        ASSERT_EQ(p.coeffs.size(), n + 1);
        ASSERT_EQ(p.degree(), Order(n));
        if (n >= 1) {
            ASSERT_NE(p.coeffs.back(), 0);
        }
        BigInt sum = 0;
        for (const auto& c : p.coeffs)
            sum += c;
        ASSERT_EQ(sum, 1) << "P_n(1) for n=" << n;
        ASSERT_EQ(p.coeffs.front(), n % 2 == 0 ? 1 : -1) << "P_n(-1) for n=" << n;
    }
}

TEST(Legendre, LeadingCoefficientIsCentralBinomial)
{
    for (unsigned n = 0; n <= 30; ++n) {
        const BigInt expected = factorial(2 * n) / (factorial(n) * factorial(n));
        EXPECT_EQ(logleg::coeffs_exact(Order(n)).coeffs.back(), expected) << "n=" << n;
    }
}

TEST(Legendre, HornerOnExactCoefficientsAgreesWithRecurrence)
{
    const auto table = logleg::coeffs_exact_table(Order(64));
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint64_t den = 1 + rng() % 1000;
        const std::uint64_t num = rng() % (den + 1);
        const ExactRational x(num, den);
        const double xf = static_cast<double>(num) / static_cast<double>(den);
        for (std::size_t n = 0; n <= 64; ++n) {
            const ExactRational exact = table[n].evaluate(x);
            // Rational path: the recurrence in exact arithmetic.
            ASSERT_EQ(exact, logleg::legendre_native(n, ExactRational(2) * x - 1));
            const double reference = logleg::to_double(exact);
            const double value = logleg::eval_shifted(Order(n), xf);
            // Absolute floor covers values near a root, where relative error is unbounded.
            ASSERT_LE(std::abs(value - reference), 1e-13 * std::abs(reference) + 1e-13)
                << "n=" << n << " x=" << xf;
        }
    }
}

TEST(Legendre, BoundedByOneOnUnitInterval)
{
    for (int i = 0; i < 1000; ++i) {
        const double x = i / 999.0;
        const auto values = logleg::eval_batch(Order(128), x);
        for (double v : values)
            ASSERT_LE(std::abs(v), 1.0 + 1e-12) << "x=" << x;
    }
}

TEST(Legendre, RecurrenceIdentityMultiplyByArgument)
{
    // (2n+1)(2x-1) P_n = (n+1) P_{n+1} + n P_{n-1}
    const auto t = logleg::coeffs_exact_table(Order(65));
    for (unsigned n = 1; n <= 64; ++n) {
        const auto lhs = scaled(shifted_x(t[n]), 2 * n + 1);
        const auto rhs = add(scaled(t[n + 1], n + 1), scaled(t[n - 1], n));
        ASSERT_EQ(lhs, rhs) << "n=" << n;
    }
}

TEST(Legendre, RecurrenceIdentityRaiseOrder)
{
    // m P_m = (2m-1)(2x-1) P_{m-1} - (m-1) P_{m-2}
    const auto t = logleg::coeffs_exact_table(Order(64));
    for (unsigned m = 2; m <= 64; ++m) {
        const auto lhs = scaled(t[m], m);
        const auto rhs = add(scaled(shifted_x(t[m - 1]), 2 * m - 1), scaled(t[m - 2], -BigInt(m - 1)));
        ASSERT_EQ(lhs, rhs) << "m=" << m;
    }
}

TEST(Legendre, DerivativeMatchesExactCoefficients)
{
    const auto p = logleg::coeffs_exact(Order(9));
    // d/dt P(t) = d/dx P_n(2x-1) / 2 at x = (t+1)/2.
    for (double t : {-0.7, -0.1, 0.3, 0.9}) {
        const ExactRational x = (logleg::from_double(t) + 1) / 2;
        ExactRational dx = 0;
        for (std::size_t k = p.coeffs.size() - 1; k >= 1; --k)
            dx = dx * x + ExactRational(p.coeffs[k] * k);
        const double expected = logleg::to_double(dx / 2);
        const auto [value, derivative] = logleg::legendre_native_with_derivative(9, t);
        EXPECT_EQ(value, logleg::legendre_native(9, t));
        EXPECT_NEAR(derivative, expected, 1e-13 * std::abs(expected));
    }
}
