#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "logleg/order.hpp"
#include "logleg/rational.hpp"

namespace logleg {

/// Next value of the three-term recurrence
///   (k+1) P_{k+1}(t) = (2k+1) t P_k(t) - k P_{k-1}(t).
template <typename T>
[[nodiscard]] constexpr T next_legendre(std::size_t k, T t, T pk, T pkm1)
{
    return (T(2 * k + 1) * t * pk - T(k) * pkm1) / T(k + 1);
}

/// P_n(t) on the native interval; valid for any real t.
template <typename T>
[[nodiscard]] T legendre_native(std::size_t n, T t)
{
    if (n == 0)
        return T(1);
    T prev = T(1);
    T curr = t;
    for (std::size_t k = 1; k < n; ++k) {
        T next = next_legendre(k, t, curr, prev);
        prev = curr;
        curr = next;
    }
    return curr;
}

/// P_n(t) and P_n'(t), the latter from (t^2 - 1) P_n' = n (t P_n - P_{n-1}).
/// Only valid for |t| != 1 when n >= 1.
template <typename T>
[[nodiscard]] std::pair<T, T> legendre_native_with_derivative(std::size_t n, T t)
{
    if (n == 0)
        return {T(1), T(0)};
    T prev = T(1);
    T curr = t;
    for (std::size_t k = 1; k < n; ++k) {
        T next = next_legendre(k, t, curr, prev);
        prev = curr;
        curr = next;
    }
    const T derivative = T(n) * (t * curr - prev) / (t * t - T(1));
    return {curr, derivative};
}

/// P_n(2x-1). Evaluation outside [0,1] is permitted.
[[nodiscard]] inline double eval_shifted(Order n, double x, const Limits& limits = {})
{
    require_order(n, limits);
    return legendre_native(n.value(), 2.0 * x - 1.0);
}

/// [P_0(2x-1), ..., P_{n_max}(2x-1)] from a single sweep; element n is
/// bit-identical to eval_shifted(n, x).
[[nodiscard]] inline std::vector<double> eval_batch(Order n_max, double x,
                                                    const Limits& limits = {})
{
    require_order(n_max, limits);
    const double t = 2.0 * x - 1.0;
    std::vector<double> values(n_max.value() + 1);
    values[0] = 1.0;
    if (n_max.value() >= 1)
        values[1] = t;
    for (std::size_t k = 1; k < n_max.value(); ++k)
        values[k + 1] = next_legendre(k, t, values[k], values[k - 1]);
    return values;
}

/// Integer coefficients of P_n(2x-1) in the monomial basis; coeffs[k]
/// multiplies x^k.
struct MonomialPoly {
    std::vector<BigInt> coeffs;

    [[nodiscard]] Order degree() const { return Order(coeffs.size() - 1); }

    [[nodiscard]] ExactRational evaluate(const ExactRational& x) const
    {
        ExactRational acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            acc = acc * x + ExactRational(*it);
        return acc;
    }

    friend bool operator==(const MonomialPoly&, const MonomialPoly&) = default;
};

namespace detail {

// (k+1) Q_{k+1} = (2k+1)(2x-1) Q_k - k Q_{k-1}; the division is exact.
inline MonomialPoly next_shifted_coeffs(std::size_t k, const MonomialPoly& qk,
                                        const MonomialPoly& qkm1)
{
    std::vector<BigInt> next(qk.coeffs.size() + 1);
    const BigInt a = 2 * k + 1;
    for (std::size_t i = 0; i < qk.coeffs.size(); ++i) {
        next[i] -= a * qk.coeffs[i];
        next[i + 1] += 2 * a * qk.coeffs[i];
    }
    for (std::size_t i = 0; i < qkm1.coeffs.size(); ++i)
        next[i] -= BigInt(k) * qkm1.coeffs[i];
    for (auto& c : next)
        c /= (k + 1);
    return MonomialPoly{std::move(next)};
}

} // namespace detail

/// Exact monomial coefficients of P_0(2x-1), ..., P_{n_max}(2x-1).
[[nodiscard]] inline std::vector<MonomialPoly> coeffs_exact_table(Order n_max,
                                                                  const Limits& limits = {})
{
    require_order(n_max, limits);
    std::vector<MonomialPoly> table;
    table.reserve(n_max.value() + 1);
    table.push_back(MonomialPoly{{BigInt(1)}});
    if (n_max.value() >= 1)
        table.push_back(MonomialPoly{{BigInt(-1), BigInt(2)}});
    for (std::size_t k = 1; k < n_max.value(); ++k)
        table.push_back(detail::next_shifted_coeffs(k, table[k], table[k - 1]));
    return table;
}

[[nodiscard]] inline MonomialPoly coeffs_exact(Order n, const Limits& limits = {})
{
    auto table = coeffs_exact_table(n, limits);
    return std::move(table.back());
}

} // namespace logleg
