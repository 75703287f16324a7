#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "logleg/exact_moments.hpp"
#include "logleg/legendre.hpp"
#include "logleg/oracles.hpp"

namespace logleg {

inline constexpr std::size_t kMaxExpansionOrder = 512;

namespace detail {

template <typename T>
void require_coeff_vector(std::span<const T> v, const char* name)
{
    if (v.empty())
        throw DomainError(std::string(name) + " must have at least one coefficient");
    if constexpr (std::is_floating_point_v<T>) {
        for (T c : v) {
            if (!std::isfinite(c))
                throw DomainError(std::string(name) + " contains a non-finite coefficient");
        }
    }
}

} // namespace detail

/// a^T N b = int_0^1 f g log(x) dx for f, g given by shifted Legendre
/// coefficients a, b. The shorter vector is zero-padded.
template <typename T>
[[nodiscard]] T bilinear_log_form(std::span<const T> a, std::span<const T> b,
                                  const GramMatrix<T>& gram)
{
    detail::require_coeff_vector(a, "left coefficient vector");
    detail::require_coeff_vector(b, "right coefficient vector");
    const std::size_t needed = std::max(a.size(), b.size());
    if (needed > gram.dimension()) {
        throw BoundsError("Gram matrix of dimension " + std::to_string(gram.dimension()) +
                          " is too small for coefficient vectors of length " +
                          std::to_string(needed));
    }
    T total = 0;
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (a[n] == 0)
            continue;
        T row = 0;
        for (std::size_t m = 0; m < b.size(); ++m)
            row += gram(n, m) * b[m];
        total += a[n] * row;
    }
    return total;
}

template <typename T>
[[nodiscard]] T bilinear_log_form(const std::vector<T>& a, const std::vector<T>& b,
                                  const GramMatrix<T>& gram)
{
    return bilinear_log_form(std::span<const T>(a), std::span<const T>(b), gram);
}

/// L2-optimal shifted Legendre coefficients of log(x):
/// c_n = (2n+1) N[n,0], since int_0^1 P_n(2x-1)^2 dx = 1/(2n+1).
[[nodiscard]] inline std::vector<ExactRational> log_expansion_coeffs(Order order,
                                                                     const Limits& limits = {})
{
    require_order(order, limits);
    std::vector<ExactRational> coeffs;
    coeffs.reserve(order.value() + 1);
    for (std::size_t n = 0; n <= order.value(); ++n)
        coeffs.push_back(ExactRational(2 * n + 1) * entry(Order(n), Order(0), limits));
    return coeffs;
}

struct ExpansionReport {
    Order order;
    std::vector<ExactRational> exact_coefficients;
    std::vector<double> coefficients;
    double l2_error = 0.0;
};

struct ExpansionOptions {
    std::size_t panels = kDefaultPanels;
    /// 0 selects a per-panel degree from the expansion order.
    std::size_t rule_degree = 0;
};

/// ||log - sum_n c_n P_n(2x-1)|| in L2[0,1], by graded-panel quadrature.
[[nodiscard]] inline ExpansionReport expansion_l2_error(Order order,
                                                        const ExpansionOptions& options = {})
{
    const Limits limits{kMaxExpansionOrder};
    require_order(order, limits, "expansion order");

    ExpansionReport report;
    report.order = order;
    report.exact_coefficients = log_expansion_coeffs(order, limits);
    for (const auto& c : report.exact_coefficients)
        report.coefficients.push_back(to_double(c));

    // The squared residual holds a polynomial of degree 2*order; keep each
    // panel rule above order+8 nodes, splitting panels once the degree caps.
    const std::size_t wanted = order.value() + 8;
    const std::size_t degree = options.rule_degree != 0
                                   ? options.rule_degree
                                   : std::clamp(wanted, kDefaultRuleDegree, kMaxRuleDegree);
    const std::size_t subdivisions = (wanted + degree - 1) / degree;
    const CompositeRule composite =
        composite_rule(make_panels(options.panels), gauss_legendre_rule(degree), subdivisions);

    double sum = 0.0;
    for (std::size_t i = 0; i < composite.x.size(); ++i) {
        const std::vector<double> p = eval_batch(order, composite.x[i], limits);
        double approx = 0.0;
        for (std::size_t n = 0; n < p.size(); ++n)
            approx += report.coefficients[n] * p[n];
        const double residual = std::log(composite.x[i]) - approx;
        sum += composite.w[i] * residual * residual;
    }
    report.l2_error = std::sqrt(sum);
    return report;
}

/// (n, (2n+1) N[n,n]) for n = 0..max_order.
[[nodiscard]] inline std::vector<std::pair<Order, double>> diag_scaling_table(
    Order max_order, const Limits& limits = {})
{
    require_order(max_order, limits);
    std::vector<std::pair<Order, double>> table;
    table.reserve(max_order.value() + 1);
    ExactRational partial = 0;
    for (std::size_t n = 0; n <= max_order.value(); ++n) {
        if (n > 0)
            partial += diag_sum_term(n);
        table.emplace_back(Order(n), to_double(ExactRational(-1) - 2 * partial));
    }
    return table;
}

} // namespace logleg
