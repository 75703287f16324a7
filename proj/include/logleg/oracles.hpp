#pragma once

// Independent ground truth for the log-weighted Gram entries. Nothing here
// may depend on the closed forms in exact_moments.hpp.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "logleg/legendre.hpp"
#include "logleg/order.hpp"
#include "logleg/rational.hpp"

namespace logleg {

inline constexpr std::size_t kExactOracleCap = 64;
inline constexpr std::size_t kMaxRuleDegree = 128;
inline constexpr std::size_t kDefaultPanels = 64;
inline constexpr std::size_t kDefaultRuleDegree = 32;

/// int_0^1 x^k log(x) dx = -1/(k+1)^2.
[[nodiscard]] inline ExactRational monomial_log_moment(std::size_t k)
{
    const BigInt d = BigInt(k) + 1;
    return ExactRational(BigInt(-1), d * d);
}

/// Expands P_n(2x-1) P_m(2x-1) into monomials and integrates term by term
/// against log(x).
[[nodiscard]] inline ExactRational exact_entry_oracle(Order n, Order m)
{
    const Limits cap{kExactOracleCap};
    require_order(n, cap, "exact oracle order");
    require_order(m, cap, "exact oracle order");

    const auto table = coeffs_exact_table(std::max(n, m), cap);
    const auto& a = table[n.value()].coeffs;
    const auto& b = table[m.value()].coeffs;

    std::vector<BigInt> product(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j)
            product[i + j] += a[i] * b[j];
    }

    ExactRational sum = 0;
    for (std::size_t k = 0; k < product.size(); ++k)
        sum += ExactRational(product[k]) * monomial_log_moment(k);
    return sum;
}

/// Gauss-Legendre rule on [-1, 1].
struct QuadratureRule {
    std::size_t degree = 0;
    std::vector<double> nodes;   // strictly increasing
    std::vector<double> weights;
};

/// Nodes by Newton iteration on the recurrence, mirrored so the rule is
/// exactly symmetric.
[[nodiscard]] inline QuadratureRule gauss_legendre_rule(std::size_t degree)
{
    if (degree < 1 || degree > kMaxRuleDegree) {
        throw BoundsError("quadrature degree must lie in [1, " + std::to_string(kMaxRuleDegree) +
                          "], got " + std::to_string(degree));
    }
    QuadratureRule rule;
    rule.degree = degree;
    rule.nodes.assign(degree, 0.0);
    rule.weights.assign(degree, 0.0);

    const std::size_t half = (degree + 1) / 2;
    for (std::size_t i = 1; i <= half; ++i) {
        double t = std::cos(std::numbers::pi * (static_cast<double>(i) - 0.25) /
                            (static_cast<double>(degree) + 0.5));
        bool converged = false;
        for (int step = 0; step < 100; ++step) {
            const auto [p, dp] = legendre_native_with_derivative(degree, t);
            const double delta = p / dp;
            t -= delta;
            if (std::abs(delta) <= 1e-15) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            throw NumericalError("Newton iteration for Gauss-Legendre node " + std::to_string(i) +
                                 " of degree " + std::to_string(degree) + " did not converge");
        }
        // Root i counts down from the right end; odd degrees have a root at 0.
        const std::size_t right = degree - i;
        const std::size_t left = i - 1;
        if (left == right)
            t = 0.0;
        const double dp = legendre_native_with_derivative(degree, t).second;
        const double w = 2.0 / ((1.0 - t * t) * dp * dp);
        if (left == right) {
            rule.nodes[left] = 0.0;
            rule.weights[left] = w;
        } else {
            rule.nodes[right] = t;
            rule.nodes[left] = -t;
            rule.weights[right] = w;
            rule.weights[left] = w;
        }
    }
    return rule;
}

/// Dyadic breakpoints 1 = b_0 > b_1 > ... > b_K = 2^-K accumulating at 0.
struct PanelDecomposition {
    std::vector<double> breakpoints;

    [[nodiscard]] std::size_t num_panels() const { return breakpoints.size() - 1; }
    [[nodiscard]] double truncation_point() const { return breakpoints.back(); }
};

[[nodiscard]] inline PanelDecomposition make_panels(std::size_t num_panels = kDefaultPanels)
{
    if (num_panels < 1 || num_panels > 1000)
        throw BoundsError("panel count must lie in [1, 1000], got " + std::to_string(num_panels));
    PanelDecomposition panels;
    panels.breakpoints.reserve(num_panels + 1);
    for (std::size_t j = 0; j <= num_panels; ++j)
        panels.breakpoints.push_back(std::ldexp(1.0, -static_cast<int>(j)));
    return panels;
}

/// Composite rule on [b_K, 1]: the base rule mapped onto every panel, each
/// panel optionally split into `subdivisions` equal pieces.
struct CompositeRule {
    std::vector<double> x;
    std::vector<double> w;
};

[[nodiscard]] inline CompositeRule composite_rule(const PanelDecomposition& panels,
                                                  const QuadratureRule& rule,
                                                  std::size_t subdivisions = 1)
{
    CompositeRule out;
    out.x.reserve(panels.num_panels() * subdivisions * rule.degree);
    out.w.reserve(out.x.capacity());
    for (std::size_t j = 0; j < panels.num_panels(); ++j) {
        const double hi = panels.breakpoints[j];
        const double lo = panels.breakpoints[j + 1];
        const double width = (hi - lo) / static_cast<double>(subdivisions);
        for (std::size_t s = 0; s < subdivisions; ++s) {
            const double a = lo + width * static_cast<double>(s);
            const double half_width = 0.5 * width;
            const double mid = a + half_width;
            for (std::size_t i = 0; i < rule.degree; ++i) {
                out.x.push_back(mid + half_width * rule.nodes[i]);
                out.w.push_back(half_width * rule.weights[i]);
            }
        }
    }
    return out;
}

/// N[n,m] by graded-panel Gauss-Legendre quadrature. The tail [0, b_K] is
/// dropped; its contribution is below b_K (1 + |log b_K|).
[[nodiscard]] inline double quad_entry_oracle(Order n, Order m, const PanelDecomposition& panels,
                                              const QuadratureRule& rule,
                                              const Limits& limits = {})
{
    require_order(n, limits);
    require_order(m, limits);
    const CompositeRule composite = composite_rule(panels, rule);
    double sum = 0.0;
    for (std::size_t i = 0; i < composite.x.size(); ++i) {
        const double x = composite.x[i];
        sum += composite.w[i] * std::log(x) * legendre_native(n.value(), 2.0 * x - 1.0) *
               legendre_native(m.value(), 2.0 * x - 1.0);
    }
    return sum;
}

[[nodiscard]] inline double quad_entry_oracle(Order n, Order m, const Limits& limits = {})
{
    return quad_entry_oracle(n, m, make_panels(), gauss_legendre_rule(kDefaultRuleDegree), limits);
}

/// All quadrature values N[n,m], 0 <= m, n <= max_order, from one pass over
/// the composite nodes. Row-major, (max_order+1)^2 entries.
[[nodiscard]] inline std::vector<double> quad_gram(Order max_order, const PanelDecomposition& panels,
                                                   const QuadratureRule& rule,
                                                   const Limits& limits = {})
{
    require_order(max_order, limits);
    const std::size_t dim = max_order.value() + 1;
    const CompositeRule composite = composite_rule(panels, rule);
    std::vector<double> gram(dim * dim, 0.0);
    for (std::size_t i = 0; i < composite.x.size(); ++i) {
        const std::vector<double> p = eval_batch(max_order, composite.x[i], limits);
        const double wl = composite.w[i] * std::log(composite.x[i]);
        for (std::size_t n = 0; n < dim; ++n) {
            const double wp = wl * p[n];
            for (std::size_t m = 0; m <= n; ++m)
                gram[n * dim + m] += wp * p[m];
        }
    }
    for (std::size_t n = 0; n < dim; ++n) {
        for (std::size_t m = 0; m < n; ++m)
            gram[m * dim + n] = gram[n * dim + m];
    }
    return gram;
}

} // namespace logleg
