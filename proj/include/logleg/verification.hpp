#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "logleg/exact_moments.hpp"
#include "logleg/oracles.hpp"

namespace logleg {

enum class OracleKind { exact, quad };

inline std::string to_string(OracleKind kind)
{
    return kind == OracleKind::exact ? "exact" : "quad";
}

inline constexpr std::size_t kExactVerifyCap = 40;
inline constexpr double kQuadRelativeTolerance = 1e-10;
inline constexpr double kQuadAbsoluteTolerance = 1e-13;

struct PairResult {
    std::size_t n = 0;
    std::size_t m = 0;
    ExactRational closed_form;
    std::optional<ExactRational> exact_reference;
    std::optional<double> quad_reference;
    double abs_deviation = 0.0;
    double rel_deviation = 0.0;
    bool pass = false;
};

struct VerificationReport {
    OracleKind oracle = OracleKind::exact;
    std::size_t max_order = 0;
    std::vector<PairResult> pairs;
    double worst_abs_deviation = 0.0;
    double worst_rel_deviation = 0.0;
    std::size_t worst_abs_index = 0;
    std::size_t worst_rel_index = 0;

    [[nodiscard]] std::size_t pass_count() const
    {
        std::size_t count = 0;
        for (const auto& p : pairs)
            count += p.pass ? 1 : 0;
        return count;
    }
    [[nodiscard]] bool passed() const { return pass_count() == pairs.size(); }
};

using EntryFunction = std::function<ExactRational(Order, Order)>;

struct VerifyOptions {
    Limits limits;
    std::size_t panels = kDefaultPanels;
    std::size_t rule_degree = kDefaultRuleDegree;
    /// Closed-form value under test; defaults to `entry`. Tests substitute a
    /// perturbed function here to exercise the failure path.
    EntryFunction candidate;
};

/// Compares the closed forms against the chosen oracle on every pair
/// 0 <= m <= n <= max_order. Exact mode requires rational equality; quad
/// mode requires relative deviation <= 1e-10 or absolute <= 1e-13.
[[nodiscard]] inline VerificationReport verify_range(Order max_order, OracleKind oracle,
                                                     const VerifyOptions& options = {})
{
    if (oracle == OracleKind::exact)
        require_order(max_order, Limits{kExactVerifyCap}, "exact verification order");
    else
        require_order(max_order, options.limits, "quadrature verification order");

    const Limits limits = options.limits;
    const EntryFunction candidate =
        options.candidate ? options.candidate
                          : EntryFunction([limits](Order n, Order m) { return entry(n, m, limits); });

    VerificationReport report;
    report.oracle = oracle;
    report.max_order = max_order.value();

    std::vector<double> quad;
    const std::size_t dim = max_order.value() + 1;
    if (oracle == OracleKind::quad) {
        quad = quad_gram(max_order, make_panels(options.panels),
                         gauss_legendre_rule(options.rule_degree), options.limits);
    }

    for (std::size_t n = 0; n < dim; ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            PairResult r;
            r.n = n;
            r.m = m;
            r.closed_form = candidate(Order(n), Order(m));
            if (oracle == OracleKind::exact) {
                r.exact_reference = exact_entry_oracle(Order(n), Order(m));
                const ExactRational diff = abs(r.closed_form - *r.exact_reference);
                r.pass = diff == 0;
                r.abs_deviation = to_double(diff);
                r.rel_deviation = r.closed_form == 0 ? r.abs_deviation
                                                     : to_double(diff / abs(r.closed_form));
            } else {
                r.quad_reference = quad[n * dim + m];
                const double value = to_double(r.closed_form);
                r.abs_deviation = std::abs(*r.quad_reference - value);
                r.rel_deviation = value == 0.0 ? r.abs_deviation : r.abs_deviation / std::abs(value);
                r.pass = std::isfinite(*r.quad_reference) &&
                         (r.rel_deviation <= kQuadRelativeTolerance ||
                          r.abs_deviation <= kQuadAbsoluteTolerance);
            }
            if (r.abs_deviation > report.worst_abs_deviation) {
                report.worst_abs_deviation = r.abs_deviation;
                report.worst_abs_index = report.pairs.size();
            }
            if (r.rel_deviation > report.worst_rel_deviation) {
                report.worst_rel_deviation = r.rel_deviation;
                report.worst_rel_index = report.pairs.size();
            }
            report.pairs.push_back(std::move(r));
        }
    }
    return report;
}

} // namespace logleg
