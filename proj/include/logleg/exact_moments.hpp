#pragma once

#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "logleg/order.hpp"
#include "logleg/rational.hpp"

namespace logleg {

// Closed forms for the log-weighted Gram entries
//   N[n,m] = int_0^1 P_n(2x-1) P_m(2x-1) log(x) dx.
//
// Off the diagonal N[n,m] = (-1)^(n+m+1) / (|n-m| (n+m+1)); on it
// (2n+1) N[n,n] = -1 - 2 sum_{j=1}^n 1/((2j-1) 2j (2j+1)).

/// 1/((2j-1) 2j (2j+1)), the summand of the diagonal closed form.
[[nodiscard]] inline ExactRational diag_sum_term(std::size_t j)
{
    if (j == 0)
        throw DomainError("diag_sum_term requires j >= 1");
    const BigInt jj(j);
    return ExactRational(BigInt(1), (2 * jj - 1) * (2 * jj) * (2 * jj + 1));
}

[[nodiscard]] inline ExactRational entry_offdiag(Order n, Order m, const Limits& limits = {})
{
    require_order(n, limits);
    require_order(m, limits);
    if (n == m)
        throw DomainError("entry_offdiag requires n != m; use entry_diag for n == m");
    const std::size_t hi = n > m ? n.value() : m.value();
    const std::size_t lo = n > m ? m.value() : n.value();
    const BigInt den = BigInt(hi - lo) * BigInt(hi + lo + 1);
    // (-1)^(n+m+1): positive when n+m is odd.
    const BigInt num = (hi + lo) % 2 == 1 ? 1 : -1;
    return ExactRational(num, den);
}

namespace detail {

inline ExactRational diag_from_partial_sum(std::size_t n, const ExactRational& partial)
{
    return (ExactRational(-1) - 2 * partial) / ExactRational(2 * n + 1);
}

} // namespace detail

/// N[n,n] by fresh summation of the closed form.
[[nodiscard]] inline ExactRational entry_diag(Order n, const Limits& limits = {})
{
    require_order(n, limits);
    ExactRational partial = 0;
    for (std::size_t j = 1; j <= n.value(); ++j)
        partial += diag_sum_term(j);
    return detail::diag_from_partial_sum(n.value(), partial);
}

/// N[n,m] for any pair; symmetric dispatch onto the diagonal or off-diagonal form.
[[nodiscard]] inline ExactRational entry(Order n, Order m, const Limits& limits = {})
{
    if (n == m)
        return entry_diag(n, limits);
    return n > m ? entry_offdiag(n, m, limits) : entry_offdiag(m, n, limits);
}

enum class GramMode { exact, floating };

inline std::string to_string(GramMode mode)
{
    return mode == GramMode::exact ? "exact" : "float";
}

/// Dense symmetric (order+1) x (order+1) table, row-major.
template <typename T>
class GramMatrix {
public:
    static constexpr GramMode mode =
        std::is_same_v<T, ExactRational> ? GramMode::exact : GramMode::floating;

    explicit GramMatrix(Order order)
        : order_(order), dim_(order.value() + 1), entries_(dim_ * dim_)
    {
    }

    /// Highest polynomial order represented; the matrix is (order+1) square.
    [[nodiscard]] Order order() const noexcept { return order_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return dim_; }

    [[nodiscard]] T& operator()(std::size_t n, std::size_t m) { return entries_[n * dim_ + m]; }
    [[nodiscard]] const T& operator()(std::size_t n, std::size_t m) const
    {
        return entries_[n * dim_ + m];
    }

    [[nodiscard]] const std::vector<T>& data() const noexcept { return entries_; }

private:
    Order order_;
    std::size_t dim_;
    std::vector<T> entries_;
};

/// Exact Gram matrix. The diagonal reuses a running partial sum of the
/// closed form rather than re-summing per entry.
[[nodiscard]] inline GramMatrix<ExactRational> gram_exact(Order size, const Limits& limits = {})
{
    require_order(size, limits, "gram size");
    GramMatrix<ExactRational> gram(size);
    ExactRational partial = 0;
    for (std::size_t n = 0; n < gram.dimension(); ++n) {
        if (n > 0)
            partial += diag_sum_term(n);
        gram(n, n) = detail::diag_from_partial_sum(n, partial);
        for (std::size_t m = 0; m < n; ++m) {
            gram(n, m) = entry_offdiag(Order(n), Order(m), limits);
            gram(m, n) = gram(n, m);
        }
    }
    return gram;
}

/// Each entry is the correctly rounded double of the exact value.
[[nodiscard]] inline GramMatrix<double> to_float(const GramMatrix<ExactRational>& exact)
{
    GramMatrix<double> gram(exact.order());
    for (std::size_t n = 0; n < exact.dimension(); ++n) {
        for (std::size_t m = 0; m < exact.dimension(); ++m)
            gram(n, m) = to_double(exact(n, m));
    }
    return gram;
}

[[nodiscard]] inline GramMatrix<double> gram_float(Order size, const Limits& limits = {})
{
    return to_float(gram_exact(size, limits));
}

} // namespace logleg
