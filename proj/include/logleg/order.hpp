#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "logleg/errors.hpp"

namespace logleg {

/// Polynomial degree index, 0-based.
class Order {
public:
    constexpr Order() noexcept = default;
    constexpr explicit Order(std::size_t value) noexcept : value_(value) {}

    [[nodiscard]] constexpr std::size_t value() const noexcept { return value_; }

    friend constexpr auto operator<=>(Order, Order) noexcept = default;

private:
    std::size_t value_ = 0;
};

inline constexpr std::size_t kDefaultMaxOrder = 256;

/// Ceiling applied to every public entry point taking an order.
struct Limits {
    std::size_t max_order = kDefaultMaxOrder;
};

inline void require_order(Order n, const Limits& limits, const char* what = "order")
{
    if (n.value() > limits.max_order) {
        throw BoundsError(std::string(what) + " " + std::to_string(n.value()) +
                          " exceeds maximum order " + std::to_string(limits.max_order));
    }
}

} // namespace logleg
