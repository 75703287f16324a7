#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <system_error>

#include <boost/multiprecision/cpp_int.hpp>

#include "logleg/errors.hpp"

namespace logleg {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced fraction with positive denominator (normalized by the backend).
using ExactRational = boost::multiprecision::cpp_rational;

namespace detail {

inline bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s) {
        if (c < '0' || c > '9')
            return false;
    }
    return true;
}

inline BigInt parse_integer(std::string_view s)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw DomainError("not an integer: '" + std::string(s) + "'");
    BigInt value{std::string(s)};
    return negative ? BigInt(-value) : value;
}

} // namespace detail

/// Rounds |value| to the nearest double, ties to even, using exact integer
/// division. Values are assumed to lie in the normal range of double.
inline double to_double(const ExactRational& value)
{
    using boost::multiprecision::msb;

    const BigInt num = abs(boost::multiprecision::numerator(value));
    const BigInt den = boost::multiprecision::denominator(value);
    if (num == 0)
        return 0.0;

    // num/den lies in [2^(e-1), 2^(e+1)); shifting by 54-e puts the quotient in [2^53, 2^55).
    const long long e = static_cast<long long>(msb(num)) - static_cast<long long>(msb(den));
    const long long shift = 54 - e;
    BigInt scaled_num = num;
    BigInt scaled_den = den;
    if (shift >= 0)
        scaled_num <<= static_cast<unsigned>(shift);
    else
        scaled_den <<= static_cast<unsigned>(-shift);

    BigInt quotient;
    BigInt remainder;
    boost::multiprecision::divide_qr(scaled_num, scaled_den, quotient, remainder);
    const bool sticky = remainder != 0;

    const unsigned extra = static_cast<unsigned>(msb(quotient)) - 52U;
    std::uint64_t mantissa = static_cast<std::uint64_t>(quotient >> extra);
    const std::uint64_t dropped = static_cast<std::uint64_t>(quotient & ((BigInt(1) << extra) - 1));
    const std::uint64_t half = std::uint64_t{1} << (extra - 1);

    if (dropped > half || (dropped == half && (sticky || (mantissa & 1U) != 0)))
        ++mantissa;

    double result = std::ldexp(static_cast<double>(mantissa),
                               static_cast<int>(static_cast<long long>(extra) - shift));
    return value.sign() < 0 ? -result : result;
}

/// Exact value of a finite double.
inline ExactRational from_double(double value)
{
    if (!std::isfinite(value))
        throw DomainError("cannot represent a non-finite value exactly");
    int exponent = 0;
    const double fraction = std::frexp(value, &exponent);
    const auto mantissa = static_cast<std::int64_t>(std::ldexp(fraction, 53));
    exponent -= 53;
    ExactRational result{BigInt(mantissa)};
    if (exponent >= 0)
        result *= ExactRational(BigInt(1) << exponent);
    else
        result /= ExactRational(BigInt(1) << -exponent);
    return result;
}

/// "numerator/denominator", always with an explicit denominator.
inline std::string to_fraction_string(const ExactRational& value)
{
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

/// Accepts "p/q" or a bare integer "p", with optional sign on p.
inline ExactRational parse_fraction(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return ExactRational(detail::parse_integer(text));
    const BigInt num = detail::parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!detail::all_digits(den_text))
        throw DomainError("bad denominator in '" + std::string(text) + "'");
    const BigInt den(std::string{den_text});
    if (den == 0)
        throw DomainError("zero denominator in '" + std::string(text) + "'");
    return ExactRational(num, den);
}

/// Shortest decimal that round-trips to the same double.
inline std::string to_shortest_string(double value)
{
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    if (ec != std::errc{})
        throw NumericalError("failed to format floating value");
    return std::string(buffer, end);
}

} // namespace logleg
