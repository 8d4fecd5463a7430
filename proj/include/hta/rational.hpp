#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "hta/errors.hpp"

namespace hta {

using Int = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational scalar. Always kept in lowest terms
/// with a positive denominator; all arithmetic is exact.
using Rational = boost::multiprecision::cpp_rational;

/// Parses a decimal-free rational string "n" or "n/d" (d > 0 after sign
/// normalization). Anything else, including floats, is rejected.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw ParseError("invalid rational literal: '" + std::string(text) + "'"); };
    if (text.empty()) fail();

    const auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash == std::string_view::npos ? text.size() : slash);
    std::string_view den_part = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

    auto digits_only = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };

    bool negative = false;
    if (!num_part.empty() && (num_part.front() == '-' || num_part.front() == '+')) {
        negative = num_part.front() == '-';
        num_part.remove_prefix(1);
    }
    if (!digits_only(num_part)) fail();

    Int num{std::string(num_part)};
    if (negative) num = -num;

    if (slash == std::string_view::npos) return Rational(num);

    if (!digits_only(den_part)) fail();
    Int den{std::string(den_part)};
    if (den.is_zero()) fail();
    return Rational(num, den);
}

/// Canonical form: "n" for integers, "n/d" otherwise.
inline std::string format_rational(const Rational& r) {
    const Int num = numerator(r);
    const Int den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace hta
