#pragma once

#include "hres/numeric.hpp"

#include <string>
#include <string_view>

namespace hres {

// "num/den" in lowest terms, "num" when the denominator is one.
std::string format_rational(const Rational& q);

// Accepts "j", "j/N" and finite decimals like "-0.5"; throws ConfigError otherwise.
Rational parse_rational(std::string_view text);

Rational factorial(int n);

long long gcd_ll(long long a, long long b);

}  // namespace hres
