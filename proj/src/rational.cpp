#include "hres/rational.hpp"

#include <cctype>
#include <numeric>

namespace hres {

std::string format_rational(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  std::string body(s);
  if (!body.empty() && body[0] == '+') body.erase(0, 1);
  return BigInt(body);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
      throw ConfigError("not a rational: '" + std::string(text) + "'");
    BigInt d = parse_integer(den);
    if (d == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    std::string digits(whole);
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.erase(0, 1);
    if (digits.empty()) digits = "0";
    for (char ch : frac)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ConfigError("not a rational: '" + std::string(text) + "'");
    if (!is_integer_literal(digits)) throw ConfigError("not a rational: '" + std::string(text) + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = BigInt(digits) * scale + (frac.empty() ? BigInt(0) : BigInt(std::string(frac)));
    Rational q(num, scale);
    return negative ? Rational(-q) : q;
  }
  if (!is_integer_literal(s)) throw ConfigError("not a rational: '" + std::string(text) + "'");
  return Rational(parse_integer(s));
}

Rational factorial(int n) {
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return Rational(r);
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

}  // namespace hres
