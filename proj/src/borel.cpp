#include "hres/borel.hpp"

#include "hres/rational.hpp"

namespace hres {

namespace {

void require_count(const FormalSeries& series, int count, int extra) {
  if (count < 1) throw ConfigError("coefficient count must be >= 1");
  if (static_cast<std::size_t>(count + extra) > series.size())
    throw ConfigError("series holds " + std::to_string(series.size()) + " coefficients, need " +
                      std::to_string(count + extra));
}

// Coefficients of sin(k y / 2) in powers of y up to max_power.
std::vector<Rational> sine_series(long long k, int max_power) {
  std::vector<Rational> out(static_cast<std::size_t>(max_power) + 1, Rational(0));
  Rational half(k, 2);
  Rational term = half;  // (k/2)^{2j+1}/(2j+1)! with sign
  for (int p = 1; p <= max_power; p += 2) {
    out[static_cast<std::size_t>(p)] = term;
    term *= -half * half / Rational((p + 1) * (p + 2));
  }
  return out;
}

}  // namespace

std::vector<Rational> borel_coefficients(const FormalSeries& series, int count) {
  require_count(series, count, 1);
  std::vector<Rational> g;
  g.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) g.push_back(series.a(static_cast<std::size_t>(n + 1)) / factorial(n));
  return g;
}

std::vector<Rational> borel_coefficients_rearranged(const FormalSeries& series, int count) {
  if (count < 1) throw ConfigError("coefficient count must be >= 1");
  const auto& f = series.f();
  const int M = f.period();
  const Rational ratio(BigInt(M) * M, series.b());
  std::vector<Rational> g;
  Rational power = ratio;  // (M^2/b)^{n+1}
  for (int n = 0; n < count; ++n) {
    Rational inner = 0;
    for (int m = 1; m <= M; ++m)
      if (f.sign_at(m) != 0) inner += f.value(m) * bernoulli_polynomial(2 * n + 4, Rational(m, M));
    Rational comb = factorial(2 * n + 3) / (factorial(n) * factorial(n + 1));
    Rational v = Rational(M) * inner / factorial(2 * n + 4) * comb * power;
    g.push_back(n % 2 == 0 ? v : Rational(-v));
    power *= ratio;
  }
  return g;
}

std::vector<Rational> sine_ratio_series(const PeriodicFunction& f, int max_power) {
  const long long A = static_cast<long long>(f.k2()) - f.k1();
  const long long B = static_cast<long long>(f.period()) - f.k1() - f.k2();
  const int deg = max_power + 2;
  auto sa = sine_series(A, deg);
  auto sb = sine_series(B, deg);
  auto sm = sine_series(f.period(), deg);
  // numerator / y^2 and denominator / y
  std::vector<Rational> num(static_cast<std::size_t>(deg) + 1, Rational(0));
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; i + j <= deg; ++j) {
      if (i + j < 2) continue;
      num[static_cast<std::size_t>(i + j - 2)] += sa[static_cast<std::size_t>(i)] * sb[static_cast<std::size_t>(j)];
    }
  std::vector<Rational> den(static_cast<std::size_t>(deg), Rational(0));
  for (int i = 1; i <= deg; ++i) den[static_cast<std::size_t>(i - 1)] = sm[static_cast<std::size_t>(i)];
  // quotient q = num/den as a power series, then shift by one power of y
  std::vector<Rational> q(static_cast<std::size_t>(max_power), Rational(0));
  for (int k = 0; k < max_power; ++k) {
    Rational acc = num[static_cast<std::size_t>(k)];
    for (int j = 1; j <= k; ++j) acc -= den[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
    q[static_cast<std::size_t>(k)] = acc / den[0];
  }
  std::vector<Rational> out(static_cast<std::size_t>(max_power) + 1, Rational(0));
  for (int k = 0; k < max_power; ++k) out[static_cast<std::size_t>(k + 1)] = 2 * f.scale() * q[static_cast<std::size_t>(k)];
  return out;
}

std::vector<Rational> g1_coefficients(const FormalSeries& series, int count) {
  if (count < 1) throw ConfigError("coefficient count must be >= 1");
  auto s = sine_ratio_series(series.f(), 2 * count + 3);
  if (s[1] != -series.constant())
    throw ConsistencyError("sine-ratio leading term " + format_rational(s[1]) + " is not -C_M");
  std::vector<Rational> g1;
  for (int n = 0; n < count; ++n) g1.push_back(-s[static_cast<std::size_t>(2 * n + 3)]);
  return g1;
}

std::vector<Rational> g2_coefficients(long long b, int count) {
  if (b <= 0) throw ConfigError("b must be positive");
  std::vector<Rational> g2;
  Rational term(6, b);  // (6/b) (5/2)_n / n! (4/b)^n
  for (int n = 0; n < count; ++n) {
    g2.push_back(term);
    term *= Rational(2 * n + 5, 2) / Rational(n + 1) * Rational(4, b);
  }
  return g2;
}

std::vector<Rational> hadamard_oracle(const FormalSeries& series, int count) {
  if (count > 40) throw ConfigError("hadamard_oracle is limited to 40 coefficients");
  auto g1 = g1_coefficients(series, count);
  auto g2 = g2_coefficients(series.b(), count);
  auto direct = borel_coefficients(series, count);
  std::vector<Rational> out;
  for (int n = 0; n < count; ++n) {
    Rational v = g1[static_cast<std::size_t>(n)] * g2[static_cast<std::size_t>(n)];
    if (v != direct[static_cast<std::size_t>(n)])
      throw ConsistencyError("Hadamard product differs from the Borel coefficient at n = " + std::to_string(n));
    out.push_back(v);
  }
  return out;
}

long long SingularitySet::first_index() const {
  for (long long l = 1; l <= 2LL * tilde_.base().period(); ++l)
    if (contains_index(l)) return l;
  throw ConsistencyError("tilde transform vanishes identically");
}

std::vector<long long> SingularitySet::indices(int count) const {
  std::vector<long long> out;
  for (long long l = 1; static_cast<int>(out.size()) < count; ++l)
    if (contains_index(l)) out.push_back(l);
  return out;
}

SingularitySet singularity_set(const FormalSeries& series) {
  return SingularitySet(TildeFunction(series.f()), series.b());
}

}  // namespace hres
