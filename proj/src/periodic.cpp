#include "hres/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace hres {

namespace {

long long mod(long long a, long long M) {
  long long r = a % M;
  return r < 0 ? r + M : r;
}

int canonical_residue(long long k, long long M) {
  long long r = mod(k, M);
  return static_cast<int>(std::min(r, M - r));
}

}  // namespace

PeriodicFunction make_periodic(const Rational& c, int M, long long k1, long long k2) {
  if (M < 2) throw ConfigError("period M must be >= 2 (got " + std::to_string(M) + ")");
  if (c == 0) throw ConfigError("scale c must be nonzero");
  if (!(k1 < k2))
    throw ConfigError("k1 must be < k2 (got k1=" + std::to_string(k1) + ", k2=" + std::to_string(k2) + ")");
  std::set<long long> plus{mod(k1, M), mod(-k1, M)};
  std::set<long long> minus{mod(k2, M), mod(-k2, M)};
  for (long long r : plus)
    if (minus.count(r))
      throw ConfigError("residue classes of +-k1 and +-k2 overlap mod " + std::to_string(M) +
                        "; the function is ambiguous");
  // k = 0 or M/2 gives a one-element class; the closed-form tilde transform
  // assumes two distinct points per class.
  if (plus.size() != 2 || minus.size() != 2)
    throw ConfigError("k1 and k2 must not be congruent to 0 or M/2 mod " + std::to_string(M));
  PeriodicFunction f;
  f.c_ = c;
  f.M_ = M;
  f.k1_ = canonical_residue(k1, M);
  f.k2_ = canonical_residue(k2, M);
  f.signs_.assign(static_cast<std::size_t>(M), 0);
  for (long long r : plus) f.signs_[static_cast<std::size_t>(r)] = 1;
  for (long long r : minus) f.signs_[static_cast<std::size_t>(r)] = -1;
  return f;
}

PeriodicFunction PeriodicFunction::scaled(const Rational& factor) const {
  if (factor == 0) throw ConfigError("scale factor must be nonzero");
  PeriodicFunction g = *this;
  g.c_ = c_ * factor;
  return g;
}

void require_coprime(int s, int t) {
  if (s < 1 || t < 1) throw ConfigError("s and t must be positive");
  if (std::gcd(s, t) != 1)
    throw ConfigError("s and t must be coprime (gcd(" + std::to_string(s) + "," + std::to_string(t) +
                      ") = " + std::to_string(std::gcd(s, t)) + ")");
}

PeriodicFunction chi_function(const ChiParams& p) {
  require_coprime(p.s, p.t);
  if (p.n < 1 || p.n > p.s - 1) throw ConfigError("n must satisfy 1 <= n <= s-1");
  if (p.m < 1 || p.m > p.t - 1) throw ConfigError("m must satisfy 1 <= m <= t-1");
  long long M = 2LL * p.s * p.t;
  long long a = static_cast<long long>(p.n) * p.t - static_cast<long long>(p.m) * p.s;
  long long b = static_cast<long long>(p.n) * p.t + static_cast<long long>(p.m) * p.s;
  int ra = canonical_residue(a, M);
  int rb = canonical_residue(b, M);
  // Labels must satisfy k1 < k2; shifting k2 by M keeps the classes.
  return make_periodic(Rational(1), static_cast<int>(M), ra, ra < rb ? rb : rb + M);
}

TildeFunction::TildeFunction(const PeriodicFunction& base) : base_(base) {
  const long long M = base_.period();
  diff_ = static_cast<long long>(base_.k2()) - base_.k1();
  comp_ = M - base_.k1() - base_.k2();
  const long long full = 2 * M;
  std::vector<long double> vals(static_cast<std::size_t>(full));
  for (long long l = 0; l < full; ++l) vals[static_cast<std::size_t>(l)] = value<long double>(l);
  period_ = static_cast<int>(full);
  for (long long d = 1; d < full; ++d) {
    if (full % d != 0) continue;
    bool ok = true;
    for (long long l = 0; l < full && ok; ++l)
      ok = std::abs(vals[static_cast<std::size_t>(l)] - vals[static_cast<std::size_t>((l + d) % full)]) < 1e-15L;
    if (ok) {
      period_ = static_cast<int>(d);
      break;
    }
  }
}

PairSet pair_set(int s, int t) {
  require_coprime(s, t);
  PairSet d{s, t, {}};
  if (s % 2 == 1) {
    for (int n = 1; n <= (s - 1) / 2; ++n)
      for (int m = 1; m <= t - 1; ++m) d.pairs.push_back({n, m});
  } else {
    for (int n = 1; n <= s - 1; ++n)
      for (int m = 1; m <= (t - 1) / 2; ++m) d.pairs.push_back({n, m});
  }
  return d;
}

PairSet alternative_pair_set(int s, int t) {
  require_coprime(s, t);
  PairSet d{s, t, {}};
  for (int n = 1; n <= s - 1; ++n)
    for (int m = 1; m <= (t - 1) / 2; ++m) d.pairs.push_back({n, m});
  return d;
}

IndexPair biject(int s, int t, IndexPair p) {
  if (2 * p.n <= s - 1 && 2 * p.m <= t - 1) return p;
  return {s - p.n, t - p.m};
}

std::vector<long long> support_set(int s, int t) {
  PairSet d = pair_set(s, t);
  std::vector<long long> out;
  std::set<long long> seen;
  for (const auto& p : d.pairs) {
    long long a = static_cast<long long>(p.n) * t - static_cast<long long>(p.m) * s;
    long long b = static_cast<long long>(p.n) * t + static_cast<long long>(p.m) * s;
    for (long long v : {a, b, -a, -b}) {
      if (!seen.insert(v).second)
        throw ConsistencyError("duplicate entry " + std::to_string(v) + " in support set of (" +
                               std::to_string(s) + "," + std::to_string(t) + ")");
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace hres
