#include "hres/exact.hpp"

#include "hres/rational.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>

namespace hres {

namespace {

std::shared_mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

// Pascal row cache is not worth it at these sizes; the recurrence is quadratic.
void extend_bernoulli(int k) {
  std::unique_lock lock(bernoulli_mutex);
  while (static_cast<int>(bernoulli_cache.size()) <= k) {
    int n = static_cast<int>(bernoulli_cache.size());
    // sum_{j=0}^{n} C(n+1, j) B_j = 0
    Rational acc = 0;
    for (int j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * bernoulli_cache[static_cast<std::size_t>(j)];
    bernoulli_cache.push_back(-acc / Rational(n + 1));
  }
}

}  // namespace

Rational bernoulli_number(int k) {
  if (k < 0) throw DomainError("Bernoulli index must be >= 0");
  {
    std::shared_lock lock(bernoulli_mutex);
    if (k < static_cast<int>(bernoulli_cache.size())) return bernoulli_cache[static_cast<std::size_t>(k)];
  }
  extend_bernoulli(k);
  std::shared_lock lock(bernoulli_mutex);
  return bernoulli_cache[static_cast<std::size_t>(k)];
}

Rational bernoulli_polynomial(int k, const Rational& x) {
  bernoulli_number(k);
  Rational acc = 0;
  Rational power = 1;  // x^{k-j}, built from j = k downwards
  std::vector<Rational> powers(static_cast<std::size_t>(k) + 1);
  for (int e = 0; e <= k; ++e) {
    powers[static_cast<std::size_t>(e)] = power;
    power *= x;
  }
  for (int j = 0; j <= k; ++j)
    acc += Rational(binomial(k, j)) * bernoulli_number(j) * powers[static_cast<std::size_t>(k - j)];
  return acc;
}

Rational l_value(const PeriodicFunction& f, int n) {
  if (n < 0) throw DomainError("l_value needs n >= 0");
  const int M = f.period();
  Rational sum = 0;
  for (int m = 1; m <= M; ++m) {
    int sg = f.sign_at(m);
    if (sg == 0) continue;
    Rational b = bernoulli_polynomial(2 * n + 2, Rational(m, M));
    sum += sg > 0 ? b : Rational(-b);
  }
  BigInt Mpow = mp::pow(BigInt(M), static_cast<unsigned>(2 * n + 1));
  return -f.scale() * Rational(Mpow, 2 * n + 2) * sum;
}

FormalSeries::FormalSeries(ThetaSpec spec, std::vector<Rational> C, Rational constant)
    : spec_(std::move(spec)), C_(std::move(C)), C_M_(std::move(constant)) {}

Rational FormalSeries::a(std::size_t n) const {
  BigInt bpow = mp::pow(BigInt(spec_.b), static_cast<unsigned>(n));
  return C_.at(n) / (factorial(static_cast<int>(n)) * Rational(bpow));
}

FormalSeries series_coefficients(const ThetaSpec& spec, int count) {
  if (count < 1) throw ConfigError("coefficient count must be >= 1");
  if (spec.b <= 0) throw ConfigError("theta parameter b must be positive");
  if (spec.a < 0) throw ConfigError("theta parameter a must be >= 0");
  std::vector<Rational> C;
  C.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) {
    Rational L = l_value(spec.f, n);
    C.push_back(n % 2 == 0 ? L : Rational(-L));
  }
  // C_M = -(M/2) sum f(m) B_2(m/M), with B_2 written out rather than taken from the cache.
  const int M = spec.f.period();
  Rational acc = 0;
  for (int m = 1; m <= M; ++m) {
    Rational x(m, M);
    acc += spec.f.value(m) * (x * x - x + Rational(1, 6));
  }
  Rational CM = -Rational(M, 2) * acc;
  if (CM != C.front())
    throw ConsistencyError("C_M = " + format_rational(CM) + " differs from C_0 = " + format_rational(C.front()));
  return FormalSeries(spec, std::move(C), std::move(CM));
}

GevreyFit gevrey_estimate(const FormalSeries& series, int count) {
  if (count < 10) throw ConfigError("gevrey_estimate needs count >= 10");
  if (static_cast<std::size_t>(count) > series.size())
    throw ConfigError("gevrey_estimate count exceeds available coefficients");
  std::vector<double> ns;
  std::vector<double> ys;
  for (int n = 2; n < count; ++n) {
    Rational v = series.a(static_cast<std::size_t>(n)) / factorial(n);
    if (v == 0) continue;
    Real128 r = to_real<Real128>(mp::abs(v));
    ns.push_back(n);
    ys.push_back(static_cast<double>(log(r)));
  }
  if (ns.size() < 4) throw ConsistencyError("too few nonzero coefficients for a Gevrey fit");
  Eigen::MatrixXd X(static_cast<Eigen::Index>(ns.size()), 3);
  Eigen::VectorXd y(static_cast<Eigen::Index>(ns.size()));
  for (std::size_t i = 0; i < ns.size(); ++i) {
    auto r = static_cast<Eigen::Index>(i);
    X(r, 0) = 1.0;
    X(r, 1) = ns[i];
    X(r, 2) = std::log(ns[i]);
    y(r) = ys[i];
  }
  Eigen::Vector3d beta = X.colPivHouseholderQr().solve(y);
  Eigen::VectorXd res = X * beta - y;
  GevreyFit fit;
  fit.A = std::exp(beta(0));
  fit.B = std::exp(beta(1));
  fit.log_exponent = beta(2);
  fit.rms_residual = std::sqrt(res.squaredNorm() / static_cast<double>(ns.size()));
  if (!std::isfinite(fit.B) || fit.rms_residual > 1.0)
    throw ConsistencyError("coefficients do not follow Gevrey-1 growth (rms residual " +
                           std::to_string(fit.rms_residual) + ")");
  return fit;
}

template <class Real>
GeneratingResidual<Real> generating_identity(const PeriodicFunction& f, const Real& y, const Real& tol) {
  using std::abs;
  using std::sin;
  const int M = f.period();
  const Real My = Real(M) * y;
  const Real r = abs(My) / (2 * pi<Real>());
  if (y == 0 || !(r < 1)) throw DomainError("generating identity needs 0 < |y| < 2 pi/M");
  const Real c = to_real<Real>(f.scale());
  // |B_{2k}(x)| <= |B_{2k}| <= 4 (2k)!/(2 pi)^{2k}, so term n is at most 4 M |c| r^{2n+2}/|My| after the 1/(My)
  const Real lead = 4 * Real(M) * abs(c) / abs(My);
  GeneratingResidual<Real> out;
  out.y = y;
  CompensatedSum<Real, Real> sum;
  Real power = My * My;  // (My)^{2n+2}
  Rational fact(2);      // (2n+2)!
  for (int n = 0;; ++n) {
    Rational inner = 0;
    for (int m = 1; m <= M; ++m)
      if (int sg = f.sign_at(m)) inner += sg * bernoulli_polynomial(2 * n + 2, Rational(m, M));
    Real term = to_real<Real>(inner * f.scale() / fact) * power;
    sum.add(n % 2 == 0 ? Real(-term) : term);  // i^{2n+2} = (-1)^{n+1}
    out.terms = n + 1;
    using std::pow;
    Real r2 = r * r;
    Real tail = lead * pow(r2, n + 2) / (1 - r2);
    if (tail < tol || n > 4000) {
      out.tail_bound = tail;
      break;
    }
    power *= My * My;
    fact *= Rational((2 * n + 3) * (2 * n + 4));
  }
  out.lhs = sum.value() / My;
  const Real k1(f.k1()), k2(f.k2());
  out.rhs = -2 * c * sin((k2 - k1) * y / 2) * sin((Real(M) - k1 - k2) * y / 2) / sin(My / 2);
  out.residual = abs(out.lhs - out.rhs);
  return out;
}

template GeneratingResidual<double> generating_identity<double>(const PeriodicFunction&, const double&, const double&);
template GeneratingResidual<Real128> generating_identity<Real128>(const PeriodicFunction&, const Real128&, const Real128&);
template GeneratingResidual<Real256> generating_identity<Real256>(const PeriodicFunction&, const Real256&, const Real256&);

}  // namespace hres
