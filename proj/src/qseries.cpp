#include "hres/qseries.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include <cmath>
#include <numeric>

namespace hres {

namespace {

long long to_ll(const BigInt& z) { return z.convert_to<long long>(); }

// ((n^2 - a) * num) mod modulus, exactly.
long long phase_index(long long n, long long a, long long num, long long modulus) {
  __int128 r = n % modulus;
  __int128 sq = (r * r - a) % modulus;
  if (sq < 0) sq += modulus;
  __int128 p = (sq * num) % modulus;
  return static_cast<long long>(p);
}

template <class Real>
Real power_nu(long long n, int nu) {
  return nu == 0 ? Real(1) : Real(n);
}

template <class Real>
Real max_abs(const std::vector<Real>& v) {
  using std::abs;
  Real m = 0;
  for (const Real& x : v)
    if (abs(x) > m) m = abs(x);
  return m;
}

}  // namespace

template <class Real>
long long ThetaSeries<Real>::leading_index() const {
  long long limit = 2 * (period() + static_cast<long long>(std::sqrt(static_cast<double>(a))) + 2);
  for (long long n = 1; n <= limit; ++n)
    if (at(n) != Real(0) && n * n > a) return n;
  throw DomainError("theta series has no nonzero coefficient");
}

template <class Real>
ThetaSeries<Real> make_theta(const ThetaSpec& spec) {
  ThetaSeries<Real> out{spec.a, spec.b, spec.nu, {}};
  Real c = to_real<Real>(spec.f.scale());
  for (int r = 0; r < spec.f.period(); ++r) out.coeff.push_back(c * Real(spec.f.sign_at(r)));
  return out;
}

template <class Real>
ThetaSeries<Real> make_theta(const TildeFunction& tilde, long long a, long long b, int nu) {
  return {a, b, nu, tilde.table<Real>()};
}

template <class Real>
Estimate<Real> theta_upper_half(const ThetaSeries<Real>& series, const Complex<Real>& x) {
  using std::abs;
  using std::exp;
  using std::sqrt;
  if (!(x.imag() > 0)) throw DomainError("theta series needs Im x > 0");
  const Real lambda = 2 * pi<Real>() * x.imag() / Real(series.b);
  const Complex<Real> w = Complex<Real>(0, 2) * pi<Real>() * x / Real(series.b);
  const Real cmax = max_abs(series.coeff);
  const long long peak = static_cast<long long>(std::ceil(std::sqrt(series.nu / (2 * static_cast<double>(lambda))))) + 1;
  CompensatedSum<Complex<Real>, Real> acc;
  Real tail = 0;
  for (long long n = 0;; ++n) {
    const Real& c = series.at(n);
    if (c != Real(0)) acc.add(power_nu<Real>(n, series.nu) * c * exp(w * Real(n * n - series.a)));
    if (n >= peak && n * n > series.a) {
      long long m = n + 1;
      Real next = power_nu<Real>(m, series.nu) * cmax * exp(-lambda * Real(m * m - series.a));
      Real ratio = exp(-lambda * Real(2 * m + 1)) * (series.nu ? Real(m + 1) / Real(m) : Real(1));
      if (ratio < 1) {
        tail = next / (1 - ratio);
        if (tail <= eps<Real>() * acc.abs_sum()) break;
      }
    }
    if (n > 50'000'000) throw ConsistencyError("theta series: term budget exhausted");
  }
  return {acc.value(), tail + acc.rounding_error(), true};
}

template <class Real>
VerticalTheta<Real>::VerticalTheta(ThetaSeries<Real> series, const Rational& x0)
    : series_(std::move(series)), x0_(x0) {
  BigInt den = mp::denominator(x0);
  BigInt mod = den * series_.b;
  if (mod > BigInt(1) << 22) throw ConfigError("vertical theta line: phase table too large");
  modulus_ = to_ll(mod);
  BigInt num = mp::numerator(x0) % mod;
  if (num < 0) num += mod;
  numer_ = to_ll(num);
  roots_.reserve(static_cast<std::size_t>(modulus_));
  for (long long k = 0; k < modulus_; ++k) roots_.push_back(exp_2pi_i<Real>(k, modulus_));
}

template <class Real>
typename VerticalTheta<Real>::Sample VerticalTheta<Real>::operator()(const Real& y) const {
  using std::abs;
  using std::exp;
  const auto& s = series_;
  const Real lambda = 2 * pi<Real>() * y / Real(s.b);
  const Real cmax = max_abs(s.coeff);
  const long long peak = static_cast<long long>(std::ceil(std::sqrt(s.nu / (2 * static_cast<double>(lambda))))) + 1;
  const Real step = exp(-2 * lambda);
  Complex<Real> sum{};
  Real abs_sum = 0;
  Real E = 0, R = 0;  // e^{-lambda (n^2 - a)} and e^{-lambda (2n + 1)}
  for (long long n = 0;; ++n) {
    if (n % 64 == 0) {
      E = exp(-lambda * Real(n * n - s.a));
      R = exp(-lambda * Real(2 * n + 1));
    }
    const Real& c = s.at(n);
    if (c != Real(0)) {
      Real mag = power_nu<Real>(n, s.nu) * c * E;
      sum += roots_[static_cast<std::size_t>(phase_index(n, s.a, numer_, modulus_))] * mag;
      abs_sum += abs(mag);
    }
    Real next_E = E * R;
    if (n >= peak && n * n > s.a) {
      Real next = power_nu<Real>(n + 1, s.nu) * cmax * next_E;
      Real ratio = R * step * (s.nu ? Real(n + 2) / Real(n + 1) : Real(1));
      if (ratio < 1 && next / (1 - ratio) <= eps<Real>() * abs_sum) break;
    }
    E = next_E;
    R *= step;
    if (n > 50'000'000) throw ConsistencyError("vertical theta: term budget exhausted");
  }
  return {sum, abs_sum};
}

template <class Real>
Complex<Real> theta_radial_limit(const ThetaSeries<Real>& series, const Rational& alpha) {
  using std::abs;
  if (alpha == 0) throw DomainError("radial limit needs alpha != 0");
  BigInt den = mp::denominator(alpha);
  BigInt mod_big = den * series.b;
  long long mod = to_ll(mod_big);
  BigInt num_big = mp::numerator(alpha) % mod_big;
  if (num_big < 0) num_big += mod_big;
  long long num = to_ll(num_big);
  long long P = std::lcm(series.period(), mod);
  if (P > (1LL << 26)) throw ConfigError("radial limit: twisted period too large");

  std::vector<Complex<Real>> roots(static_cast<std::size_t>(mod));
  for (long long k = 0; k < mod; ++k) roots[static_cast<std::size_t>(k)] = exp_2pi_i<Real>(k, mod);
  auto h = [&](long long m) { return roots[static_cast<std::size_t>(phase_index(m, series.a, num, mod))] * series.at(m); };

  CompensatedSum<Complex<Real>, Real> mean, weighted;
  for (long long m = 1; m <= P; ++m) {
    if (series.at(m) == Real(0)) continue;
    Complex<Real> hm = h(m);
    mean.add(hm);
    if (series.nu == 1) {
      // P^2 B_2(m/P) = m^2 - m P + P^2/6
      __int128 core = static_cast<__int128>(m) * m - static_cast<__int128>(m) * P;
      Real w = Real(static_cast<long long>(core)) + Real(P) * Real(P) / 6;
      weighted.add(hm * w);
    } else {
      // P B_1(m/P) = m - P/2
      weighted.add(hm * (Real(m) - Real(P) / 2));
    }
  }
  Real threshold = Real(64) * eps<Real>() * Real(P) * mean.abs_sum();
  if (abs(mean.value()) > threshold)
    throw NoLimitError("radial limit does not exist: twisted coefficients have nonzero mean");
  if (series.nu == 1) return -weighted.value() / (Real(2) * Real(P));
  return h(0) - weighted.value() / Real(P);
}

template <class Real>
std::vector<Complex<Real>> polynomial_fit(const std::vector<Real>& xs, const std::vector<Complex<Real>>& ys,
                                          int degree) {
  using std::abs;
  if (xs.size() != ys.size() || static_cast<int>(xs.size()) < degree + 1)
    throw ConfigError("polynomial fit needs at least degree + 1 samples");
  Real scale = 0;
  for (const Real& x : xs) scale = std::max(scale, Real(abs(x)));
  const auto rows = static_cast<Eigen::Index>(xs.size());
  const auto cols = static_cast<Eigen::Index>(degree + 1);
  Matrix<Real> V(rows, cols);
  Matrix<Real> rhs(rows, 2);
  for (Eigen::Index i = 0; i < rows; ++i) {
    Real u = xs[static_cast<std::size_t>(i)] / scale;
    Real p = 1;
    for (Eigen::Index j = 0; j < cols; ++j) {
      V(i, j) = p;
      p *= u;
    }
    rhs(i, 0) = ys[static_cast<std::size_t>(i)].real();
    rhs(i, 1) = ys[static_cast<std::size_t>(i)].imag();
  }
  Matrix<Real> sol = V.colPivHouseholderQr().solve(rhs);
  std::vector<Complex<Real>> out;
  Real unscale = 1;
  for (Eigen::Index j = 0; j < cols; ++j) {
    out.emplace_back(sol(j, 0) * unscale, sol(j, 1) * unscale);
    unscale /= scale;
  }
  return out;
}

template <class Real>
Complex<Real> richardson_limit(const std::vector<Real>& xs, const std::vector<Complex<Real>>& ys) {
  return polynomial_fit(xs, ys, static_cast<int>(xs.size()) - 1).front();
}

template <class Real>
Complex<Real> theta_radial_extrapolation(const ThetaSeries<Real>& series, const Rational& alpha) {
  VerticalTheta<Real> line(series, alpha);
  std::vector<Real> xs;
  std::vector<Complex<Real>> ys;
  for (int k = 0; k <= 6; ++k) {
    using std::pow;
    Real e = pow(Real(10), Real(-2) - Real(k) / 2);
    xs.push_back(e);
    ys.push_back(line(e).value);
  }
  return richardson_limit(xs, ys);
}

template <class Real>
std::vector<Complex<Real>> small_t_coefficients(const PeriodicFunction& f, int count) {
  if (count < 1 || count > 4) throw ConfigError("small_t_coefficients recovers 1..4 coefficients");
  const int degree = 7;
  std::vector<Real> xs;
  std::vector<Complex<Real>> ys;
  const Real c = to_real<Real>(f.scale());
  for (int j = 0; j <= degree; ++j) {
    using std::exp;
    Real s = Real(1e-3) / Real(1LL << j);
    // e^{-n^2 s} < 1e-90 beyond n_max
    auto n_max = static_cast<long long>(std::sqrt(210.0 / static_cast<double>(s))) + 1;
    CompensatedSum<Real, Real> sum;
    for (long long n = 1; n <= n_max; ++n)
      if (int sg = f.sign_at(n)) sum.add(Real(sg * n) * exp(-Real(n) * Real(n) * s));
    xs.push_back(s);
    ys.emplace_back(c * sum.value());
  }
  auto coef = polynomial_fit(xs, ys, degree);
  std::vector<Complex<Real>> out;
  Real fact = 1;
  for (int k = 0; k < count; ++k) {
    if (k > 0) fact *= k;
    out.push_back(coef[static_cast<std::size_t>(k)] * fact);
  }
  return out;
}

template <class Real>
Estimate<Real> eichler_vertical(const ChiParams& p, const Rational& x0, const Real& y0, const Complex<Real>& z,
                                const PrecisionContext<Real>& ctx) {
  require_coprime(p.s, p.t);
  Real xr = to_real<Real>(x0);
  bool on_line = z.real() == xr;
  if (on_line && z.imag() > y0) throw DomainError("Eichler path passes through z");
  if (on_line && z.imag() == y0 && y0 != Real(0)) throw DomainError("Eichler path starts at the singular point z");
  long long st = static_cast<long long>(p.s) * p.t;
  VerticalTheta<Real> line(make_theta<Real>(ThetaSpec{0, 4 * st, 0, chi_function(p)}), x0);
  const Complex<Real> i(0, 1);
  auto kernel = [&](const Real& y) {
    Complex<Real> tau(xr, y);
    return i * principal_pow(Complex<Real>(tau - z), Real(-1.5));
  };
  Estimate<Real> e = vertical_integral(line, y0, kernel, ctx);
  using std::sqrt;
  // sqrt(st i/(8 pi^2)) on the principal branch
  Real mod = sqrt(Real(st) / (8 * pi<Real>() * pi<Real>()));
  Complex<Real> pref = Complex<Real>(mod / sqrt(Real(2)), mod / sqrt(Real(2)));
  e.value *= pref;
  e.error *= mod;
  return e;
}

template <class Real>
Estimate<Real> phi_hat(const ChiParams& p, const GaussianRational& z, const PrecisionContext<Real>& ctx) {
  if (!(z.im < 0)) throw DomainError("Eichler integral needs Im z < 0");
  return eichler_vertical<Real>(p, z.re, to_real<Real>(Rational(-z.im)), z.value<Real>(), ctx);
}

template <class Real>
Estimate<Real> phi_hat_boundary(const ChiParams& p, const Rational& alpha, const PrecisionContext<Real>& ctx) {
  return eichler_vertical<Real>(p, alpha, Real(0), Complex<Real>(to_real<Real>(alpha)), ctx);
}

template <class Real>
Estimate<Real> period_function(const ChiParams& p, const GaussianRational& z, const Rational& alpha,
                               const PrecisionContext<Real>& ctx) {
  if (!(z.im < 0)) throw DomainError("period function needs Im z < 0");
  return eichler_vertical<Real>(p, alpha, Real(0), z.value<Real>(), ctx);
}

template <class Real>
IdentityCheck<Real> verify_modular_transform(int s, int t, IndexPair pair, const Complex<Real>& z) {
  require_coprime(s, t);
  long long b = 4LL * s * t;
  auto theta0 = [&](IndexPair q, const Complex<Real>& x) {
    return theta_upper_half(make_theta<Real>(ThetaSpec{0, b, 0, chi_function({s, t, q.n, q.m})}), x);
  };
  IdentityCheck<Real> out;
  auto lhs = theta0(pair, z);
  Complex<Real> w = Complex<Real>(-1) / z;
  using std::sqrt;
  Complex<Real> pref = sqrt(Complex<Real>(0, 1) / z);
  Complex<Real> rhs{};
  Real err = lhs.error;
  for (const auto& q : pair_set(s, t).pairs) {
    auto e = theta0(q, w);
    Real S = s_matrix_entry<Real>(s, t, pair, q);
    rhs += pref * S * e.value;
    using std::abs;
    err += abs(pref) * abs(S) * e.error;
  }
  out.lhs = lhs.value;
  out.rhs = rhs;
  out.residual = abs(lhs.value - rhs);
  out.error = err;
  out.note = "left-hand index read as (n,m)";
  return out;
}

template <class Real>
IdentityCheck<Real> verify_lift(int s, int t, IndexPair pair, int nu, const Complex<Real>& z) {
  require_coprime(s, t);
  long long st = static_cast<long long>(s) * t;
  TildeFunction tilde(chi_function({s, t, pair.n, pair.m}));
  auto lhs = theta_upper_half(make_theta<Real>(tilde, 0, 4 * (2 * st) * (2 * st), nu), Complex<Real>(Real(4 * st) * z));
  using std::abs;
  using std::sqrt;
  Real pref = -sqrt(Real(st) / Real(8));
  Complex<Real> rhs{};
  Real err = lhs.error;
  for (const auto& q : pair_set(s, t).pairs) {
    auto e = theta_upper_half(make_theta<Real>(ThetaSpec{0, 4 * st, nu, chi_function({s, t, q.n, q.m})}), z);
    Real w = pref * s_matrix_entry<Real>(s, t, q, pair);
    rhs += w * e.value;
    err += abs(w) * e.error;
  }
  return {lhs.value, rhs, abs(lhs.value - rhs), err, ""};
}

template <class Real>
IdentityCheck<Real> verify_period_relation(int s, int t, IndexPair pair, const GaussianRational& z,
                                           const PrecisionContext<Real>& ctx) {
  require_coprime(s, t);
  using std::abs;
  GaussianRational w = z.neg_inverse();
  Complex<Real> zc = z.value<Real>();
  Complex<Real> pref = principal_pow(Complex<Real>(Real(1) / (Complex<Real>(0, 1) * zc)), Real(1.5));
  auto head = phi_hat<Real>({s, t, pair.n, pair.m}, z, ctx);
  Complex<Real> lhs = head.value;
  Real err = head.error;
  for (const auto& q : pair_set(s, t).pairs) {
    auto e = phi_hat<Real>({s, t, q.n, q.m}, w, ctx);
    Real S = s_matrix_entry<Real>(s, t, pair, q);
    lhs += pref * S * e.value;
    err += abs(pref * S) * e.error;
  }
  auto r = period_function<Real>({s, t, pair.n, pair.m}, z, Rational(0), ctx);
  return {lhs, r.value, abs(lhs - r.value), err + r.error, ""};
}

template <class Real>
IdentityCheck<Real> verify_boundary_eichler(int s, int t, IndexPair pair, const Rational& alpha,
                                            const PrecisionContext<Real>& ctx) {
  require_coprime(s, t);
  using std::abs;
  auto lhs = phi_hat_boundary<Real>({s, t, pair.n, pair.m}, alpha, ctx);
  auto theta1 = make_theta<Real>(ThetaSpec{0, 4LL * s * t, 1, chi_function({s, t, pair.n, pair.m})});
  Complex<Real> rhs = theta_radial_limit(theta1, alpha) * Real(-0.5);
  return {lhs.value, rhs, abs(lhs.value - rhs), lhs.error, ""};
}

#define HRES_INSTANTIATE_QSERIES(Real)                                                                            \
  template struct ThetaSeries<Real>;                                                                              \
  template class VerticalTheta<Real>;                                                                             \
  template ThetaSeries<Real> make_theta<Real>(const ThetaSpec&);                                                 \
  template ThetaSeries<Real> make_theta<Real>(const TildeFunction&, long long, long long, int);                  \
  template Estimate<Real> theta_upper_half<Real>(const ThetaSeries<Real>&, const Complex<Real>&);                \
  template Complex<Real> theta_radial_limit<Real>(const ThetaSeries<Real>&, const Rational&);                    \
  template std::vector<Complex<Real>> polynomial_fit<Real>(const std::vector<Real>&,                             \
                                                           const std::vector<Complex<Real>>&, int);              \
  template Complex<Real> richardson_limit<Real>(const std::vector<Real>&, const std::vector<Complex<Real>>&);    \
  template Complex<Real> theta_radial_extrapolation<Real>(const ThetaSeries<Real>&, const Rational&);            \
  template std::vector<Complex<Real>> small_t_coefficients<Real>(const PeriodicFunction&, int);                 \
  template Estimate<Real> eichler_vertical<Real>(const ChiParams&, const Rational&, const Real&,                  \
                                                 const Complex<Real>&, const PrecisionContext<Real>&);           \
  template Estimate<Real> phi_hat<Real>(const ChiParams&, const GaussianRational&, const PrecisionContext<Real>&); \
  template Estimate<Real> phi_hat_boundary<Real>(const ChiParams&, const Rational&, const PrecisionContext<Real>&); \
  template Estimate<Real> period_function<Real>(const ChiParams&, const GaussianRational&, const Rational&,      \
                                                const PrecisionContext<Real>&);                                  \
  template IdentityCheck<Real> verify_modular_transform<Real>(int, int, IndexPair, const Complex<Real>&);        \
  template IdentityCheck<Real> verify_lift<Real>(int, int, IndexPair, int, const Complex<Real>&);                \
  template IdentityCheck<Real> verify_period_relation<Real>(int, int, IndexPair, const GaussianRational&,        \
                                                            const PrecisionContext<Real>&);                      \
  template IdentityCheck<Real> verify_boundary_eichler<Real>(int, int, IndexPair, const Rational&,               \
                                                             const PrecisionContext<Real>&);

HRES_INSTANTIATE_QSERIES(double)
HRES_INSTANTIATE_QSERIES(Real128)
HRES_INSTANTIATE_QSERIES(Real256)

}  // namespace hres
