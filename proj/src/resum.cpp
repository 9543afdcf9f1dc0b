#include "hres/resum.hpp"

#include "hres/quadrature.hpp"
#include "hres/special.hpp"

#include <cmath>
#include <numeric>
#include <type_traits>

namespace hres {

namespace {

// Everything the l-sums need from a series, at working precision.
template <class Real>
struct SumSetup {
  TildeFunction tilde;
  Real M;
  Real b;
  Real c;
  Real kappa;  // b pi^2 / M^2, so X_l = kappa x l^2
  Real pref;   // 3 c M / pi^2
  Real fmax;   // max |f~|
  std::vector<Real> table;

  explicit SumSetup(const FormalSeries& s) : tilde(s.f()) {
    M = Real(s.period());
    b = Real(s.b());
    c = to_real<Real>(s.scale());
    Real p = pi<Real>();
    kappa = b * p * p / (M * M);
    pref = 3 * c * M / (p * p);
    table = tilde.template table<Real>();
    fmax = 0;
    using std::abs;
    for (const Real& v : table)
      if (abs(v) > fmax) fmax = abs(v);
  }
  const Real& f(long long l) const { return table[static_cast<std::size_t>(l % tilde.period())]; }
};

// Where the asymptotic l-tail takes over, with the Watson order and ray used for its bound.
struct TailPlan {
  long long L = 1;
  int K = 0;
  double theta = 0;
  double log_bound = 0;
  bool converged = true;
};

double ray_stretch(double theta) {
  double a = std::abs(theta);
  return a < M_PI / 2 ? 1 / std::sin(a) : 1.0;
}

// sum_{l>=L} |f~|/l^2 |J(w l^2) - Watson_K| <= fmax (5/2)_K s^{K+5/2} rho^{-K-1} sum l^{-2K-4},
// rho = Re(w e^{i theta}); the median adds the half jump (4 sqrt(pi)/3) |w|^{3/2} l e^{-Re(w) l^2}.
TailPlan plan_tail(std::complex<double> w, Side side, double fmax, double log_tol, long long max_L) {
  const int kGrid = 512;
  double best_q = HUGE_VAL;
  double best_theta = 0;
  for (int j = 1; j < kGrid; ++j) {
    double frac = static_cast<double>(j) / kGrid;
    for (int sign : {1, -1}) {
      if (side == Side::plus && sign < 0) continue;
      if (side == Side::minus && sign > 0) continue;
      double th = sign * M_PI * frac;
      double rho = (w * std::polar(1.0, th)).real();
      if (rho <= 0) continue;
      double q = ray_stretch(th) / rho;
      if (q < best_q) {
        best_q = q;
        best_theta = th;
      }
    }
  }
  if (!std::isfinite(best_q)) throw DomainError("no admissible Laplace ray for this x");
  double s = ray_stretch(best_theta);
  double rho = (w * std::polar(1.0, best_theta)).real();
  double log_f = std::log(std::max(fmax, 1e-300));
  double re_w = w.real();

  auto jump_ok = [&](long long L) {
    if (side != Side::median) return true;
    if (re_w <= 0) return false;
    if (static_cast<double>(L) < 1 / std::sqrt(2 * re_w)) return false;
    double lb = log_f + std::log(4 * std::sqrt(M_PI) / 3) + 1.5 * std::log(std::abs(w)) +
                std::log(static_cast<double>(L) + 1 / (2 * re_w)) - re_w * static_cast<double>(L) * L;
    return lb <= log_tol - std::log(8.0);
  };

  TailPlan plan;
  plan.theta = best_theta;
  for (long long L = 1;; L += 1 + L / 16) {
    double best = HUGE_VAL;
    int bestK = 0;
    double lnL = std::log(static_cast<double>(L));
    for (int K = 0; K <= 400; ++K) {
      double p = 2.0 * K + 4;
      double z1 = -p * lnL, z2 = (1 - p) * lnL - std::log(p - 1);
      double z = std::max(z1, z2) + std::log1p(std::exp(-std::abs(z1 - z2)));
      double lb = log_f + std::lgamma(K + 2.5) - std::lgamma(2.5) + (K + 2.5) * std::log(s) - (K + 1) * std::log(rho) + z;
      if (lb < best) {
        best = lb;
        bestK = K;
      }
    }
    plan.L = L;
    plan.K = bestK;
    plan.log_bound = best;
    if (best <= log_tol - std::log(4.0) && jump_ok(L)) return plan;
    if (L > max_L) {
      plan.converged = false;
      return plan;
    }
  }
}

// sum_{l>=L} f~(l)/l^2 sum_{k<K} (5/2)_k/(w l^2)^{k+1} by Dirichlet tails of order 2k+4.
// (5/2)_k/w^{k+1} and l^{-2k-4} leave the double exponent range when w is small, so double runs wide.
template <class Real>
using tail_work_t = std::conditional_t<std::is_same_v<Real, double>, Real128, Real>;

template <class Real>
Estimate<Real> watson_tail(const SumSetup<Real>& st, const Complex<Real>& w_in, const TailPlan& plan, const Real& tol_in,
                           const PrecisionContext<Real>& ctx) {
  using W = tail_work_t<Real>;
  using std::abs;
  const Complex<W> w(W(w_in.real()), W(w_in.imag()));
  const W tol(tol_in);
  PrecisionContext<W> local;
  local.max_panels = ctx.max_panels;
  local.max_terms = ctx.max_terms;
  local.ray_angle = ctx.ray_angle;
  Complex<W> value{};
  W error{0};
  bool converged = true;
  Complex<W> coef = Complex<W>(1) / w;  // (5/2)_k / w^{k+1}
  for (int k = 0; k < plan.K; ++k) {
    W mag = abs(coef);
    local.tolerance = mag > 0 ? W(tol / (8 * W(plan.K) * mag)) : W(1);
    Estimate<W> t = tilde_dirichlet_tail(st.tilde, 2 * k + 4, plan.L, local);
    value += coef * t.value;
    error += mag * t.error;
    converged = converged && t.converged;
    coef *= (W(2 * k + 5) / 2) / w;
  }
  using std::exp;
  error += W(exp(plan.log_bound)) + W(plan.K) * W(eps<Real>()) * abs(value);
  Estimate<Real> out;
  out.value = Complex<Real>(static_cast<Real>(value.real()), static_cast<Real>(value.imag()));
  out.error = static_cast<Real>(error);
  out.converged = converged;
  return out;
}

template <class Real>
Complex<Real> scaled_x(const SumSetup<Real>& st, const Complex<Real>& x) {
  return st.kappa * x;
}

template <class Real>
double log_of(const Real& v) {
  using std::log;
  return static_cast<double>(log(v));
}

}  // namespace

template <class Real>
Estimate<Real> ray_integral(const Complex<Real>& X, const Real& theta, const Real& tol, int max_panels) {
  using std::abs;
  using std::cos;
  using std::exp;
  using std::log;
  using std::sin;
  const Complex<Real> dir(cos(theta), sin(theta));
  const Real rho = (X * dir).real();
  if (!(rho > 0)) throw DomainError("Laplace ray does not converge for this x");
  const Real s = abs(theta) < pi<Real>() / 2 ? Real(1 / sin(abs(theta))) : Real(1);
  using std::pow;
  using std::sqrt;
  const Real s52 = s * s * sqrt(s);
  Real R = log(4 * s52 / (rho * tol)) / rho;
  if (R < Real(4)) R = 4;
  std::vector<Real> cuts{cos(theta) > 0 ? Real(cos(theta)) : Real(1) / 2};
  for (Real c = 1; c < R; c *= 2) cuts.push_back(c);
  auto f = [&](const Real& r) {
    Complex<Real> u = r * dir;
    return Complex<Real>(exp(-X * u) * principal_pow(Complex<Real>(Real(1) - u), Real(-2.5)) * dir);
  };
  QuadratureOptions opts;
  opts.max_panels = max_panels;
  Estimate<Real> e = integrate<Real>(f, Real(0), R, tol / 2, opts, cuts);
  e.error += s52 * exp(-rho * R) / rho;
  return e;
}

template <class Real>
LateralResult<Real> lateral_sum(const FormalSeries& series, const Complex<Real>& x, Side side,
                                const PrecisionContext<Real>& ctx) {
  if (side == Side::median) return median_sum(series, x, ctx);
  using std::abs;
  SumSetup<Real> st(series);
  const Real theta = Real(side == Side::plus ? ctx.ray_angle : -ctx.ray_angle);
  const Complex<Real> w = scaled_x(st, x);
  {
    using std::cos;
    using std::sin;
    if (!((w * Complex<Real>(cos(theta), sin(theta))).real() > 0))
      throw DomainError("lateral sum: Re(e^{+-i theta} x) must be positive");
  }
  const Real tol = ctx.tolerance / abs(st.pref);
  std::complex<double> wd(static_cast<double>(w.real()), static_cast<double>(w.imag()));
  TailPlan plan = plan_tail(wd, side, static_cast<double>(st.fmax), log_of(Real(tol / 2)), ctx.max_terms);

  LateralResult<Real> out;
  out.side = side;
  out.x = x;
  long long nonzero = 0;
  for (long long l = 1; l < plan.L; ++l)
    if (st.f(l) != Real(0)) ++nonzero;
  Real per_term = tol / (4 * Real(std::max<long long>(1, nonzero)));
  CompensatedSum<Complex<Real>, Real> head;
  Real err = 0;
  for (long long l = 1; l < plan.L; ++l) {
    const Real& fl = st.f(l);
    if (fl == Real(0)) continue;
    Real l2 = Real(l) * Real(l);
    Estimate<Real> J = ray_integral(Complex<Real>(w * l2), theta, Real(per_term * l2 / abs(fl)), ctx.max_panels);
    head.add(fl / l2 * J.value);
    err += abs(fl) / l2 * J.error;
    out.converged = out.converged && J.converged;
  }
  Estimate<Real> tail = watson_tail(st, w, plan, tol / 4, ctx);
  out.value = to_real<Real>(series.constant()) + st.pref * (head.value() + tail.value);
  out.error = abs(st.pref) * (err + head.rounding_error() + tail.error);
  out.converged = out.converged && tail.converged && plan.converged;
  out.head_terms = plan.L - 1;
  return out;
}

template <class Real>
LateralResult<Real> median_sum(const FormalSeries& series, const Complex<Real>& x, const PrecisionContext<Real>& ctx) {
  if (!(x.real() > 0)) throw DomainError("median sum needs Re x > 0");
  using std::abs;
  using std::sqrt;
  SumSetup<Real> st(series);
  const Complex<Real> w = scaled_x(st, x);
  const Real tol = ctx.tolerance / abs(st.pref);
  std::complex<double> wd(static_cast<double>(w.real()), static_cast<double>(w.imag()));
  TailPlan plan = plan_tail(wd, Side::median, static_cast<double>(st.fmax), log_of(Real(tol / 2)), ctx.max_terms);

  LateralResult<Real> out;
  out.side = Side::median;
  out.x = x;
  const Complex<Real> root = sqrt(w);
  const Real weight = 4 * sqrt(pi<Real>()) / 3;  // J_med(X) = (4 sqrt(pi)/3) E_shifted(sqrt X)
  CompensatedSum<Complex<Real>, Real> head;
  for (long long l = 1; l < plan.L; ++l) {
    const Real& fl = st.f(l);
    if (fl == Real(0)) continue;
    Real l2 = Real(l) * Real(l);
    head.add(fl / l2 * weight * special_e_shifted(Complex<Real>(Real(l) * root)));
  }
  Estimate<Real> tail = watson_tail(st, w, plan, tol / 4, ctx);
  out.value = to_real<Real>(series.constant()) + st.pref * (head.value() + tail.value);
  out.error = abs(st.pref) * (head.rounding_error() + tail.error);
  out.converged = tail.converged && plan.converged;
  out.head_terms = plan.L - 1;
  return out;
}

template <class Real>
Estimate<Real> discontinuity_closed_form(const FormalSeries& series, const Complex<Real>& x) {
  using std::abs;
  using std::sqrt;
  SumSetup<Real> st(series);
  long long M = series.period();
  auto theta = make_theta<Real>(st.tilde, 0, 4 * M * M, 1);
  Complex<Real> tau = Complex<Real>(0, 2) * pi<Real>() * st.b * x;
  Estimate<Real> th = theta_upper_half(theta, tau);
  Complex<Real> pref = Complex<Real>(0, 2) * principal_pow(Complex<Real>(2 * st.b * pi<Real>() * x), Real(1.5)) *
                       (sqrt(Real(2)) * st.c / (st.M * st.M));
  return {pref * th.value, abs(pref) * th.error, th.converged};
}

template <class Real>
Discontinuity<Real> discontinuity(const FormalSeries& series, const Complex<Real>& x, const PrecisionContext<Real>& ctx) {
  auto plus = lateral_sum(series, x, Side::plus, ctx);
  auto minus = lateral_sum(series, x, Side::minus, ctx);
  Discontinuity<Real> d;
  d.numeric = {plus.value - minus.value, plus.error + minus.error, plus.converged && minus.converged};
  d.closed_form = discontinuity_closed_form(series, x);
  return d;
}

template <class Real>
Estimate<Real> boundary_median(const FormalSeries& series, const Rational& alpha, const PrecisionContext<Real>& ctx) {
  if (alpha == 0) throw DomainError("boundary median needs alpha != 0");
  using std::abs;
  using std::sqrt;
  SumSetup<Real> st(series);
  long long M = series.period();
  const Complex<Real> i(0, 1);
  const Real a = to_real<Real>(alpha);
  const Complex<Real> ia = i * a;

  // First part: imaginary-axis integral of theta^{(0)}_{0,4M^2,f~}(b i y)/(1/alpha + i y)^{3/2} i dy, in y' = b y.
  Complex<Real> pref1 = st.c * st.b * Complex<Real>(sqrt(Real(2)) / 2, sqrt(Real(2)) / 2) /
                        (st.M * pi<Real>() * principal_pow(ia, Real(1.5)));
  VerticalTheta<Real> line(make_theta<Real>(st.tilde, 0, 4 * M * M, 0), Rational(0));
  auto kernel = [&](const Real& y) {
    Complex<Real> d = Complex<Real>(Real(1) / a, y / st.b);
    return Complex<Real>(i / (st.b * principal_pow(d, Real(1.5))));
  };
  PrecisionContext<Real> local = ctx;
  local.tolerance = ctx.tolerance / (2 * abs(pref1));
  Estimate<Real> I = vertical_integral(line, Real(0), kernel, local);

  // Second part: radial limit of theta^{(1)}_{0,4M^2,f~} at -b/alpha.
  Complex<Real> pref2 = principal_pow(Complex<Real>(st.b / ia), Real(1.5)) * (sqrt(Real(2)) * st.c / (st.M * st.M));
  Complex<Real> radial =
      theta_radial_limit(make_theta<Real>(st.tilde, 0, 4 * M * M, 1), Rational(-Rational(series.b()) / alpha));
  Estimate<Real> out;
  out.value = pref1 * I.value + pref2 * radial;
  out.error = abs(pref1) * I.error + Real(64) * eps<Real>() * abs(pref2 * radial);
  out.converged = I.converged;
  return out;
}

template <class Real>
Complex<Real> boundary_median_extrapolation(const FormalSeries& series, const Rational& alpha,
                                            const PrecisionContext<Real>& ctx) {
  const Real a = to_real<Real>(alpha);
  const Complex<Real> x0(0, 1 / (2 * pi<Real>() * a));
  std::vector<Real> xs;
  std::vector<Complex<Real>> ys;
  // Near alpha the theta coefficients carry the phase e(n^2 b/(4 M^2 alpha)); with P the joint
  // period of that phase and f~, the eps^k coefficients grow like P^{2k}. The ladder starts at
  // 1e-3 for P <= 24 and shrinks as P^{-2} beyond.
  long long M = series.period();
  Rational r = Rational(series.b()) / (alpha * 4 * M * M);
  long long den = mp::denominator(r).convert_to<long long>();
  long long P = std::lcm(2 * M, den);
  double shrink = P <= 24 ? 1.0 : std::pow(24.0 / static_cast<double>(P), 2);
  for (int k = 0; k <= 4; ++k) {
    double e = shrink * std::pow(10.0, -3.0 - 0.5 * k);
    xs.push_back(Real(e));
    ys.push_back(median_sum(series, Complex<Real>(x0 + Real(e)), ctx).value);
  }
  return richardson_limit(xs, ys);
}

template <class Real>
Estimate<Real> constant_from_tilde(const FormalSeries& series, const PrecisionContext<Real>& ctx) {
  using std::abs;
  SumSetup<Real> st(series);
  Real pref = 2 * st.M * st.c / (pi<Real>() * pi<Real>());
  PrecisionContext<Real> local = ctx;
  local.tolerance = ctx.tolerance / abs(pref);
  Estimate<Real> d = tilde_dirichlet_sum(st.tilde, 2, local);
  return {pref * d.value, abs(pref) * d.error, d.converged};
}

template <class Real>
IdentityCheck<Real> two_ray_identity(const Complex<Real>& x, const PrecisionContext<Real>& ctx) {
  using std::abs;
  using std::sqrt;
  Real theta = Real(ctx.ray_angle);
  auto up = ray_integral(x, theta, ctx.tolerance / 4, ctx.max_panels);
  auto down = ray_integral(x, Real(-theta), ctx.tolerance / 4, ctx.max_panels);
  Complex<Real> rhs = Real(-4) / 3 + Real(8) / 3 * sqrt(pi<Real>()) * special_e(Complex<Real>(sqrt(x)));
  Complex<Real> lhs = up.value + down.value;
  return {lhs, rhs, abs(lhs - rhs), up.error + down.error, ""};
}

template <class Real>
Truncation<Real> optimal_truncation(const FormalSeries& series, const Complex<Real>& x) {
  using std::abs;
  Truncation<Real> out;
  Complex<Real> xinv = Complex<Real>(1) / x;
  Complex<Real> power(1);
  Real prev = -1;
  for (std::size_t n = 0; n < series.size(); ++n) {
    Complex<Real> term = to_real<Real>(series.a(n)) * power;
    Real mag = abs(term);
    // stop before the first term that grows past its predecessor
    if (n >= 2 && prev > 0 && mag > prev) {
      out.first_omitted = mag;
      return out;
    }
    out.value += term;
    out.order = static_cast<int>(n);
    if (mag > 0) prev = mag;
    power *= xinv;
  }
  throw ConfigError("optimal truncation: series too short to reach the smallest term");
}

#define HRES_INSTANTIATE_RESUM(Real)                                                                            \
  template Estimate<Real> ray_integral<Real>(const Complex<Real>&, const Real&, const Real&, int);               \
  template LateralResult<Real> lateral_sum<Real>(const FormalSeries&, const Complex<Real>&, Side,               \
                                                 const PrecisionContext<Real>&);                                \
  template LateralResult<Real> median_sum<Real>(const FormalSeries&, const Complex<Real>&,                      \
                                                const PrecisionContext<Real>&);                                 \
  template Estimate<Real> discontinuity_closed_form<Real>(const FormalSeries&, const Complex<Real>&);           \
  template Discontinuity<Real> discontinuity<Real>(const FormalSeries&, const Complex<Real>&,                   \
                                                   const PrecisionContext<Real>&);                              \
  template Estimate<Real> boundary_median<Real>(const FormalSeries&, const Rational&, const PrecisionContext<Real>&); \
  template Complex<Real> boundary_median_extrapolation<Real>(const FormalSeries&, const Rational&,              \
                                                             const PrecisionContext<Real>&);                    \
  template Estimate<Real> constant_from_tilde<Real>(const FormalSeries&, const PrecisionContext<Real>&);        \
  template IdentityCheck<Real> two_ray_identity<Real>(const Complex<Real>&, const PrecisionContext<Real>&);     \
  template Truncation<Real> optimal_truncation<Real>(const FormalSeries&, const Complex<Real>&);

HRES_INSTANTIATE_RESUM(double)
HRES_INSTANTIATE_RESUM(Real128)
HRES_INSTANTIATE_RESUM(Real256)

}  // namespace hres
