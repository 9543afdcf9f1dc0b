#pragma once

#include "hres/exact.hpp"
#include "hres/numeric.hpp"
#include "hres/periodic.hpp"

#include <string>
#include <vector>

namespace hres {

class NoLimitError : public DomainError {
 public:
  using DomainError::DomainError;
};

// sum_{n>=0} n^nu f(n) q^{(n^2-a)/b} with f given by one period of real values.
template <class Real>
struct ThetaSeries {
  long long a = 0;
  long long b = 1;
  int nu = 1;
  std::vector<Real> coeff;

  long long period() const { return static_cast<long long>(coeff.size()); }
  const Real& at(long long n) const {
    long long r = n % period();
    if (r < 0) r += period();
    return coeff[static_cast<std::size_t>(r)];
  }
  // Smallest n >= 1 with a nonzero coefficient and n^2 > a; sets the decay rate at large Im x.
  long long leading_index() const;
};

template <class Real>
ThetaSeries<Real> make_theta(const ThetaSpec& spec);

// Theta series with coefficients f~ (scale c not included).
template <class Real>
ThetaSeries<Real> make_theta(const TildeFunction& tilde, long long a, long long b, int nu);

// Direct evaluation at x in the upper half plane, truncated by a Gaussian tail bound.
template <class Real>
Estimate<Real> theta_upper_half(const ThetaSeries<Real>& series, const Complex<Real>& x);

// Evaluates the series on the vertical line x0 + i y with rational x0; the phases
// e^{2 pi i x0 (n^2-a)/b} come from a table indexed by exact residues.
template <class Real>
class VerticalTheta {
 public:
  VerticalTheta(ThetaSeries<Real> series, const Rational& x0);

  // Value and sum of term magnitudes at height y > 0.
  struct Sample {
    Complex<Real> value;
    Real abs_sum;
  };
  Sample operator()(const Real& y) const;

  const ThetaSeries<Real>& series() const { return series_; }
  const Rational& x0() const { return x0_; }

 private:
  ThetaSeries<Real> series_;
  Rational x0_;
  long long modulus_ = 1;  // b * den(x0)
  long long numer_ = 0;    // num(x0), reduced mod modulus
  std::vector<Complex<Real>> roots_;
};

// lim_{y->0+} of the series at alpha + i y, as the L-value of the twisted coefficient
// h(n) = f(n) e^{2 pi i alpha (n^2-a)/b}: -(P/2) sum h(m) B_2(m/P) for nu = 1,
// h(0) - sum h(m) B_1(m/P) for nu = 0. Throws NoLimitError when h has nonzero mean.
template <class Real>
Complex<Real> theta_radial_limit(const ThetaSeries<Real>& series, const Rational& alpha);

// Polynomial through (xs, ys) by least squares of the given degree; coefficient k multiplies x^k.
template <class Real>
std::vector<Complex<Real>> polynomial_fit(const std::vector<Real>& xs, const std::vector<Complex<Real>>& ys,
                                          int degree);

// Value at x = 0 of the interpolating polynomial (Richardson extrapolation for integer-power expansions).
template <class Real>
Complex<Real> richardson_limit(const std::vector<Real>& xs, const std::vector<Complex<Real>>& ys);

// Radial-limit oracle: Richardson extrapolation of the series along alpha + i eps,
// eps geometric from 1e-2 down to 1e-5.
template <class Real>
Complex<Real> theta_radial_extrapolation(const ThetaSeries<Real>& series, const Rational& alpha);

// Oracle for the coefficients C_k: sum_{n>=1} n f(n) e^{-n^2 s} ~ sum_k C_k s^k/k! as s -> 0+,
// fitted by a degree-7 polynomial on s = 1e-3 * 2^{-j}, j = 0..7. Returns C_0..C_{count-1}, count <= 4.
template <class Real>
std::vector<Complex<Real>> small_t_coefficients(const PeriodicFunction& f, int count);

// int_{y0}^{inf} theta(x0 + i y) K(y) dy along a vertical line. With y0 = 0 the series
// must vanish to all orders at x0; the lower cutoff is chosen where the integrand has
// decayed below the tolerance. Integrates in log y.
template <class Real, class Kernel>
Estimate<Real> vertical_integral(const VerticalTheta<Real>& line, const Real& y0, Kernel&& kernel,
                                 const PrecisionContext<Real>& ctx);

// z = re + i im with rational components, so -1/z and the vertical paths keep exact phases.
struct GaussianRational {
  Rational re;
  Rational im;

  template <class Real>
  Complex<Real> value() const {
    return {to_real<Real>(re), to_real<Real>(im)};
  }
  GaussianRational neg_inverse() const {
    Rational n = re * re + im * im;
    return {-re / n, im / n};
  }
};

// sqrt(st i/(8 pi^2)) int_{x0+i y0}^{x0+i inf} theta^{(0)}_{0,4st,chi}(tau) (tau-z)^{-3/2} dtau.
template <class Real>
Estimate<Real> eichler_vertical(const ChiParams& p, const Rational& x0, const Real& y0, const Complex<Real>& z,
                                const PrecisionContext<Real>& ctx);

// Non-holomorphic Eichler integral for Im z < 0 (path from conj z).
template <class Real>
Estimate<Real> phi_hat(const ChiParams& p, const GaussianRational& z, const PrecisionContext<Real>& ctx);

// Boundary value at a rational alpha (path from alpha itself).
template <class Real>
Estimate<Real> phi_hat_boundary(const ChiParams& p, const Rational& alpha, const PrecisionContext<Real>& ctx);

// Period function r(z; alpha), path from alpha.
template <class Real>
Estimate<Real> period_function(const ChiParams& p, const GaussianRational& z, const Rational& alpha,
                               const PrecisionContext<Real>& ctx);

template <class Real>
struct IdentityCheck {
  Complex<Real> lhs;
  Complex<Real> rhs;
  Real residual{0};
  Real error{0};  // combined error estimate of both sides
  std::string note;
};

// theta^{(0)}_{0,4st,chi^{(n,m)}}(z) against sqrt(i/z) sum_{(n',m')} S theta^{(0)}_{0,4st,chi^{(n',m')}}(-1/z).
template <class Real>
IdentityCheck<Real> verify_modular_transform(int s, int t, IndexPair pair, const Complex<Real>& z);

// theta^{(nu)}_{0,4(2st)^2,chi~}(4st z) against -sqrt(st/8) sum S theta^{(nu)}_{0,4st,chi^{(n',m')}}(z).
template <class Real>
IdentityCheck<Real> verify_lift(int s, int t, IndexPair pair, int nu, const Complex<Real>& z);

// Phi(z) + (1/(iz))^{3/2} sum S Phi^{(n',m')}(-1/z) against r(z; 0), for Im z < 0.
template <class Real>
IdentityCheck<Real> verify_period_relation(int s, int t, IndexPair pair, const GaussianRational& z,
                                           const PrecisionContext<Real>& ctx);

// Phi(alpha) against -(1/2) theta^{(1)}_{0,4st,chi}(alpha).
template <class Real>
IdentityCheck<Real> verify_boundary_eichler(int s, int t, IndexPair pair, const Rational& alpha,
                                            const PrecisionContext<Real>& ctx);

}  // namespace hres

#include "hres/qseries_impl.hpp"
