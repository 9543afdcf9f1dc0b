#pragma once

#include "hres/numeric.hpp"
#include "hres/periodic.hpp"

#include <vector>

namespace hres {

// Parameters (a, b, nu, f) of sum_{n>=0} n^nu f(n) q^{(n^2-a)/b}.
struct ThetaSpec {
  long long a = 0;
  long long b = 1;
  int nu = 1;
  PeriodicFunction f;
};

// B_k with B_1 = -1/2; cached, safe for concurrent readers.
Rational bernoulli_number(int k);
Rational bernoulli_polynomial(int k, const Rational& x);

// L(-2n-1, f) = -(M^{2n+1}/(2n+2)) sum_{m=1}^{M} f(m) B_{2n+2}(m/M).
Rational l_value(const PeriodicFunction& f, int n);

class FormalSeries {
 public:
  FormalSeries(ThetaSpec spec, std::vector<Rational> C, Rational constant);

  const ThetaSpec& theta() const { return spec_; }
  const PeriodicFunction& f() const { return spec_.f; }
  long long b() const { return spec_.b; }
  int period() const { return spec_.f.period(); }
  const Rational& scale() const { return spec_.f.scale(); }

  std::size_t size() const { return C_.size(); }
  const Rational& C(std::size_t n) const { return C_.at(n); }
  const std::vector<Rational>& coefficients() const { return C_; }
  // a_n = C_n / (n! b^n), the coefficient of x^{-n}.
  Rational a(std::size_t n) const;
  const Rational& constant() const { return C_M_; }

 private:
  ThetaSpec spec_;
  std::vector<Rational> C_;
  Rational C_M_;
};

// C_n = (-1)^n L(-2n-1, f) for n < count; C_M cross-checked against C_0.
FormalSeries series_coefficients(const ThetaSpec& spec, int count = 64);

struct GevreyFit {
  double A = 0;
  double B = 0;
  double log_exponent = 0;  // fitted power of n
  double rms_residual = 0;
  double radius() const { return 1.0 / B; }
};

// Least squares of log(|a_n|/n!) = log A + n log B + gamma log n over nonzero a_n.
GevreyFit gevrey_estimate(const FormalSeries& series, int count);

template <class Real>
struct GeneratingResidual {
  Real y{0};
  Real lhs{0};
  Real rhs{0};
  Real residual{0};
  Real tail_bound{0};  // bound on the omitted Bernoulli terms
  int terms = 0;
};

// (1/(My)) sum_m f(m) sum_n B_{2n+2}(m/M) (iMy)^{2n+2}/(2n+2)! against
// -2c sin((k2-k1)y/2) sin((M-k1-k2)y/2)/sin(My/2); needs 0 < |y| < 2 pi/M.
template <class Real>
GeneratingResidual<Real> generating_identity(const PeriodicFunction& f, const Real& y, const Real& tol);

}  // namespace hres
