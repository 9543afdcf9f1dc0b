#pragma once

#include "hres/borel.hpp"
#include "hres/exact.hpp"
#include "hres/numeric.hpp"
#include "hres/qseries.hpp"

namespace hres {

enum class Side { plus, minus, median };

template <class Real>
struct LateralResult {
  Complex<Real> value{};
  Real error{0};
  Side side = Side::median;
  Complex<Real> x{};
  bool converged = true;
  long long head_terms = 0;  // l-terms evaluated individually before the asymptotic tail
};

// J(X) = int_0^{e^{i theta} inf} e^{-X u} (1-u)^{-5/2} du along the ray of signed angle theta.
template <class Real>
Estimate<Real> ray_integral(const Complex<Real>& X, const Real& theta, const Real& tol, int max_panels = 4000);

// S^{+-}(x) = C_M + (3cM/pi^2) sum f~(l)/l^2 J^{+-}(b l^2 pi^2 x/M^2); side must be plus or minus.
template <class Real>
LateralResult<Real> lateral_sum(const FormalSeries& series, const Complex<Real>& x, Side side,
                                const PrecisionContext<Real>& ctx);

// S^med(x) = C_M + (4Mc/pi^{3/2}) sum f~(l)/l^2 (E(l pi sqrt(bx)/M) - 1/(2 sqrt pi)), Re x > 0.
template <class Real>
LateralResult<Real> median_sum(const FormalSeries& series, const Complex<Real>& x, const PrecisionContext<Real>& ctx);

template <class Real>
struct Discontinuity {
  Estimate<Real> numeric;
  Estimate<Real> closed_form;
};

// 2i (2 b pi x)^{3/2} (sqrt2 c/M^2) theta^{(1)}_{0,4M^2,f~} at tau = 2 pi i b x.
template <class Real>
Estimate<Real> discontinuity_closed_form(const FormalSeries& series, const Complex<Real>& x);

template <class Real>
Discontinuity<Real> discontinuity(const FormalSeries& series, const Complex<Real>& x, const PrecisionContext<Real>& ctx);

// S^med(-1/(2 pi i alpha)) from the imaginary-axis integral plus the theta^{(1)} radial term.
template <class Real>
Estimate<Real> boundary_median(const FormalSeries& series, const Rational& alpha, const PrecisionContext<Real>& ctx);

// Interior oracle: Richardson extrapolation of median_sum at -1/(2 pi i alpha) + eps,
// eps = s 10^{-3-k/2}, k = 0..4, to eps = 0 (polynomial in eps); s <= 1 shrinks with the
// period of the boundary phase.
template <class Real>
Complex<Real> boundary_median_extrapolation(const FormalSeries& series, const Rational& alpha,
                                            const PrecisionContext<Real>& ctx);

// (2Mc/pi^2) sum_{l>=1} f~(l)/l^2, which equals C_M.
template <class Real>
Estimate<Real> constant_from_tilde(const FormalSeries& series, const PrecisionContext<Real>& ctx);

// Both ray integrals of e^{-px}(1-p)^{-5/2} against -4/3 + (8/3) sqrt(pi) E(sqrt x).
template <class Real>
IdentityCheck<Real> two_ray_identity(const Complex<Real>& x, const PrecisionContext<Real>& ctx);

template <class Real>
struct Truncation {
  Complex<Real> value{};
  Real first_omitted{0};
  int order = 0;  // N*: terms a_0 .. a_{N*} summed
};

// Optimally truncated sum_{n <= N*} a_n x^{-n}, N* just before the smallest term.
template <class Real>
Truncation<Real> optimal_truncation(const FormalSeries& series, const Complex<Real>& x);

}  // namespace hres
