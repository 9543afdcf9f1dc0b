#pragma once

// Header-only part of qseries: the kernel-generic vertical integral.

#include "hres/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace hres {

template <class Real, class Kernel>
Estimate<Real> vertical_integral(const VerticalTheta<Real>& line, const Real& y0, Kernel&& kernel,
                                 const PrecisionContext<Real>& ctx) {
  using std::abs;
  using std::exp;
  using std::log;
  const auto& ser = line.series();
  const Real tol = ctx.tolerance;
  const Real noise_factor = Real(64) * eps<Real>();

  // |theta K| y at height y: the integrand after y = e^u, and its rounding floor.
  auto weighted = [&](const Real& y, Real& floor) {
    auto s = line(y);
    Complex<Real> k = kernel(y);
    floor = noise_factor * s.abs_sum * abs(k) * y;
    return Complex<Real>(s.value * k * y);
  };

  long long n0 = ser.leading_index();
  Real rate = 2 * pi<Real>() * Real(n0 * n0 - ser.a) / Real(ser.b);
  Real y_hi = y0 > Real(1) ? Real(2 * y0) : Real(2);
  for (int i = 0;; ++i) {
    auto s = line(y_hi);
    Real tail = s.abs_sum * abs(kernel(y_hi)) / rate;
    if (tail < tol / 16) break;
    if (i > 200) throw ConsistencyError("vertical integral: no decay at large height");
    y_hi *= 2;
  }

  Real y_lo = y0;
  Real cutoff_err = 0;
  if (y0 == Real(0)) {
    // Walk down until three consecutive halvings sit below tolerance or the rounding floor.
    Real y = std::min(Real(1), y_hi / 2);
    int quiet = 0;
    while (true) {
      Real floor;
      Real g = abs(weighted(y, floor));
      Real bar = std::max(Real(tol / 16), floor);
      quiet = g <= bar ? quiet + 1 : 0;
      if (quiet >= 3) {
        y_lo = y;
        cutoff_err = bar;
        break;
      }
      y /= 2;
      if (y < Real(1e-8)) throw ConsistencyError("vertical integral: series does not vanish at the boundary point");
    }
  }

  Real worst_floor = 0;
  auto g = [&](const Real& u) {
    Real floor;
    Complex<Real> v = weighted(exp(u), floor);
    if (floor > worst_floor) worst_floor = floor;
    return v;
  };
  Real u_lo = log(y_lo);
  Real u_hi = log(y_hi);
  std::vector<Real> cuts;
  for (long long c = static_cast<long long>(std::floor(static_cast<double>(u_lo))) + 1;
       Real(c) < u_hi; ++c)
    cuts.push_back(Real(c));
  QuadratureOptions opts;
  opts.max_panels = ctx.max_panels;
  Estimate<Real> out = integrate<Real>(g, u_lo, u_hi, Real(tol / 2), opts, cuts);
  out.error += cutoff_err + tol / 16 + worst_floor * (u_hi - u_lo);
  return out;
}

}  // namespace hres
