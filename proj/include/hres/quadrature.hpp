#pragma once

#include "hres/numeric.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <queue>
#include <vector>

namespace hres {

template <class Real>
struct Panel {
  Real lo;
  Real hi;
  Complex<Real> kronrod;
  Real error;
};

// One G7/K15 panel of a complex-valued integrand on [lo, hi].
template <class Real, class F>
Panel<Real> gk15_panel(F& f, const Real& lo, const Real& hi) {
  using boost::math::quadrature::gauss;
  using boost::math::quadrature::gauss_kronrod;
  static const auto& xk = gauss_kronrod<Real, 15>::abscissa();
  static const auto& wk = gauss_kronrod<Real, 15>::weights();
  static const auto& wg = gauss<Real, 7>::weights();
  const Real mid = (lo + hi) / 2;
  const Real half = (hi - lo) / 2;
  Complex<Real> fc = f(mid);
  Complex<Real> k = fc * wk[0];
  Complex<Real> g = fc * wg[0];
  for (std::size_t i = 1; i < xk.size(); ++i) {
    Complex<Real> s = f(mid - half * xk[i]) + f(mid + half * xk[i]);
    k += s * wk[i];
    if (i % 2 == 0) g += s * wg[i / 2];
  }
  using std::abs;
  return {lo, hi, k * half, abs((k - g) * half)};
}

struct QuadratureOptions {
  int max_panels = 4000;
};

// Globally adaptive bisection on the worst panel until the summed error
// estimate falls below abs_tol. `cuts` seeds the initial partition.
template <class Real, class F>
Estimate<Real> integrate(F&& f, const Real& lo, const Real& hi, const Real& abs_tol,
                         QuadratureOptions opts = {}, const std::vector<Real>& cuts = {}) {
  auto worse = [](const Panel<Real>& a, const Panel<Real>& b) { return a.error < b.error; };
  std::priority_queue<Panel<Real>, std::vector<Panel<Real>>, decltype(worse)> heap(worse);
  std::vector<Real> edges{lo};
  for (const Real& c : cuts)
    if (c > lo && c < hi) edges.push_back(c);
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) heap.push(gk15_panel<Real>(f, edges[i], edges[i + 1]));
  auto sum_errors = [&heap]() {
    auto copy = heap;
    Real e = 0;
    while (!copy.empty()) {
      e += copy.top().error;
      copy.pop();
    }
    return e;
  };
  Real total_err = sum_errors();
  int panels = static_cast<int>(heap.size());
  while (total_err > abs_tol && panels < opts.max_panels) {
    Panel<Real> worst = heap.top();
    heap.pop();
    Real mid = (worst.lo + worst.hi) / 2;
    if (!(mid > worst.lo && mid < worst.hi)) {
      heap.push(worst);
      break;  // cannot split further at this precision
    }
    Panel<Real> left = gk15_panel<Real>(f, worst.lo, mid);
    Panel<Real> right = gk15_panel<Real>(f, mid, worst.hi);
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++panels;
    if (panels % 64 == 0) total_err = sum_errors();  // refresh drift from incremental updates
  }
  CompensatedSum<Complex<Real>, Real> acc;
  Real err = 0;
  while (!heap.empty()) {
    acc.add(heap.top().kronrod);
    err += heap.top().error;
    heap.pop();
  }
  Estimate<Real> out;
  out.value = acc.value();
  out.error = err + acc.rounding_error();
  out.converged = err <= abs_tol;
  return out;
}

}  // namespace hres
