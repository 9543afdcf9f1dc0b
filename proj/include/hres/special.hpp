#pragma once

#include "hres/numeric.hpp"

namespace hres {

// Radius above which the asymptotic expansion reaches working precision:
// sqrt(bits ln 2) + 1, so that the optimal truncation error e^{-R^2} is below eps.
template <class Real>
Real dawson_crossover();

// Dawson integral D(z) = e^{-z^2} int_0^z e^{t^2} dt for complex z.
template <class Real>
Complex<Real> dawson(const Complex<Real>& z);

// The two regimes, exposed so tests can compare them on an overlap annulus.
// The series is summed in a wider type; the asymptotic form adds the
// exponentially small term i sqrt(pi)/2 e^{-z^2} off the real axis.
template <class Real>
Complex<Real> dawson_series(const Complex<Real>& z);
template <class Real>
Complex<Real> dawson_asymptotic(const Complex<Real>& z);

// E(y) = (2 y^3 D(y) - y^2)/sqrt(pi).
template <class Real>
Complex<Real> special_e(const Complex<Real>& y);

// E(y) - 1/(2 sqrt(pi)), computed without the cancellation at large |y|.
template <class Real>
Complex<Real> special_e_shifted(const Complex<Real>& y);

}  // namespace hres
