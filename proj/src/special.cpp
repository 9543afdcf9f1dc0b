#include "hres/special.hpp"

#include <cmath>

namespace hres {

namespace {

// Folds z into the closed first quadrant; returns the flags needed to undo it.
template <class Real>
Complex<Real> fold(const Complex<Real>& z, bool& negated, bool& conjugated) {
  Complex<Real> w = z;
  negated = w.real() < 0 || (w.real() == 0 && w.imag() < 0);
  if (negated) w = -w;
  conjugated = w.imag() < 0;
  if (conjugated) w = std::conj(w);
  return w;
}

// int_0^z e^{t^2} dt = sum z^{2k+1}/(k! (2k+1)), computed in the working type W.
template <class W>
Complex<W> erfi_integral_series(const Complex<W>& z) {
  using std::abs;
  Complex<W> z2 = z * z;
  Complex<W> power = z;  // z^{2k+1}/k!
  Complex<W> sum{};
  const W tiny = std::numeric_limits<W>::epsilon();
  for (int k = 0; k < 100000; ++k) {
    Complex<W> term = power / W(2 * k + 1);
    sum += term;
    if (k > 2 && W(k) > abs(z2) && abs(term) <= tiny * abs(sum)) break;
    power *= z2 / W(k + 1);
  }
  return sum;
}

// (1/(2z)) sum (2k-1)!!/(2z^2)^k from k = first, truncated at eps relative to `scale`.
template <class Real>
Complex<Real> asymptotic_tail(const Complex<Real>& z, int first, const Real& scale) {
  using std::abs;
  Complex<Real> inv2z2 = Real(1) / (Real(2) * z * z);
  Complex<Real> term = Real(1) / (Real(2) * z);
  for (int k = 0; k < first; ++k) term *= Real(2 * k + 1) * inv2z2;
  Complex<Real> sum{};
  Real previous = abs(term) * 2;
  for (int k = first; k < 100000; ++k) {
    Real mag = abs(term);
    if (mag > previous) throw ConsistencyError("asymptotic Dawson series diverging before reaching precision");
    sum += term;
    if (mag <= eps<Real>() * scale / 8) break;
    previous = mag;
    term *= Real(2 * k + 1) * inv2z2;
  }
  return sum;
}

// Inside the crossover radius the series terms reach e^{|z|^2} ~ 2^{bits} while
// D(z) can be O(1/|z|), so the sum needs about twice the target mantissa.
template <class Real>
struct series_work {
  using type = Real128;
};
template <>
struct series_work<Real128> {
  using type = Real512;
};
template <>
struct series_work<Real256> {
  using type = mp::number<mp::mpfr_float_backend<200>, mp::et_off>;
};
template <class Real>
using series_work_t = typename series_work<Real>::type;

}  // namespace

template <class Real>
Real dawson_crossover() {
  using std::log;
  using std::sqrt;
  return sqrt(Real(mantissa_bits<Real>()) * log(Real(2))) + 1;
}

template <class Real>
Complex<Real> dawson_series(const Complex<Real>& z) {
  using W = series_work_t<Real>;
  Complex<W> zw = convert<W>(z);
  Complex<W> val = std::exp(-zw * zw) * erfi_integral_series(zw);
  return convert<Real>(val);
}

template <class Real>
Complex<Real> dawson_asymptotic(const Complex<Real>& z) {
  bool neg = false, conj = false;
  Complex<Real> w = fold(z, neg, conj);
  using std::abs;
  using std::sqrt;
  Complex<Real> val = asymptotic_tail(w, 0, abs(Real(1) / (Real(2) * w)));
  if (w.imag() > 0) val += Complex<Real>(0, sqrt(pi<Real>()) / 2) * std::exp(-w * w);
  if (conj) val = std::conj(val);
  return neg ? Complex<Real>(-val) : val;
}

template <class Real>
Complex<Real> dawson(const Complex<Real>& z) {
  using std::abs;
  if (abs(z) < dawson_crossover<Real>()) return dawson_series(z);
  return dawson_asymptotic(z);
}

template <class Real>
Complex<Real> special_e(const Complex<Real>& y) {
  using std::abs;
  using std::sqrt;
  if (abs(y) >= dawson_crossover<Real>()) return special_e_shifted(y) + Real(1) / (2 * sqrt(pi<Real>()));
  using W = series_work_t<Real>;
  Complex<W> yw = convert<W>(y);
  Complex<W> D = std::exp(-yw * yw) * erfi_integral_series(yw);
  Complex<W> y2 = yw * yw;
  return convert<Real>((W(2) * y2 * yw * D - y2) / sqrt(pi<W>()));
}

template <class Real>
Complex<Real> special_e_shifted(const Complex<Real>& y) {
  using std::abs;
  using std::sqrt;
  if (abs(y) < dawson_crossover<Real>()) {
    using W = series_work_t<Real>;
    Complex<W> yw = convert<W>(y);
    Complex<W> D = std::exp(-yw * yw) * erfi_integral_series(yw);
    Complex<W> y2 = yw * yw;
    Complex<W> v = (W(2) * y2 * yw * D - y2) / sqrt(pi<W>()) - W(1) / (2 * sqrt(pi<W>()));
    return convert<Real>(v);
  }
  // E is even and real on the real axis; fold into the first quadrant.
  bool neg = false, conj = false;
  Complex<Real> w = fold(y, neg, conj);
  Complex<Real> w2 = w * w;
  // 2 w^3 D(w) = w^2 + 1/2 + sum_{k>=2} (2k-1)!!/(2^k w^{2k-2}) + i sqrt(pi) w^3 e^{-w^2}
  Complex<Real> tail = Real(2) * w2 * w * asymptotic_tail(w, 2, Real(3) / (8 * abs(w2) * abs(w2) * abs(w)));
  Complex<Real> val = tail / sqrt(pi<Real>());
  if (w.imag() > 0) val += Complex<Real>(0, 1) * w2 * w * std::exp(-w2);
  return conj ? std::conj(val) : val;
}

#define HRES_INSTANTIATE_SPECIAL(Real)                                   \
  template Real dawson_crossover<Real>();                                \
  template Complex<Real> dawson<Real>(const Complex<Real>&);             \
  template Complex<Real> dawson_series<Real>(const Complex<Real>&);      \
  template Complex<Real> dawson_asymptotic<Real>(const Complex<Real>&);  \
  template Complex<Real> special_e<Real>(const Complex<Real>&);          \
  template Complex<Real> special_e_shifted<Real>(const Complex<Real>&);

HRES_INSTANTIATE_SPECIAL(double)
HRES_INSTANTIATE_SPECIAL(Real128)
HRES_INSTANTIATE_SPECIAL(Real256)

}  // namespace hres
