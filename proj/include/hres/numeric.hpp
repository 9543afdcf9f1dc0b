#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace hres {

namespace mp = boost::multiprecision;

using BigInt = mp::mpz_int;
using Rational = mp::mpq_rational;

// ~133 and ~259 significant bits; static precision keeps MPFR state out of globals.
using Real128 = mp::number<mp::mpfr_float_backend<40>, mp::et_off>;
using Real256 = mp::number<mp::mpfr_float_backend<78>, mp::et_off>;
using Real512 = mp::number<mp::mpfr_float_backend<156>, mp::et_off>;

template <class Real>
using Complex = std::complex<Real>;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Value together with an absolute error estimate.
template <class Real>
struct Estimate {
  Complex<Real> value{};
  Real error{0};
  bool converged = true;
};

template <class Real>
struct PrecisionContext {
  Real tolerance = Real(1e-8);
  int max_panels = 4000;       // adaptive quadrature budget per integral
  long max_terms = 5'000'000;  // cap on any ell- or n-sum
  double ray_angle = 0.78539816339744830962;  // pi/4

  static PrecisionContext with_tolerance(double tol) {
    PrecisionContext ctx;
    ctx.tolerance = Real(tol);
    return ctx;
  }
};

template <class Real>
inline Real pi() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
inline Real eps() {
  return std::numeric_limits<Real>::epsilon();
}

template <class Real>
inline int mantissa_bits() {
  return std::numeric_limits<Real>::digits;
}

// Type with roughly twice the mantissa, used where a series cancels badly.
template <class Real>
struct wider;
template <>
struct wider<double> {
  using type = Real128;
};
template <>
struct wider<long double> {
  using type = Real128;
};
template <>
struct wider<Real128> {
  using type = Real256;
};
template <>
struct wider<Real256> {
  using type = Real512;
};
template <class Real>
using wider_t = typename wider<Real>::type;

template <class Real>
struct is_mpfr : std::false_type {};
template <unsigned D>
struct is_mpfr<mp::number<mp::mpfr_float_backend<D>, mp::et_off>> : std::true_type {};

template <class Real>
Real to_real(const Rational& q) {
  if constexpr (is_mpfr<Real>::value) {
    Real r;
    mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
    return r;
  } else if constexpr (std::is_same_v<Real, long double>) {
    Real128 r;
    mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
    return static_cast<long double>(r);
  } else {
    return static_cast<Real>(q.template convert_to<double>());
  }
}

template <class Real>
Real to_real(const BigInt& z) {
  return to_real<Real>(Rational(z));
}

// Lossless (up to rounding) conversion between floating types.
template <class To, class From>
To convert(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (is_mpfr<To>::value && is_mpfr<From>::value) {
    To r;
    mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
  } else if constexpr (is_mpfr<From>::value) {
    return static_cast<To>(x);
  } else {
    return To(x);
  }
}

template <class To, class From>
Complex<To> convert(const Complex<From>& z) {
  return {convert<To>(z.real()), convert<To>(z.imag())};
}

// e^{2 pi i r} with r reduced mod 1 exactly before exponentiation.
template <class Real>
Complex<Real> exp_2pi_i(const Rational& r) {
  BigInt num = mp::numerator(r);
  BigInt den = mp::denominator(r);
  BigInt red = num % den;
  if (red < 0) red += den;
  Real angle = 2 * pi<Real>() * to_real<Real>(Rational(red, den));
  using std::cos;
  using std::sin;
  return {cos(angle), sin(angle)};
}

// e^{2 pi i num/den} for machine integers, reduced exactly.
template <class Real>
Complex<Real> exp_2pi_i(long long num, long long den) {
  long long red = num % den;
  if (red < 0) red += den;
  Real angle = 2 * pi<Real>() * Real(red) / Real(den);
  using std::cos;
  using std::sin;
  return {cos(angle), sin(angle)};
}

// Principal z^p.
template <class Real>
Complex<Real> principal_pow(const Complex<Real>& z, const Real& p) {
  using std::abs;
  using std::arg;
  using std::exp;
  using std::log;
  if (z == Complex<Real>(0)) return Complex<Real>(0);
  Real mod = abs(z);
  Real phase = arg(z) * p;
  Real scale = exp(p * log(mod));
  using std::cos;
  using std::sin;
  return {scale * cos(phase), scale * sin(phase)};
}

// Neumaier-compensated running sum; also tracks sum |term| for error estimates.
template <class T, class Real>
class CompensatedSum {
 public:
  void add(const T& x) {
    using std::abs;
    T t = sum_ + x;
    if (magnitude(sum_) >= magnitude(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
    abs_sum_ += magnitude(x);
  }
  T value() const { return sum_ + comp_; }
  const Real& abs_sum() const { return abs_sum_; }
  // Generous bound on accumulated rounding, each term assumed good to a few ulps.
  Real rounding_error() const { return Real(16) * std::numeric_limits<Real>::epsilon() * abs_sum_; }

 private:
  static Real magnitude(const T& x) {
    using std::abs;
    if constexpr (std::is_same_v<T, Real>)
      return abs(x);
    else
      return abs(x.real()) + abs(x.imag());
  }
  T sum_{};
  T comp_{};
  Real abs_sum_{0};
};

// Decimal rendering with enough digits to round-trip the type.
template <class Real>
std::string to_decimal(const Real& x, int digits = std::numeric_limits<Real>::max_digits10) {
  if constexpr (is_mpfr<Real>::value) {
    return x.str(digits, std::ios_base::scientific);
  } else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Le", digits - 1, static_cast<long double>(x));
    return buf;
  }
}

template <class Real>
Real from_decimal(const std::string& s) {
  if constexpr (is_mpfr<Real>::value) {
    return Real(s);
  } else {
    return static_cast<Real>(std::stold(s));
  }
}

}  // namespace hres
