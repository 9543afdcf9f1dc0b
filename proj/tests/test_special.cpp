#include "doctest.h"
#include "hres/quadrature.hpp"
#include "hres/special.hpp"

#include <cmath>

using namespace hres;

namespace {

struct Ref {
  const char* re;
  const char* im;
  const char* dre;
  const char* dim;
};

// Dawson reference values from an independent 50-digit evaluation (sqrt(pi)/2 e^{-z^2} erfi z).
const Ref kDawson[] = {
    {"0.5", "0", "0.42443638350202229593404235249", "0"},
    {"3", "0", "0.178271030610558287342599492241", "0"},
    {"6.5", "0", "0.0778678189860698713888850107633", "0"},
    {"7.5", "0", "0.0672758116446306159869327184081", "0"},
    {"12", "0", "0.0418128764539882603179291175888", "0"},
    {"40", "0", "0.0125039099178439731993413145778", "0"},
    {"1", "1", "0.990373092322361388933947118307", "-0.638873051564443293117705746519"},
    {"5", "4.9", "-0.263577082323028124367213585342571", "0.0484808630706988885665648574742761"},
    {"8", "3", "0.0549826797352449536432752139547", "-0.0209089540251420260368507164396"},
    {"10", "9.9", "0.0155478798342318902334832687023935", "-0.145821629190063719002881460945906"},
    {"-3", "0.5", "-0.171047217984929741617800657398", "-0.033041412554191929494419908481"},
    {"20", "0.01", "0.0250313616290856108774116085356257", "-0.0000125471673968865604711208337008778"},
};

const Ref kE[] = {
    {"1", "0", "0.04296812229363744216695878424", "0"},
    {"0.3", "0", "-0.0421663390844657873591437137879", "0"},
    {"5", "0", "0.301005640173166386337113629193", "0"},
    {"30", "0", "0.282566260858992090288054754061", "0"},
    {"2", "1", "0.577108565637557648214588497651", "-0.572444407548524878587058482017"},
    {"9", "8.5", "0.262095518959088844949051909629", "0.297190002851831236213286603526"},
    {"200", "150", "0.282096687222519621804633909979", "-0.00000649960958046965795209987109488"},
};

template <class Real>
Complex<Real> parse(const char* re, const char* im) {
  return {from_decimal<Real>(re), from_decimal<Real>(im)};
}

template <class Real>
Real rel_err(const Complex<Real>& got, const Complex<Real>& want) {
  using std::abs;
  return abs(got - want) / abs(want);
}

}  // namespace

TEST_CASE_TEMPLATE("Dawson against reference values", Real, double, Real128) {
  // double's 0.5 literals are exact; the non-dyadic inputs lose ~1 ulp in conversion
  Real tol = std::is_same_v<Real, double> ? Real(2e-14) : Real(1e-28);
  for (const auto& r : kDawson) {
    auto z = parse<Real>(r.re, r.im);
    auto want = parse<Real>(r.dre, r.dim);
    INFO("z = " << std::string(r.re) << " + " << std::string(r.im) << "i");
    CHECK(rel_err(dawson(z), want) < tol);
  }
}

TEST_CASE("Dawson symmetries") {
  using C = std::complex<double>;
  for (C z : {C(0.7, 0.2), C(9, 2), C(3, -4), C(-8, 1)}) {
    CHECK(std::abs(dawson(-z) + dawson(z)) < 1e-14 * std::abs(dawson(z)));
    CHECK(std::abs(dawson(std::conj(z)) - std::conj(dawson(z))) < 1e-14 * std::abs(dawson(z)));
  }
  CHECK(dawson(C(40, 0)).imag() == 0.0);
}

TEST_CASE_TEMPLATE("both Dawson regimes agree on the overlap annulus", Real, double, Real128) {
  using std::abs;
  Real R = dawson_crossover<Real>();
  Real worst = 0;
  for (int j = 0; j <= 16; ++j) {
    // first-quadrant sweep from the real axis to the anti-Stokes direction
    Real phi = pi<Real>() / 4 * Real(j) / Real(16);
    for (Real r : {R, R + Real(1) / 2}) {
      Complex<Real> z(r * cos(phi), r * sin(phi));
      Real e = rel_err(dawson_series(z), dawson_asymptotic(z));
      if (e > worst) worst = e;
    }
  }
  CHECK(worst < 64 * eps<Real>());
}

TEST_CASE_TEMPLATE("E-function reference values and limits", Real, double, Real128, Real256) {
  using std::abs;
  using std::sqrt;
  Real tol = std::is_same_v<Real, double> ? Real(1e-13) : Real(1e-28);
  for (const auto& r : kE) {
    auto y = parse<Real>(r.re, r.im);
    auto want = parse<Real>(r.dre, r.dim);
    INFO("y = " << std::string(r.re) << " + " << std::string(r.im) << "i");
    CHECK(rel_err(special_e(y), want) < tol);
    Complex<Real> shifted = want - Complex<Real>(Real(1) / (2 * sqrt(pi<Real>())));
    if (abs(shifted) > Real(1e-3)) CHECK(rel_err(special_e_shifted(y), shifted) < tol * 100);
  }
  CHECK(special_e(Complex<Real>(0)) == Complex<Real>(0));
  Complex<Real> far = special_e(Complex<Real>(Real(1e6)));
  CHECK(abs(far - Complex<Real>(Real(1) / (2 * sqrt(pi<Real>())))) < Real(1e-11));
}

TEST_CASE("shifted E behaves like 3/(4 sqrt(pi) y^2)") {
  double pi = 3.14159265358979323846;
  for (double y : {50.0, 1e3, 1e5}) {
    double v = special_e_shifted(std::complex<double>(y)).real();
    double lead = 3 / (4 * std::sqrt(pi) * y * y);
    CHECK(v == doctest::Approx(lead).epsilon(10 / (y * y)));
  }
}

TEST_CASE("adaptive Gauss-Kronrod on smooth and peaked integrands") {
  auto e = integrate<double>([](double x) { return std::complex<double>(std::exp(x), std::sin(x)); }, 0.0, 1.0,
                             1e-14);
  CHECK(e.converged);
  CHECK(std::abs(e.value - std::complex<double>(std::exp(1.0) - 1, 1 - std::cos(1.0))) < 1e-14);
  auto peak = integrate<double>([](double x) { return std::complex<double>(1e-4 / (x * x + 1e-8)); }, -1.0, 1.0,
                                1e-10);
  CHECK(peak.converged);
  CHECK(std::abs(peak.value.real() - 2 * std::atan(1e4)) < 1e-9);
  auto starved = integrate<double>([](double x) { return std::complex<double>(1e-4 / (x * x + 1e-8)); }, -1.0,
                                   1.0, 1e-14, QuadratureOptions{4});
  CHECK_FALSE(starved.converged);
}

TEST_CASE("adaptive quadrature at 128 bits") {
  auto e = integrate<Real128>([](const Real128& x) { return Complex<Real128>(exp(-x * x)); }, Real128(0), Real128(8),
                              Real128(1e-35));
  CHECK(e.converged);
  Real128 want = sqrt(pi<Real128>()) / 2 * erf(Real128(8));
  CHECK(abs(e.value.real() - want) < Real128(1e-34));
}

TEST_CASE("two-ray integral identity for E") {
  // int over both rays of e^{-px}(1-p)^{-5/2} = -4/3 + (8/3) sqrt(pi) E(sqrt x)
  const double theta = 0.78539816339744830962;
  double x = 1.0;
  std::complex<double> total = 0;
  for (int sign : {1, -1}) {
    std::complex<double> dir = std::polar(1.0, sign * theta);
    double kappa = x * std::cos(theta);
    double R = std::log(1e20) / kappa;
    auto f = [&](double r) {
      std::complex<double> p = r * dir;
      std::complex<double> w = 1.0 - p;
      return std::exp(-p * x) / (w * w * std::sqrt(w)) * dir;
    };
    total += integrate<double>(f, 0.0, R, 1e-14, {}, {0.5, 1.0, 2.0, 4.0, 8.0}).value;
  }
  double sqpi = std::sqrt(3.14159265358979323846);
  std::complex<double> rhs = -4.0 / 3 + 8.0 / 3 * sqpi * special_e(std::complex<double>(std::sqrt(x)));
  CHECK(std::abs(total - rhs) < 1e-10);
}
