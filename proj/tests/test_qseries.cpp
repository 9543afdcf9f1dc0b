#include "doctest.h"
#include "hres/qseries.hpp"

using namespace hres;

namespace {

ThetaSpec trefoil_spec() { return {1, 24, 1, make_periodic(Rational(-1, 2), 12, 1, 5)}; }
ThetaSpec chi_spec(int s, int t, int n, int m, int nu = 1) {
  return {0, 4LL * s * t, nu, chi_function({s, t, n, m})};
}

template <class Real>
Complex<Real> naive_theta(const ThetaSpec& spec, const Complex<Real>& x, long long terms) {
  Complex<Real> sum{};
  Real c = to_real<Real>(spec.f.scale());
  for (long long n = 0; n < terms; ++n) {
    int sg = spec.f.sign_at(n);
    if (sg == 0) continue;
    Real w = spec.nu ? Real(n) : Real(1);
    sum += w * c * Real(sg) * std::exp(Complex<Real>(0, 2) * pi<Real>() * x * Real(n * n - spec.a) / Real(spec.b));
  }
  return sum;
}

Complex<double> polar(double r, double angle) { return std::polar(r, angle); }

const double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("upper half plane evaluation against a fixed long truncation") {
  Complex<Real128> x(0, 1);
  auto e = theta_upper_half(make_theta<Real128>(trefoil_spec()), x);
  Complex<Real128> ref = naive_theta<Real128>(trefoil_spec(), x, 60);
  CHECK(abs(e.value - ref) < Real128(1e-25));
  CHECK(e.error < Real128(1e-30));
}

TEST_CASE("upper half plane evaluation rejects the real axis") {
  auto s = make_theta<double>(trefoil_spec());
  CHECK_THROWS_AS(theta_upper_half(s, Complex<double>(0.5, 0)), DomainError);
  CHECK_THROWS_AS(theta_upper_half(s, Complex<double>(0.5, -1)), DomainError);
}

TEST_CASE("tilde theta decays to zero high up the imaginary axis") {
  TildeFunction tilde(make_periodic(Rational(-1, 2), 12, 1, 5));
  auto s = make_theta<double>(tilde, 0, 576, 0);
  double prev = 1e9;
  for (double y : {100.0, 1000.0, 10000.0}) {
    double v = std::abs(theta_upper_half(s, Complex<double>(0, y)).value);
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev < 1e-20);
}

TEST_CASE("conjugation symmetry theta(-conj x) = conj theta(x)") {
  auto s = make_theta<double>(trefoil_spec());
  for (Complex<double> x : {Complex<double>(0.3, 0.2), Complex<double>(-1.7, 0.05)}) {
    auto a = theta_upper_half(s, x).value;
    auto b = theta_upper_half(s, Complex<double>(-std::conj(x))).value;
    CHECK(std::abs(b - std::conj(a)) < 1e-12);
  }
}

TEST_CASE("vertical-line evaluation matches the generic one") {
  auto s = make_theta<Real128>(chi_spec(3, 4, 1, 1, 0));
  VerticalTheta<Real128> line(s, Rational(2, 3));
  for (double y : {0.5, 0.05}) {
    auto v = line(Real128(y)).value;
    auto g = theta_upper_half(s, Complex<Real128>(Real128(2) / 3, Real128(y))).value;
    CHECK(abs(v - g) < Real128(1e-28));
  }
}

TEST_CASE("radial limits at roots of unity") {
  auto tre = make_theta<Real128>(trefoil_spec());
  CHECK(abs(theta_radial_limit(tre, Rational(1)) - Complex<Real128>(1)) < Real128(1e-30));
  CHECK(abs(theta_radial_limit(tre, Rational(1, 2)) - Complex<Real128>(3)) < Real128(1e-30));
  auto chi = make_theta<double>(chi_spec(2, 3, 1, 1));
  CHECK(std::abs(theta_radial_limit(chi, Rational(1)) - polar(-2, kPi / 12)) < 1e-13);
  CHECK(std::abs(theta_radial_limit(chi, Rational(1, 2)) - polar(-6, kPi / 24)) < 1e-13);
  CHECK(std::abs(theta_radial_limit(chi, Rational(-1)) - polar(-2, -kPi / 12)) < 1e-13);
  auto e = theta_radial_limit(chi, Rational(1, 3));
  CHECK(e.real() == doctest::Approx(-11.1090999).epsilon(1e-7));
  CHECK(e.imag() == doctest::Approx(0.7667467).epsilon(1e-6));
}

TEST_CASE("radial limit agrees with Richardson extrapolation along alpha + i eps") {
  std::vector<ThetaSpec> specs{trefoil_spec(), chi_spec(2, 3, 1, 1), chi_spec(3, 4, 1, 1), chi_spec(2, 5, 1, 2),
                               chi_spec(3, 4, 1, 1, 0)};
  for (const auto& sp : specs) {
    auto s = make_theta<double>(sp);
    for (Rational a : {Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(2, 3)}) {
      INFO("b = " << sp.b << " nu = " << sp.nu << " alpha = " << a.str());
      auto exact = theta_radial_limit(s, a);
      auto oracle = theta_radial_extrapolation(s, a);
      CHECK(std::abs(exact - oracle) < 1e-6);
    }
  }
}

TEST_CASE("nonzero twisted mean has no radial limit") {
  ThetaSeries<double> s{0, 4, 1, {1.0, 1.0}};
  CHECK_THROWS_AS(theta_radial_limit(s, Rational(1)), NoLimitError);
  CHECK_THROWS_AS(theta_radial_limit(make_theta<double>(trefoil_spec()), Rational(0)), DomainError);
}

TEST_CASE("Richardson recovers a polynomial exactly") {
  std::vector<double> xs{0.1, 0.05, 0.025, 0.0125};
  std::vector<Complex<double>> ys;
  for (double x : xs) ys.emplace_back(1 + 2 * x - 3 * x * x * x, x);
  auto c = polynomial_fit(xs, ys, 3);
  CHECK(std::abs(c[0] - Complex<double>(1)) < 1e-12);
  CHECK(std::abs(c[1] - Complex<double>(2, 1)) < 1e-10);
  CHECK(std::abs(c[3] - Complex<double>(-3)) < 1e-7);
}

TEST_CASE("modular transform of the chi theta family") {
  for (Complex<Real128> z : {Complex<Real128>(0, 1), Complex<Real128>(0, 2), Complex<Real128>(0, Real128(1) / 3)}) {
    auto r = verify_modular_transform<Real128>(2, 3, {1, 1}, z);
    CHECK(r.residual < Real128(1e-25));
  }
  // the 1x1 case spelled out: theta(2i) = theta(i/2)/sqrt(2)
  auto th = make_theta<double>(chi_spec(2, 3, 1, 1, 0));
  auto at2i = theta_upper_half(th, Complex<double>(0, 2)).value;
  auto athalf = theta_upper_half(th, Complex<double>(0, 0.5)).value;
  CHECK(std::abs(at2i - athalf / std::sqrt(2.0)) < 1e-12);
  for (const auto& p : pair_set(3, 4).pairs) {
    for (Complex<double> z : {Complex<double>(0, 1), Complex<double>(0, 2), Complex<double>(0, 1.0 / 3)}) {
      auto r = verify_modular_transform<double>(3, 4, p, z);
      CHECK(r.residual < 1e-12);
    }
  }
  auto off_axis = verify_modular_transform<double>(3, 4, {1, 1}, Complex<double>(0.3, 0.8));
  CHECK(off_axis.residual < 1e-12);
}

TEST_CASE("theta lift of the decomposition identity") {
  for (auto [s, t] : {std::pair{2, 3}, std::pair{3, 4}}) {
    for (const auto& p : pair_set(s, t).pairs) {
      for (int nu : {0, 1}) {
        auto r = verify_lift<Real128>(s, t, p, nu, Complex<Real128>(0, Real128(1) / 2));
        CHECK(r.residual < Real128(1e-25));
      }
    }
  }
}

TEST_CASE("Eichler integral boundary values") {
  auto ctx = PrecisionContext<double>::with_tolerance(1e-10);
  auto one = phi_hat_boundary<double>({2, 3, 1, 1}, Rational(1), ctx);
  CHECK(std::abs(one.value - polar(1, kPi / 12)) < 1e-8);
  auto half = phi_hat_boundary<double>({2, 3, 1, 1}, Rational(1, 2), ctx);
  CHECK(std::abs(half.value - polar(3, kPi / 24)) < 1e-8);
  for (Rational a : {Rational(1), Rational(1, 2), Rational(-1, 3)}) {
    auto r = verify_boundary_eichler<double>(2, 3, {1, 1}, a, ctx);
    CHECK(r.residual < 1e-8);
  }
}

TEST_CASE("period relation at z = -i") {
  auto ctx = PrecisionContext<double>::with_tolerance(1e-10);
  GaussianRational z{0, -1};
  auto phi = phi_hat<double>({2, 3, 1, 1}, z, ctx);
  CHECK(phi.value.real() == doctest::Approx(0.10114615).epsilon(1e-6));
  auto r = verify_period_relation<double>(2, 3, {1, 1}, z, ctx);
  CHECK(r.residual < 1e-8);
  CHECK(r.rhs.real() == doctest::Approx(0.2022923).epsilon(1e-6));
  auto r34 = verify_period_relation<double>(3, 4, {1, 1}, GaussianRational{Rational(1, 2), Rational(-3, 2)}, ctx);
  CHECK(r34.residual < 1e-8);
  CHECK_THROWS_AS(phi_hat<double>({2, 3, 1, 1}, GaussianRational{0, 1}, ctx), DomainError);
}

TEST_CASE("period function path additivity") {
  // E(0) - E(1), both starting at height 1, equals the horizontal integral from i to 1 + i
  auto ctx = PrecisionContext<double>::with_tolerance(1e-12);
  Complex<double> z(0, -1);
  ChiParams p{2, 3, 1, 1};
  auto e0 = eichler_vertical<double>(p, Rational(0), 1.0, z, ctx);
  auto e1 = eichler_vertical<double>(p, Rational(1), 1.0, z, ctx);
  auto th = make_theta<double>(chi_spec(2, 3, 1, 1, 0));
  auto horiz = integrate<double>(
      [&](double x) {
        Complex<double> tau(x, 1);
        return theta_upper_half(th, tau).value * principal_pow(Complex<double>(tau - z), -1.5);
      },
      0.0, 1.0, 1e-13);
  Complex<double> pref = std::sqrt(Complex<double>(0, 6.0 / (8 * kPi * kPi)));
  CHECK(std::abs(e0.value - e1.value - pref * horiz.value) < 1e-10);
}

TEST_CASE("small-t fit recovers the leading exact coefficients") {
  auto f = make_periodic(Rational(-1, 2), 12, 1, 5);
  auto c = small_t_coefficients<Real128>(f, 3);
  CHECK(abs(c[0] - Complex<Real128>(1)) < Real128(1e-9));
  CHECK(abs(c[1] - Complex<Real128>(23)) < Real128(23e-8));
  CHECK(abs(c[2] - Complex<Real128>(1681)) < Real128(1681e-4));
  auto chi = chi_function({3, 4, 1, 1});
  auto d = small_t_coefficients<Real128>(chi, 2);
  CHECK(abs(d[0] - Complex<Real128>(to_real<Real128>(l_value(chi, 0)))) < Real128(1e-8));
  CHECK(abs(d[1] + Complex<Real128>(to_real<Real128>(l_value(chi, 1)))) < Real128(1e-6) * abs(d[1]));
}
