#include "doctest.h"
#include "hres/borel.hpp"
#include "hres/rational.hpp"

#include <cmath>

using namespace hres;

namespace {

const double kPi = 3.14159265358979323846;

FormalSeries trefoil(int count = 64) {
  return series_coefficients({1, 24, 1, make_periodic(Rational(-1, 2), 12, 1, 5)}, count);
}

FormalSeries chi34(int count = 64) { return series_coefficients({0, 48, 1, chi_function({3, 4, 1, 1})}, count); }

// The explicit trefoil transform (3 pi/(2 sqrt 2)) sum n (12/n) (n^2 pi^2/6 - p)^{-5/2}.
std::complex<double> explicit_trefoil(std::complex<double> p) {
  auto kron12 = [](long n) {
    long r = n % 12;
    return (r == 1 || r == 11) ? 1 : (r == 5 || r == 7) ? -1 : 0;
  };
  std::complex<long double> sum = 0;
  for (long n = 1; n < 400000; ++n) {
    int k = kron12(n);
    if (k == 0) continue;
    std::complex<long double> w = (long double)(n) * n * kPi * kPi / 6 - std::complex<long double>(p);
    sum += (long double)(n * k) / (w * w * std::sqrt(w));
  }
  return std::complex<double>((long double)(3 * kPi / (2 * std::sqrt(2.0))) * sum);
}

}  // namespace

TEST_CASE("Borel coefficients of the trefoil") {
  auto s = trefoil();
  auto g = borel_coefficients(s, 5);
  CHECK(g[0] == Rational(23, 24));
  CHECK(s.a(0) == 1);
  CHECK(g[1] == Rational(1681, 2 * 24 * 24));
}

TEST_CASE("rearranged coefficient form agrees exactly") {
  for (const auto& s : {trefoil(), chi34()}) {
    auto a = borel_coefficients(s, 31);
    auto b = borel_coefficients_rearranged(s, 31);
    for (int n = 0; n <= 30; ++n) REQUIRE(a[static_cast<std::size_t>(n)] == b[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("g2 binomial series matches the factorial form") {
  for (long long b : {24LL, 48LL, 7LL}) {
    auto g2 = g2_coefficients(b, 21);
    CHECK(g2[0] == Rational(6, b));
    for (int n = 0; n <= 20; ++n) {
      Rational direct = factorial(2 * n + 3) / (factorial(n) * factorial(n + 1)) /
                        Rational(mp::pow(BigInt(b), static_cast<unsigned>(n + 1)));
      REQUIRE(g2[static_cast<std::size_t>(n)] == direct);
    }
  }
}

TEST_CASE("Hadamard factorisation is exact") {
  CHECK(hadamard_oracle(trefoil(), 31).size() == 31);
  CHECK(hadamard_oracle(chi34(), 31).size() == 31);
  auto general = series_coefficients({3, 17, 1, make_periodic(Rational(2, 3), 10, 1, 3)}, 40);
  CHECK(hadamard_oracle(general, 30).size() == 30);
  CHECK_THROWS_AS(hadamard_oracle(trefoil(), 41), ConfigError);
}

TEST_CASE("sine ratio series matches direct evaluation") {
  auto f = make_periodic(Rational(-1, 2), 12, 1, 5);
  auto s = sine_ratio_series(f, 41);
  double y = 0.2;
  double series = 0;
  for (std::size_t k = 0; k < s.size(); ++k) series += s[k].convert_to<double>() * std::pow(y, static_cast<double>(k));
  double direct = 2 * (-0.5) * std::sin(4 * y / 2) * std::sin(6 * y / 2) / std::sin(12 * y / 2);
  CHECK(series == doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("singularity set follows the tilde support") {
  auto sing = singularity_set(trefoil());
  CHECK(sing.indices(5) == std::vector<long long>{1, 5, 7, 11, 13});
  for (long long l : {2, 3, 4, 6, 12}) CHECK_FALSE(sing.contains_index(l));
  CHECK(sing.position<double>(1) == doctest::Approx(kPi * kPi / 6));
  CHECK(sing.position<double>(5) == doctest::Approx(25 * kPi * kPi / 6));
  auto s34 = singularity_set(chi34());
  CHECK(s34.first_index() == 1);
  CHECK(s34.position<double>(1) == doctest::Approx(kPi * kPi / 12));
}

TEST_CASE("closed form at p = 0 and against the explicit trefoil transform") {
  auto s = trefoil();
  auto ctx = PrecisionContext<double>::with_tolerance(1e-13);
  auto g0 = borel_eval<double>(s, {0, 0}, ctx);
  CHECK(g0.converged);
  CHECK(std::abs(g0.value - std::complex<double>(23.0 / 24.0)) < 1e-12);
  for (std::complex<double> p : {std::complex<double>(-1, 0), {1, 1}, {kPi * kPi / 12, 0}}) {
    auto v = borel_eval<double>(s, p, ctx);
    CHECK(std::abs(v.value - explicit_trefoil(p)) < 1e-12);
    CHECK(v.error < 1e-12);
  }
}

TEST_CASE("guard and branch errors") {
  auto s = trefoil();
  auto ctx = PrecisionContext<double>::with_tolerance(1e-10);
  CHECK_THROWS_AS(borel_eval<double>(s, {kPi * kPi / 6, 0}, ctx), SingularProximityError);
  CHECK_THROWS_AS(borel_eval<double>(s, {5, 0}, ctx), BranchAmbiguityError);
  auto up = borel_eval<double>(s, {5, 0}, ctx, CutSide::above);
  auto down = borel_eval<double>(s, {5, 0}, ctx, CutSide::below);
  CHECK(std::abs(up.value - std::conj(down.value)) < 1e-12);
  // boundary values are limits from just off the axis
  auto near_up = borel_eval<double>(s, {5, 1e-9}, ctx);
  auto near_down = borel_eval<double>(s, {5, -1e-9}, ctx);
  CHECK(std::abs(near_up.value - up.value) < 1e-6);
  CHECK(std::abs(near_down.value - down.value) < 1e-6);
  // the jump across the cut between the first two singularities is one term
  double pos1 = kPi * kPi / 6;
  double w = pos1 / 24 - 5.0 / 24;  // negative
  double term = 3 * kPi * (-0.5) / (144.0 * 24) * 1 * (-std::sqrt(3.0) / 2) / (w * w * std::sqrt(-w));
  CHECK(std::abs((up.value - down.value) - std::complex<double>(0, 2 * term)) < 1e-10);
}

TEST_CASE("conjugation symmetry") {
  auto s = chi34();
  auto ctx = PrecisionContext<double>::with_tolerance(1e-12);
  for (std::complex<double> p : {std::complex<double>(0.3, 0.7), {-2, 1}, {4, -3}}) {
    auto a = borel_eval<double>(s, p, ctx).value;
    auto b = borel_eval<double>(s, std::conj(p), ctx).value;
    CHECK(std::abs(a - std::conj(b)) < 1e-12);
  }
}

TEST_CASE("closed form agrees with the Taylor series inside the disc") {
  auto s = trefoil();
  auto g = borel_coefficients(s, 60);
  auto ctx = PrecisionContext<double>::with_tolerance(1e-13);
  std::complex<double> p(0.4, -0.3);
  std::complex<double> taylor = 0, pw = 1;
  for (const auto& c : g) {
    taylor += c.convert_to<double>() * pw;
    pw *= p;
  }
  CHECK(std::abs(borel_eval<double>(s, p, ctx).value - taylor) < 1e-12);
}

TEST_CASE("termwise Taylor expansion of the closed form at 128 bits") {
  for (const auto& s : {trefoil(), chi34()}) {
    auto exact = borel_coefficients(s, 20);
    auto ctx = PrecisionContext<Real128>::with_tolerance(1e-14);
    auto numeric = borel_closed_form_taylor<Real128>(s, 20, ctx);
    for (int n = 0; n < 20; ++n) {
      Real128 ex = to_real<Real128>(exact[static_cast<std::size_t>(n)]);
      Real128 rel = abs(numeric[static_cast<std::size_t>(n)].value.real() - ex) / abs(ex);
      INFO("n=" << n << " rel=" << rel);
      REQUIRE(rel < Real128(1e-12));
    }
  }
}

TEST_CASE("period-blocked Dirichlet sum of the tilde transform") {
  TildeFunction ft(make_periodic(Rational(1), 12, 1, 5));
  auto ctx = PrecisionContext<double>::with_tolerance(1e-12);
  // f~ = -(sqrt 3/2) chi_12 and sum chi_12(n)/n^2 = pi^2/(6 sqrt 3).
  auto d = tilde_dirichlet_sum<double>(ft, 2, ctx);
  CHECK(d.converged);
  CHECK(std::abs(d.value.real() - (-std::sqrt(3.0) / 2 * kPi * kPi / (6 * std::sqrt(3.0)))) < 1e-11);
}
