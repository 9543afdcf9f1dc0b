// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "hres/borel.hpp"
#include "hres/exact.hpp"
#include "hres/habiro.hpp"
#include "hres/periodic.hpp"
#include "hres/qseries.hpp"
#include "hres/rational.hpp"
#include "hres/resum.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace hres;

namespace {

using C = Complex<double>;

ThetaSpec trefoil_spec() { return {1, 24, 1, make_periodic(Rational(-1, 2), 12, 1, 5)}; }
ThetaSpec chi_spec(int s, int t, int n = 1, int m = 1) {
  return {0, 4LL * s * t, 1, chi_function({s, t, n, m})};
}

const std::vector<std::pair<int, int>> kPairsST{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {3, 8}};

// Accumulates the worst deviation of one criterion and any failure text.
struct Verdict {
  bool ok = true;
  double worst = 0;
  std::string detail;

  void bound(double err, double tol, const std::string& where) {
    if (err > worst || err != err) worst = err;
    if (!(err <= tol)) fail(where + " err " + fmt(err));
  }
  void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  void fail(const std::string& what) {
    ok = false;
    if (detail.size() < 300) detail += (detail.empty() ? "" : "; ") + what;
  }
  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
  }
};

template <class Real>
double as_double(const Real& x) {
  return static_cast<double>(x);
}

// (3 pi/(2 sqrt 2)) sum n chi_12(n) (n^2 pi^2/6 - p)^{-5/2}; the remainder past 2e5 is below 1e-16.
template <class Real>
Complex<Real> explicit_trefoil(const Complex<Real>& p) {
  using std::sqrt;
  const Real pi2 = pi<Real>() * pi<Real>();
  Complex<Real> sum{};
  for (long n = 1; n <= 200000; ++n) {
    long r = n % 12;
    int k = (r == 1 || r == 11) ? 1 : (r == 5 || r == 7) ? -1 : 0;
    if (k == 0) continue;
    Complex<Real> w = Complex<Real>(Real(n) * Real(n) * pi2 / 6) - p;
    sum += Complex<Real>(Real(n * k)) / (w * w * sqrt(w));
  }
  return sum * (3 * pi<Real>() / (2 * sqrt(Real(2))));
}

void c1(Verdict& v) {
  auto s = series_coefficients(trefoil_spec(), 4);
  const long long ref[] = {1, 23, 1681, 257543};
  for (int k = 0; k < 4; ++k)
    v.require(s.C(static_cast<std::size_t>(k)) == ref[k], "C_" + std::to_string(k) + " not exact");
  auto kz = trefoil_small_t_coefficients<Real128>(2);
  for (int k = 0; k < 2; ++k) {
    double exact = static_cast<double>(ref[k]);
    v.bound(as_double(abs(kz[static_cast<std::size_t>(k)] - exact)) / exact, 5e-7, "KZ C_" + std::to_string(k));
  }
}

void c2(Verdict& v) {
  auto ctx = PrecisionContext<Real128>::with_tolerance(1e-16);
  for (const auto& spec : {trefoil_spec(), chi_spec(3, 4)}) {
    auto series = series_coefficients(spec, 24);
    auto exact = borel_coefficients(series, 20);
    auto cf = borel_closed_form_taylor<Real128>(series, 20, ctx);
    for (std::size_t n = 0; n < 20; ++n) {
      Real128 e = to_real<Real128>(exact[n]);
      Real128 rel = abs(cf[n].value - Complex<Real128>(e)) / (e == 0 ? Real128(1) : Real128(abs(e)));
      v.bound(as_double(rel), 1e-12, "b=" + std::to_string(spec.b) + " n=" + std::to_string(n));
    }
  }
}

void c3(Verdict& v) {
  using R = Real128;
  auto series = series_coefficients(trefoil_spec(), 4);
  auto ctx = PrecisionContext<R>::with_tolerance(1e-15);
  const R pi2 = pi<R>() * pi<R>();
  for (Complex<R> p : {Complex<R>(0), Complex<R>(-1), Complex<R>(1, 1), Complex<R>(pi2 / 12)}) {
    auto g = borel_eval<R>(series, p, ctx);
    Complex<R> ref = explicit_trefoil(p);
    v.bound(as_double(abs(g.value - ref)), 1e-12, "p=" + Verdict::fmt(as_double(p.real())));
    if (p == Complex<R>(0)) {
      v.bound(as_double(abs(g.value - R(23) / 24)), 1e-12, "G(0) vs 23/24");
      v.bound(as_double(abs(ref - R(23) / 24)), 1e-12, "explicit(0) vs 23/24");
    }
  }
}

void c4(Verdict& v) {
  for (const auto& spec : {trefoil_spec(), chi_spec(3, 4)}) {
    auto series = series_coefficients(spec, 33);
    auto direct = borel_coefficients(series, 31);
    auto g1 = g1_coefficients(series, 31);
    auto g2 = g2_coefficients(spec.b, 31);
    for (std::size_t n = 0; n <= 30; ++n)
      v.require(g1[n] * g2[n] == direct[n], "g1*g2 != direct at n=" + std::to_string(n));
    try {
      hadamard_oracle(series, 31);
    } catch (const ConsistencyError& e) {
      v.fail(e.what());
    }
  }
}

void c5(Verdict& v) {
  auto ctx = PrecisionContext<double>::with_tolerance(1e-11);
  for (const auto& spec : {trefoil_spec(), chi_spec(3, 4)}) {
    auto series = series_coefficients(spec, 16);
    for (C x : {C(0.5), C(1), C(1, 0.25)}) {
      auto d = discontinuity(series, x, ctx);
      v.bound(std::abs(d.numeric.value - d.closed_form.value), 1e-8, "x=" + Verdict::fmt(x.real()));
    }
  }
}

void c6(Verdict& v) {
  auto ctx = PrecisionContext<Real128>::with_tolerance(1e-14);
  for (const auto& spec : {trefoil_spec(), chi_spec(3, 4)}) {
    auto series = series_coefficients(spec, 2);
    auto e = constant_from_tilde(series, ctx);
    v.bound(as_double(abs(e.value - to_real<Real128>(series.constant()))), 1e-10, "b=" + std::to_string(spec.b));
  }
}

void c7(Verdict& v) {
  auto ctx = PrecisionContext<double>::with_tolerance(1e-12);
  for (const auto& spec : {trefoil_spec(), chi_spec(3, 4)}) {
    auto series = series_coefficients(spec, 16);
    for (double x : {1.0, 2.0, 10.0}) {
      auto med = median_sum(series, C(x), ctx);
      auto plus = lateral_sum(series, C(x), Side::plus, ctx);
      auto minus = lateral_sum(series, C(x), Side::minus, ctx);
      v.bound(std::abs(med.value - (plus.value + minus.value) / 2.0), 1e-9, "x=" + Verdict::fmt(x));
    }
  }
}

void c8(Verdict& v) {
  for (auto [s, t] : kPairsST) {
    for (const IndexPair& p : pair_set(s, t).pairs) {
      auto rep = verify_decomposition<Real128>(s, t, p, 1e-12);
      std::string where = "(" + std::to_string(s) + "," + std::to_string(t) + ")";
      v.bound(rep.max_residual, 1e-12, where);
      v.require(rep.passed(), where + " support or residue mismatch");
    }
  }
}

void c9(Verdict& v) {
  for (auto [s, t] : kPairsST) {
    auto n = static_cast<long long>(support_set(s, t).size());
    v.require(n == 2LL * (s - 1) * (t - 1), "|S| = " + std::to_string(n) + " for (" + std::to_string(s) + "," +
                                                 std::to_string(t) + ")");
  }
}

void c10(Verdict& v) {
  for (auto [s, t] : {std::pair{2, 3}, std::pair{3, 4}}) {
    for (const IndexPair& p : pair_set(s, t).pairs) {
      for (Complex<Real128> z : {Complex<Real128>(0, 1), Complex<Real128>(0, 2), Complex<Real128>(0, Real128(1) / 3)}) {
        auto r = verify_modular_transform<Real128>(s, t, p, z);
        v.bound(as_double(r.residual), 1e-10, "(" + std::to_string(s) + "," + std::to_string(t) + ")");
      }
    }
  }
}

void c11(Verdict& v) {
  auto ctx = PrecisionContext<double>::with_tolerance(1e-9);
  for (Rational a : {Rational(1), Rational(1, 2)}) {
    auto r = verify_boundary_eichler<double>(2, 3, {1, 1}, a, ctx);
    v.bound(r.residual, 1e-6, "alpha=" + format_rational(a));
  }
  auto r = verify_period_relation<double>(2, 3, {1, 1}, GaussianRational{Rational(0), Rational(-1)}, ctx);
  v.bound(r.residual, 1e-6, "z=-i");
}

void c12(Verdict& v) {
  auto ctx = PrecisionContext<double>::with_tolerance(1e-10);
  struct Case {
    int s, t;
    std::vector<Rational> alphas;
  };
  for (const auto& cs : {Case{2, 3, {Rational(1), Rational(1, 2), Rational(1, 3), Rational(-1, 2)}},
                         Case{3, 4, {Rational(1), Rational(1, 2)}}}) {
    ThetaSpec spec = chi_spec(cs.s, cs.t);
    auto series = series_coefficients(spec, 16);
    auto theta = make_theta<double>(spec);
    for (const Rational& a : cs.alphas) {
      std::string where = "(" + std::to_string(cs.s) + "," + std::to_string(cs.t) + ") alpha=" + format_rational(a);
      auto b = boundary_median(series, a, ctx);
      v.bound(std::abs(b.value - theta_radial_limit(theta, a)), 1e-6, where);
      auto ext = boundary_median_extrapolation(series, a, ctx);
      v.require(std::abs(b.value - ext) <= 1e-4, where + " interior extrapolation off by " +
                                                     Verdict::fmt(std::abs(b.value - ext)));
    }
  }
}

void c13(Verdict& v) {
  for (long long N = 1; N <= 12; ++N) {
    auto r = verify_strange<double>({}, Rational(1, N));
    v.bound(r.residual, 1e-10, "trefoil N=" + std::to_string(N));
  }
  for (int u = 1; u <= 3; ++u)
    for (int l = 0; l < u; ++l)
      for (long long N = 1; N <= 8; ++N) {
        auto r = verify_strange<double>({StrangeConfig::Family::hikami, u, l}, Rational(1, N));
        v.bound(r.residual, 1e-8, "hikami u=" + std::to_string(u) + " l=" + std::to_string(l) + " N=" +
                                      std::to_string(N));
      }
}

void c14(Verdict& v) {
  for (long long N = 2; N <= 20; ++N) {
    RootOfUnity q(1, N);
    auto lhs = kontsevich_zagier_eval<Real128>(q) * q.value<Real128>();
    v.bound(as_double(abs(lhs - colored_jones_trefoil<Real128>(N))), 1e-20, "N=" + std::to_string(N));
    v.require(same_value(colored_jones_trefoil_exact(N), CyclotomicInteger::monomial(N, 1) * kontsevich_zagier_exact(q)),
              "exact mismatch at N=" + std::to_string(N));
  }
}

void c15(Verdict& v) {
  std::mt19937_64 rng(15);
  auto f = make_periodic(Rational(-1, 2), 12, 1, 5);
  const double ymax = 0.6 * 2 * 3.14159265358979 / f.period();
  std::uniform_real_distribution<double> dist(-ymax, ymax);
  for (int i = 0; i < 20; ++i) {
    Real256 y(dist(rng));
    auto r = generating_identity<Real256>(f, y, Real256("1e-30"));
    v.bound(as_double(r.residual), 1e-20, "y=" + Verdict::fmt(static_cast<double>(y)));
    v.require(r.tail_bound < Real256("1e-25"), "tail bound too large");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<void(Verdict&)> run;
  };
  const std::vector<Criterion> all{
      {"coefficient exactness and Kontsevich-Zagier small-t fit", c1},
      {"Borel closed form vs Taylor coefficients (20, rel 1e-12, 128 bits)", c2},
      {"explicit trefoil Borel transform at 4 points (1e-12)", c3},
      {"Hadamard factorization exact for n <= 30", c4},
      {"discontinuity vs theta closed form (1e-8)", c5},
      {"constant identity C_M (1e-10)", c6},
      {"median = mean of lateral sums at x = 1, 2, 10 (1e-9)", c7},
      {"twisted-character decomposition over all pairs (1e-12)", c8},
      {"support size 2(s-1)(t-1)", c9},
      {"modular transform at i, 2i, i/3 (1e-10)", c10},
      {"Eichler boundary and period relations (1e-6)", c11},
      {"boundary median vs radial limit (1e-6) and interior extrapolation (1e-4)", c12},
      {"strange identities at roots of unity (1e-10 / 1e-8)", c13},
      {"colored Jones prefactor identity, N <= 20 (1e-20)", c14},
      {"generating identity, 20 random y at 256 bits (1e-20)", c15},
  };
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    Verdict v;
    auto start = std::chrono::steady_clock::now();
    try {
      all[i].run(v);
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s [worst %s, %.1fs]%s%s\n", v.ok ? "PASS" : "FAIL", i + 1, all[i].label,
                Verdict::fmt(v.worst).c_str(), secs, v.detail.empty() ? "" : " ", v.detail.c_str());
    std::fflush(stdout);
    if (!v.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
