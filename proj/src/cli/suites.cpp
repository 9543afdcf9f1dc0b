#include "hres/cli.hpp"

#include "hres/borel.hpp"
#include "hres/habiro.hpp"
#include "hres/qseries.hpp"
#include "hres/rational.hpp"
#include "hres/resum.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

namespace hres::cli {

namespace {

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

template <class Real>
Number number(const Complex<Real>& z, const Real& err = Real(0)) {
  return {to_decimal(z.real()), to_decimal(z.imag()), to_decimal(err, 6)};
}

Number number(const Rational& q) { return {format_rational(q), "0", "0"}; }

template <class Real>
Complex<Real> complex_of(const Rational& q) {
  return {to_real<Real>(q), Real(0)};
}

template <class Real>
Json complex_json(const Complex<Real>& z) {
  return Json{{"re", to_decimal(z.real(), 17)}, {"im", to_decimal(z.imag(), 17)}};
}

// Both sides of one check; abs_error defaults to |lhs - rhs|.
template <class Real>
struct Outcome {
  Number lhs;
  Number rhs;
  std::optional<Real> abs_error;
  Complex<Real> lhs_value{};
  Complex<Real> rhs_value{};
  std::string note;
};

template <class Real>
Outcome<Real> compare(const Complex<Real>& lhs, const Complex<Real>& rhs, const Real& lhs_err = Real(0),
                      const Real& rhs_err = Real(0)) {
  Outcome<Real> o;
  o.lhs = number(lhs, lhs_err);
  o.rhs = number(rhs, rhs_err);
  o.lhs_value = lhs;
  o.rhs_value = rhs;
  return o;
}

template <class Real>
class Runner {
 public:
  Runner(const Config& cfg, Report& rep) : cfg_(cfg), rep_(rep) {}

  double tol(double fallback) const { return cfg_.tolerance.value_or(fallback); }

  PrecisionContext<Real> ctx(double check_tol) const {
    double floor = 32 * static_cast<double>(eps<Real>());
    return PrecisionContext<Real>::with_tolerance(std::max(check_tol / 100, floor));
  }

  // Runs one check; an exception becomes a failing record carrying its message.
  void check(const std::string& name, Json inputs, double default_tol, const std::function<Outcome<Real>()>& body) {
    CheckRecord rec;
    rec.name = name;
    rec.inputs = std::move(inputs);
    const double t = tol(default_tol);
    rec.tolerance = fmt_double(t);
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome<Real> o = body();
      using std::abs;
      Real err = o.abs_error ? *o.abs_error : Real(abs(o.lhs_value - o.rhs_value));
      rec.lhs = o.lhs;
      rec.rhs = o.rhs;
      rec.abs_error = to_decimal(err, 6);
      rec.pass = err <= Real(t);  // false for NaN
      rec.note = o.note;
    } catch (const std::exception& e) {
      rec.abs_error = "nan";
      rec.lhs = rec.rhs = Number{"nan", "nan", "nan"};
      rec.pass = false;
      rec.note = e.what();
    }
    if (cfg_.timing)
      rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep_.checks.push_back(std::move(rec));
  }

  const Config& cfg() const { return cfg_; }

 private:
  const Config& cfg_;
  Report& rep_;
};

// The trefoil Borel transform written out: (3 pi/(2 sqrt 2)) sum n chi_12(n) (n^2 pi^2/6 - p)^{-5/2}.
template <class Real>
Complex<Real> explicit_trefoil_borel(const Complex<Real>& p) {
  using std::sqrt;
  const Real pi2 = pi<Real>() * pi<Real>();
  Complex<Real> sum{};
  // the terms fall like n^{-4}; past n = 2e5 the remainder is below 1e-16
  for (long n = 1; n <= 200000; ++n) {
    long r = n % 12;
    int k = (r == 1 || r == 11) ? 1 : (r == 5 || r == 7) ? -1 : 0;
    if (k == 0) continue;
    Complex<Real> w = Complex<Real>(Real(n) * Real(n) * pi2 / 6) - p;
    sum += Complex<Real>(Real(n * k)) / (w * w * sqrt(w));
  }
  return sum * (3 * pi<Real>() / (2 * sqrt(Real(2))));
}

bool strange_applies(const Config& cfg) {
  return cfg.family == Family::hikami || (cfg.family == Family::general && cfg.is_trefoil());
}

bool suite_applies(std::string_view suite, const Config& cfg) {
  if (suite == "gentor" || suite == "eichler") return cfg.chi_type();
  if (suite == "strange") return strange_applies(cfg);
  return true;
}

std::string why_not(std::string_view suite) {
  if (suite == "strange") return "suite strange: needs the trefoil (general defaults) or the hikami family";
  return "suite " + std::string(suite) + ": needs a chi-type family (chi, hikami or t3-2k)";
}

// Spec for the boundary checks: chi-type families are taken with a = 0.
ThetaSpec main_spec(const Config& cfg) {
  ThetaSpec sp = cfg.theta_spec();
  if (cfg.chi_type()) sp.a = 0;
  return sp;
}

template <class Real>
void suite_coeffs(Runner<Real>& R) {
  const Config& cfg = R.cfg();
  ThetaSpec spec = cfg.theta_spec();
  FormalSeries series = series_coefficients(spec, 8);
  R.check("coeffs.constant_term", Json::object(), 0.0, [&] {
    Outcome<Real> o;
    o.lhs = number(series.constant());
    o.rhs = number(series.C(0));
    o.abs_error = to_real<Real>(abs(series.constant() - series.C(0)));
    o.note = "C_M from the Bernoulli sum against C_0";
    return o;
  });
  auto fit = small_t_coefficients<Real>(spec.f, 2);
  for (int k = 0; k < 2; ++k) {
    R.check("coeffs.small_t.C" + std::to_string(k), Json{{"k", k}}, 1e-6, [&, k] {
      Complex<Real> exact = complex_of<Real>(series.C(static_cast<std::size_t>(k)));
      auto o = compare<Real>(fit[static_cast<std::size_t>(k)], exact);
      using std::abs;
      o.abs_error = Real(abs(o.lhs_value - exact)) / std::max(Real(1), Real(abs(exact)));
      o.rhs = number(series.C(static_cast<std::size_t>(k)));
      o.note = "relative; theta side sum n f(n) e^{-n^2 s} fitted at small s";
      return o;
    });
  }
  if (!cfg.is_trefoil()) return;
  const long long ref[] = {1, 23, 1681, 257543};
  for (int k = 0; k < 4; ++k) {
    R.check("coeffs.trefoil.C" + std::to_string(k), Json{{"k", k}}, 0.0, [&, k] {
      Outcome<Real> o;
      const Rational& c = series.C(static_cast<std::size_t>(k));
      o.lhs = number(c);
      o.rhs = number(Rational(ref[k]));
      o.abs_error = to_real<Real>(abs(c - Rational(ref[k])));
      return o;
    });
  }
  auto kz = trefoil_small_t_coefficients<Real>(2);
  for (int k = 0; k < 2; ++k) {
    R.check("coeffs.kontsevich_zagier.C" + std::to_string(k), Json{{"k", k}}, 1e-6, [&, k] {
      Complex<Real> exact = complex_of<Real>(series.C(static_cast<std::size_t>(k)));
      auto o = compare<Real>(Complex<Real>(kz[static_cast<std::size_t>(k)]), exact);
      using std::abs;
      o.abs_error = Real(abs(o.lhs_value - exact)) / std::max(Real(1), Real(abs(exact)));
      o.rhs = number(series.C(static_cast<std::size_t>(k)));
      o.note = "relative; e^{-t/24} sum (q)_n at q = e^{-t} fitted at small t";
      return o;
    });
  }
}

template <class Real>
void suite_borel(Runner<Real>& R) {
  const Config& cfg = R.cfg();
  FormalSeries series = series_coefficients(cfg.theta_spec(), 34);
  const int count = 20;
  R.check("borel.closed_form_taylor", Json{{"count", count}}, 1e-12, [&] {
    auto exact = borel_coefficients(series, count);
    auto cf = borel_closed_form_taylor<Real>(series, count, R.ctx(R.tol(1e-12)));
    Outcome<Real> o;
    Real worst = -1;
    for (int n = 0; n < count; ++n) {
      using std::abs;
      Complex<Real> e = complex_of<Real>(exact[static_cast<std::size_t>(n)]);
      Real denom = abs(e) > 0 ? Real(abs(e)) : Real(1);
      Real rel = Real(abs(cf[static_cast<std::size_t>(n)].value - e)) / denom;
      if (rel > worst || !(rel == rel)) {
        worst = rel;
        o.lhs = number(cf[static_cast<std::size_t>(n)].value, cf[static_cast<std::size_t>(n)].error);
        o.rhs = number(exact[static_cast<std::size_t>(n)]);
        o.note = "worst relative error at n = " + std::to_string(n);
      }
      if (!(rel == rel)) break;
    }
    o.abs_error = worst;
    return o;
  });
  const int hcount = 31;
  R.check("borel.hadamard", Json{{"count", hcount}}, 0.0, [&] {
    auto direct = borel_coefficients(series, hcount);
    auto g1 = g1_coefficients(series, hcount);
    auto g2 = g2_coefficients(series.b(), hcount);
    Rational worst = 0;
    std::size_t at = 0;
    for (std::size_t n = 0; n < direct.size(); ++n) {
      Rational d = abs(g1[n] * g2[n] - direct[n]);
      if (d > worst) worst = d, at = n;
    }
    Outcome<Real> o;
    o.lhs = number(g1[at] * g2[at]);
    o.rhs = number(direct[at]);
    o.abs_error = to_real<Real>(worst);
    o.note = "exact; g1 * g2 termwise against the direct coefficients for n < " + std::to_string(hcount);
    return o;
  });
  R.check("borel.origin", Json{{"p", complex_json(Complex<Real>{})}}, 1e-12, [&] {
    auto g = borel_eval<Real>(series, Complex<Real>{}, R.ctx(R.tol(1e-12)));
    auto o = compare<Real>(g.value, complex_of<Real>(series.a(1)), g.error);
    o.rhs = number(series.a(1));
    o.note = "G(0) = a_1";
    return o;
  });
  if (!cfg.is_trefoil()) return;
  const Real pi2 = pi<Real>() * pi<Real>();
  for (Complex<Real> p : {Complex<Real>(0), Complex<Real>(-1), Complex<Real>(1, 1), Complex<Real>(pi2 / 12)}) {
    R.check("borel.explicit_trefoil", Json{{"p", complex_json(p)}}, 1e-12, [&, p] {
      auto g = borel_eval<Real>(series, p, R.ctx(R.tol(1e-12)));
      return compare<Real>(g.value, explicit_trefoil_borel(p), g.error);
    });
  }
}

template <class Real>
void suite_disc(Runner<Real>& R) {
  FormalSeries series = series_coefficients(R.cfg().theta_spec(), 16);
  for (Complex<Real> x : {Complex<Real>(Real(1) / 2), Complex<Real>(1), Complex<Real>(1, Real(1) / 4)}) {
    R.check("disc.closed_form", Json{{"x", complex_json(x)}}, 1e-8, [&, x] {
      auto d = discontinuity(series, x, R.ctx(R.tol(1e-8)));
      auto o = compare<Real>(d.numeric.value, d.closed_form.value, d.numeric.error, d.closed_form.error);
      o.note = "S^+ - S^- against the theta closed form";
      return o;
    });
  }
}

template <class Real>
void suite_cm(Runner<Real>& R) {
  FormalSeries series = series_coefficients(R.cfg().theta_spec(), 4);
  R.check("cm.constant", Json::object(), 1e-10, [&] {
    auto e = constant_from_tilde(series, R.ctx(R.tol(1e-10)));
    auto o = compare<Real>(e.value, complex_of<Real>(series.constant()), e.error);
    o.rhs = number(series.constant());
    o.note = "(2Mc/pi^2) sum f~(l)/l^2 against the exact C_M";
    return o;
  });
}

std::string pair_name(const IndexPair& p) { return "(" + std::to_string(p.n) + "," + std::to_string(p.m) + ")"; }

template <class Real>
void suite_gentor(Runner<Real>& R) {
  ChiParams cp = R.cfg().chi();
  for (const IndexPair& p : pair_set(cp.s, cp.t).pairs) {
    R.check("gentor.decomposition", Json{{"s", cp.s}, {"t", cp.t}, {"pair", pair_name(p)}}, 1e-12, [&, p] {
      auto rep = verify_decomposition<Real>(cp.s, cp.t, p, R.tol(1e-12));
      Outcome<Real> o;
      o.lhs = o.rhs = Number{"0", "0", "0"};
      o.abs_error = Real(rep.max_residual);
      if (!rep.support_ok) {
        o.abs_error = Real(1);
        o.note = "nonzero value on a residue divisible by s or t";
      } else {
        o.note = "max residual over all residues mod 2st";
      }
      return o;
    });
  }
  R.check("gentor.support_size", Json{{"s", cp.s}, {"t", cp.t}}, 0.0, [&] {
    auto n = static_cast<long long>(support_set(cp.s, cp.t).size());
    long long expect = 2LL * (cp.s - 1) * (cp.t - 1);
    Outcome<Real> o;
    o.lhs = number(Rational(n));
    o.rhs = number(Rational(expect));
    o.abs_error = Real(std::llabs(n - expect));
    return o;
  });
  IndexPair own{cp.n, cp.m};
  for (Complex<Real> z : {Complex<Real>(0, 1), Complex<Real>(0, 2), Complex<Real>(0, Real(1) / 3)}) {
    R.check("gentor.modular_transform", Json{{"pair", pair_name(own)}, {"z", complex_json(z)}}, 1e-10, [&, z] {
      auto r = verify_modular_transform<Real>(cp.s, cp.t, own, z);
      auto o = compare<Real>(r.lhs, r.rhs, r.error);
      o.note = r.note;
      return o;
    });
  }
}

template <class Real>
void suite_strange(Runner<Real>& R) {
  const Config& cfg = R.cfg();
  StrangeConfig sc;
  if (cfg.family == Family::hikami) sc = {StrangeConfig::Family::hikami, cfg.u, cfg.l};
  const bool tref = sc.family == StrangeConfig::Family::trefoil;
  std::vector<Rational> alphas = cfg.alphas;
  if (alphas.empty())
    for (int N = 1; N <= (tref ? 12 : 8); ++N) alphas.emplace_back(1, N);
  for (const Rational& a : alphas) {
    R.check("strange.identity", Json{{"alpha", format_rational(a)}}, tref ? 1e-10 : 1e-8, [&, a] {
      auto r = verify_strange<Real>(sc, a);
      auto o = compare<Real>(r.lhs, r.rhs, r.error);
      o.note = r.note;
      return o;
    });
  }
  if (!tref) return;
  for (long long N = 2; N <= 12; ++N) {
    R.check("strange.colored_jones", Json{{"N", N}}, 1e-10, [&, N] {
      RootOfUnity q(1, N);
      return compare<Real>(colored_jones_trefoil<Real>(N), q.value<Real>() * kontsevich_zagier_eval<Real>(q));
    });
  }
}

template <class Real>
void suite_main2(Runner<Real>& R) {
  const Config& cfg = R.cfg();
  ThetaSpec spec = main_spec(cfg);
  FormalSeries series = series_coefficients(spec, 16);
  std::vector<Rational> alphas = cfg.alphas;
  if (alphas.empty()) alphas = {Rational(1), Rational(1, 2), Rational(1, 3), Rational(-1, 2)};
  for (const Rational& a : alphas) {
    Json in{{"alpha", format_rational(a)}};
    std::optional<Estimate<Real>> bm;
    auto boundary = [&] {
      if (!bm) bm = boundary_median(series, a, R.ctx(R.tol(1e-6)));
      return *bm;
    };
    if (cfg.chi_type()) {
      R.check("main2.radial_limit", in, 1e-6, [&] {
        auto b = boundary();
        auto o = compare<Real>(b.value, theta_radial_limit(make_theta<Real>(spec), a), b.error);
        o.note = "boundary median against the radial limit of theta^(1)";
        return o;
      });
    }
    R.check("main2.interior_extrapolation", in, 1e-4, [&] {
      auto b = boundary();
      auto o = compare<Real>(b.value, boundary_median_extrapolation(series, a, R.ctx(R.tol(1e-6))), b.error);
      o.note = "boundary median against Richardson extrapolation of the interior median sum";
      return o;
    });
  }
}

template <class Real>
void suite_eichler(Runner<Real>& R) {
  const Config& cfg = R.cfg();
  ChiParams cp = cfg.chi();
  IndexPair own{cp.n, cp.m};
  std::vector<Rational> alphas = cfg.alphas;
  if (alphas.empty()) alphas = {Rational(1), Rational(1, 2)};
  for (const Rational& a : alphas) {
    R.check("eichler.boundary", Json{{"alpha", format_rational(a)}}, 1e-6, [&, a] {
      auto r = verify_boundary_eichler<Real>(cp.s, cp.t, own, a, R.ctx(R.tol(1e-6)));
      auto o = compare<Real>(r.lhs, r.rhs, r.error);
      o.note = r.note;
      return o;
    });
  }
  GaussianRational z{Rational(0), Rational(-1)};
  R.check("eichler.period_relation", Json{{"z", Json{{"re", "0"}, {"im", "-1"}}}}, 1e-6, [&] {
    auto r = verify_period_relation<Real>(cp.s, cp.t, own, z, R.ctx(R.tol(1e-6)));
    auto o = compare<Real>(r.lhs, r.rhs, r.error);
    o.note = r.note;
    return o;
  });
}

template <class Real>
void run_one(std::string_view suite, Runner<Real>& R) {
  if (suite == "coeffs") suite_coeffs(R);
  else if (suite == "borel") suite_borel(R);
  else if (suite == "disc") suite_disc(R);
  else if (suite == "cm") suite_cm(R);
  else if (suite == "gentor") suite_gentor(R);
  else if (suite == "strange") suite_strange(R);
  else if (suite == "main2") suite_main2(R);
  else if (suite == "eichler") suite_eichler(R);
}

template <class Real>
Report run_typed(std::string_view suite, const Config& cfg) {
  Report rep;
  rep.suite = std::string(suite);
  rep.config = cfg.to_json();
  rep.config["working_bits"] = mantissa_bits<Real>();
  Runner<Real> R(cfg, rep);
  if (suite == "all") {
    for (const auto& s : suite_names()) {
      if (s == "all") continue;
      if (suite_applies(s, cfg)) run_one(s, R);
      else rep.skipped.push_back(s);
    }
  } else {
    run_one(suite, R);
  }
  return rep;
}

// Calls fn.template operator()<Real>() for the narrowest type holding the requested bits.
template <class Fn>
decltype(auto) with_precision(int bits, Fn&& fn) {
  if (bits <= 53) return fn.template operator()<double>();
  if (bits <= 128) return fn.template operator()<Real128>();
  return fn.template operator()<Real256>();
}

template <class Real>
Complex<Real> parse_point(const std::string& re, const std::string& im) {
  try {
    return {from_decimal<Real>(re), from_decimal<Real>(im.empty() ? "0" : im)};
  } catch (const std::exception&) {
    throw ConfigError("x: '" + re + "' + i '" + im + "' is not a decimal number");
  }
}

template <class Real>
Table export_typed(const Config& cfg, ExportKind kind, int count) {
  Table tab;
  FormalSeries series = series_coefficients(cfg.theta_spec(), count + 2);
  switch (kind) {
    case ExportKind::coefficients: {
      tab.title = "coefficients";
      tab.columns = {"n", "C_n", "a_n", "a_n_float"};
      for (int n = 0; n < count; ++n) {
        auto k = static_cast<std::size_t>(n);
        tab.rows.push_back({std::to_string(n), format_rational(series.C(k)), format_rational(series.a(k)),
                            to_decimal(to_real<Real>(series.a(k)))});
      }
      break;
    }
    case ExportKind::borel_taylor: {
      tab.title = "borel-taylor";
      tab.columns = {"n", "exact", "closed_form", "err"};
      auto exact = borel_coefficients(series, count);
      auto cf = borel_closed_form_taylor<Real>(series, count,
                                               PrecisionContext<Real>::with_tolerance(cfg.tolerance.value_or(1e-12)));
      for (int n = 0; n < count; ++n) {
        auto k = static_cast<std::size_t>(n);
        tab.rows.push_back({std::to_string(n), format_rational(exact[k]), to_decimal(cf[k].value.real()),
                            to_decimal(cf[k].error, 6)});
      }
      break;
    }
    case ExportKind::singularities: {
      tab.title = "singularities";
      tab.columns = {"l", "position", "position_over_pi2", "residue_weight"};
      auto set = singularity_set(series);
      const Rational scale(series.b(), static_cast<long long>(series.period()) * series.period());
      for (long long l : set.indices(count)) {
        tab.rows.push_back({std::to_string(l), to_decimal(set.template position<Real>(l)),
                            format_rational(scale * l * l), to_decimal(set.tilde().template value<Real>(l))});
      }
      break;
    }
  }
  return tab;
}

template <class Real>
Json eval_typed(const Config& cfg, EvalKind kind, const std::string& re, const std::string& im) {
  auto ctx = PrecisionContext<Real>::with_tolerance(cfg.tolerance.value_or(1e-8) / 100);
  Json out;
  out["schema"] = "hres-eval/1";
  out["what"] = nullptr;  // keeps the key ahead of config
  out["config"] = cfg.to_json();
  Estimate<Real> est;
  if (kind == EvalKind::boundary_median) {
    if (cfg.alphas.empty()) throw ConfigError("alpha: boundary-median needs --alpha");
    out["what"] = "boundary-median";
    out["alpha"] = format_rational(cfg.alphas.front());
    est = boundary_median(series_coefficients(main_spec(cfg), 16), cfg.alphas.front(), ctx);
  } else {
    Complex<Real> x = parse_point<Real>(re, im);
    out["x"] = Json{{"re", re}, {"im", im.empty() ? "0" : im}};
    ThetaSpec spec = cfg.theta_spec();
    FormalSeries series = series_coefficients(spec, 16);
    switch (kind) {
      case EvalKind::theta:
        out["what"] = "theta";
        if (!(x.imag() > 0)) throw ConfigError("x: theta needs Im x > 0");
        est = theta_upper_half(make_theta<Real>(spec), x);
        break;
      case EvalKind::borel:
        out["what"] = "borel";
        est = borel_eval(series, x, ctx);
        break;
      case EvalKind::lateral_plus:
      case EvalKind::lateral_minus: {
        out["what"] = kind == EvalKind::lateral_plus ? "lateral-plus" : "lateral-minus";
        auto r = lateral_sum(series, x, kind == EvalKind::lateral_plus ? Side::plus : Side::minus, ctx);
        est = {r.value, r.error, r.converged};
        break;
      }
      case EvalKind::median: {
        out["what"] = "median";
        auto r = median_sum(series, x, ctx);
        est = {r.value, r.error, r.converged};
        break;
      }
      case EvalKind::boundary_median: break;
    }
  }
  out["value"] = number(est.value, est.error).to_json();
  out["converged"] = est.converged;
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"coeffs", "borel",   "cm",      "disc", "gentor",
                                              "strange", "main2", "eichler", "all"};
  return names;
}

Report run_suite(std::string_view suite, const Config& cfg) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw ConfigError("suite: unknown suite '" + std::string(suite) + "'");
  cfg.validate();
  if (suite != "all" && !suite_applies(suite, cfg)) throw ConfigError(why_not(suite));
  return with_precision(cfg.bits, [&]<class Real>() { return run_typed<Real>(suite, cfg); });
}

Table export_series(const Config& cfg, ExportKind kind, int count) {
  if (count < 1) throw ConfigError("count: must be >= 1 (got " + std::to_string(count) + ")");
  cfg.validate();
  return with_precision(cfg.bits, [&]<class Real>() { return export_typed<Real>(cfg, kind, count); });
}

Json eval_point(const Config& cfg, EvalKind kind, const std::string& re, const std::string& im) {
  cfg.validate();
  return with_precision(cfg.bits, [&]<class Real>() { return eval_typed<Real>(cfg, kind, re, im); });
}

}  // namespace hres::cli
