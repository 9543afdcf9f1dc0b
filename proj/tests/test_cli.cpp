#include "doctest.h"
#include "hres/cli.hpp"
#include "hres/habiro.hpp"

using namespace hres;
using namespace hres::cli;

namespace {

Config chi_config(int s, int t, int n, int m) {
  Config cfg;
  cfg.family = Family::chi;
  cfg.s = s;
  cfg.t = t;
  cfg.n = n;
  cfg.m = m;
  return cfg;
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (Family f : {Family::general, Family::chi, Family::hikami, Family::t3_2k})
    CHECK(parse_family(family_name(f)) == f);
  CHECK_THROWS_AS(parse_family("knot"), ConfigError);
}

TEST_CASE("family expansions") {
  Config h;
  h.family = Family::hikami;
  h.u = 2;
  h.l = 0;
  auto hs = h.theta_spec();
  auto ref = strange_theta_spec({StrangeConfig::Family::hikami, 2, 0});
  CHECK(hs.a == ref.a);
  CHECK(hs.b == ref.b);
  CHECK(hs.f == ref.f);

  Config k;
  k.family = Family::t3_2k;
  k.k = 2;
  auto p = k.chi();
  CHECK(p.s == 3);
  CHECK(p.t == 4);
  CHECK(p.n == 2);
  CHECK(p.m == 1);
  auto ks = k.theta_spec();
  CHECK(ks.a == 25);
  CHECK(ks.b == 48);
  CHECK(ks.f.scale() == Rational(-1, 2));

  auto cs = chi_config(2, 3, 1, 1).theta_spec();
  CHECK(cs.a == 0);
  CHECK(cs.b == 24);
  CHECK(cs.f.scale() == 1);

  CHECK(Config{}.is_trefoil());
  CHECK(h.is_trefoil() == false);
  h.u = 1;
  CHECK(h.is_trefoil());
  CHECK_FALSE(chi_config(2, 3, 1, 1).is_trefoil());
}

TEST_CASE("validation names the offending field") {
  auto message = [](const Config& c) {
    try {
      c.validate();
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(chi_config(2, 4, 1, 1)).find("coprime") != std::string::npos);
  Config bits;
  bits.bits = 1000;
  CHECK(message(bits).find("prec") != std::string::npos);
  Config h;
  h.family = Family::hikami;
  h.u = 2;
  h.l = 2;
  CHECK(message(h).find("l:") != std::string::npos);
  Config tol;
  tol.tolerance = -1;
  CHECK(message(tol).find("tol") != std::string::npos);
  CHECK(message(Config{}).empty());
  CHECK_THROWS_AS(Config{}.chi(), ConfigError);
}

TEST_CASE("report serialization") {
  Report rep;
  rep.suite = "demo";
  rep.config = Config{}.to_json();
  CheckRecord ok;
  ok.name = "a";
  ok.pass = true;
  CheckRecord bad;
  bad.name = "b";
  bad.note = "x, \"y\"";
  rep.checks = {ok, bad};
  CHECK(rep.passed() == 1);
  CHECK(rep.failed() == 1);
  auto j = rep.to_json();
  CHECK(j["schema"] == "hres-report/1");
  CHECK(j["summary"]["failed"] == 1);
  CHECK(j["checks"][0].contains("wall_time") == false);
  CHECK(j["config"]["c"] == "-1/2");
  std::string csv = rep.to_csv();
  CHECK(csv.rfind("name,pass,abs_error,tolerance,", 0) == 0);
  CHECK(csv.find("\"x, \"\"y\"\"\"") != std::string::npos);
}

TEST_CASE("suites pass and apply by family") {
  Config cfg;
  cfg.bits = 53;
  auto rep = run_suite("cm", cfg);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].pass);
  CHECK_THROWS_AS(run_suite("gentor", cfg), ConfigError);
  CHECK_THROWS_AS(run_suite("nope", cfg), ConfigError);

  auto gen = run_suite("gentor", chi_config(3, 4, 1, 1));
  CHECK(gen.failed() == 0);
  CHECK(gen.checks.size() == 3 + 1 + 3);  // pairs, support size, modular transform

  Config strict = cfg;
  strict.tolerance = 1e-300;
  auto hard = run_suite("coeffs", strict);
  CHECK(hard.failed() > 0);  // the small-t fits are not exact
  CHECK(hard.checks[0].tolerance == "1e-300");
}

TEST_CASE("reports are byte-identical across runs") {
  Config cfg;
  cfg.bits = 128;
  CHECK(run_suite("coeffs", cfg).to_json().dump() == run_suite("coeffs", cfg).to_json().dump());
  auto rep = run_suite("coeffs", cfg);
  CHECK(rep.failed() == 0);
}

TEST_CASE("series exports") {
  Config cfg;
  auto coeffs = export_series(cfg, ExportKind::coefficients, 4);
  REQUIRE(coeffs.rows.size() == 4);
  CHECK(coeffs.rows[3][1] == "257543");
  CHECK(coeffs.rows[1][2] == "23/24");
  auto sing = export_series(cfg, ExportKind::singularities, 3);
  REQUIRE(sing.rows.size() == 3);
  CHECK(sing.rows[0][0] == "1");
  CHECK(sing.rows[1][0] == "5");
  CHECK(sing.rows[2][2] == "49/6");
  CHECK(sing.to_json(cfg.to_json())["rows"][1]["position_over_pi2"] == "25/6");
  CHECK_THROWS_AS(export_series(cfg, ExportKind::coefficients, 0), ConfigError);
  CHECK(parse_export_kind("borel-taylor") == ExportKind::borel_taylor);
  CHECK_THROWS_AS(parse_export_kind("plot"), ConfigError);
}

TEST_CASE("single-point evaluation") {
  Config cfg;
  cfg.bits = 53;
  auto med = eval_point(cfg, EvalKind::median, "1", "0");
  CHECK(std::stod(med["value"]["re"].get<std::string>()) == doctest::Approx(0.81573431119245).epsilon(1e-10));
  auto g = eval_point(cfg, EvalKind::borel, "0", "0");
  CHECK(std::stod(g["value"]["re"].get<std::string>()) == doctest::Approx(23.0 / 24.0).epsilon(1e-9));
  CHECK_THROWS_AS(eval_point(cfg, EvalKind::theta, "1", "-1"), ConfigError);
  CHECK_THROWS_AS(eval_point(cfg, EvalKind::median, "one", "0"), ConfigError);
  CHECK_THROWS_AS(eval_point(cfg, EvalKind::boundary_median, "0", "0"), ConfigError);
  Config chi = chi_config(2, 3, 1, 1);
  chi.bits = 53;
  chi.alphas = {Rational(1)};
  auto b = eval_point(chi, EvalKind::boundary_median, "", "");
  CHECK(std::stod(b["value"]["re"].get<std::string>()) == doctest::Approx(-1.93185165).epsilon(1e-8));
  CHECK(std::stod(b["value"]["im"].get<std::string>()) == doctest::Approx(-0.51763809).epsilon(1e-8));
}
