#pragma once

#include "hres/exact.hpp"
#include "hres/periodic.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hres::cli {

using Json = nlohmann::ordered_json;

enum class Family { general, chi, hikami, t3_2k };

Family parse_family(std::string_view name);
std::string family_name(Family f);

// Family parameters plus run settings. Only the fields of the selected family are read.
struct Config {
  Family family = Family::general;
  // general: f = c on +-k1, -c on +-k2 mod M; the defaults are the trefoil
  Rational c{-1, 2};
  int M = 12;
  long long k1 = 1;
  long long k2 = 5;
  long long a = 1;
  long long b = 24;
  // chi: c chi^{(n,m)}_{2st}, a = 0, b = 4st; c defaults to 1 there
  int s = 2;
  int t = 3;
  int n = 1;
  int m = 1;
  std::optional<Rational> chi_c;
  // hikami
  int u = 1;
  int l = 0;
  // t3-2k
  int k = 2;

  int bits = 128;
  std::optional<double> tolerance;  // overrides every per-check tolerance when set
  std::vector<Rational> alphas;
  bool timing = false;

  // Throws ConfigError naming the offending field.
  void validate() const;
  ThetaSpec theta_spec() const;
  bool chi_type() const { return family != Family::general; }
  ChiParams chi() const;
  // Trefoil parameters in either spelling (general defaults, chi(2,3,1,1) with c=-1/2, hikami u=1).
  bool is_trefoil() const;
  Json to_json() const;
};

// {"re", "im", "err"} as decimal strings.
struct Number {
  std::string re;
  std::string im;
  std::string err;
  Json to_json() const { return Json{{"re", re}, {"im", im}, {"err", err}}; }
};

struct CheckRecord {
  std::string name;
  Json inputs = Json::object();
  Number lhs;
  Number rhs;
  std::string abs_error;
  std::string tolerance;
  bool pass = false;
  std::string note;
  std::optional<double> wall_time;
};

struct Report {
  std::string suite;
  Json config;
  std::vector<CheckRecord> checks;
  std::vector<std::string> skipped;  // suites of "all" that do not apply to the family

  int passed() const;
  int failed() const { return static_cast<int>(checks.size()) - passed(); }
  Json to_json() const;
  std::string to_csv() const;
};

const std::vector<std::string>& suite_names();

// Runs a suite; an inapplicable suite named directly is a ConfigError.
Report run_suite(std::string_view suite, const Config& cfg);

enum class ExportKind { coefficients, borel_taylor, singularities };
ExportKind parse_export_kind(std::string_view name);

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::string to_csv() const;
  Json to_json(const Json& config) const;
};

Table export_series(const Config& cfg, ExportKind kind, int count);

enum class EvalKind { theta, borel, lateral_plus, lateral_minus, median, boundary_median };
EvalKind parse_eval_kind(std::string_view name);

// Single-point evaluation. theta: tau = x in the upper half plane; borel: p = x;
// lateral and median sums: at x; boundary-median: at the first alpha.
Json eval_point(const Config& cfg, EvalKind kind, const std::string& re, const std::string& im);

}  // namespace hres::cli
