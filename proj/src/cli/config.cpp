#include "hres/cli.hpp"

#include "hres/rational.hpp"

#include <sstream>

namespace hres::cli {

Family parse_family(std::string_view name) {
  if (name == "general") return Family::general;
  if (name == "chi") return Family::chi;
  if (name == "hikami") return Family::hikami;
  if (name == "t3-2k") return Family::t3_2k;
  throw ConfigError("family: expected general, chi, hikami or t3-2k (got '" + std::string(name) + "')");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::general: return "general";
    case Family::chi: return "chi";
    case Family::hikami: return "hikami";
    case Family::t3_2k: return "t3-2k";
  }
  return "general";
}

void Config::validate() const {
  if (bits < 2 || bits > 256) throw ConfigError("prec: bits must lie in 2..256 (got " + std::to_string(bits) + ")");
  if (tolerance && !(*tolerance > 0)) throw ConfigError("tol: tolerance must be positive");
  switch (family) {
    case Family::general:
      if (b <= 0) throw ConfigError("b: must be positive");
      if (a < 0) throw ConfigError("a: must be >= 0");
      break;
    case Family::chi:
      break;
    case Family::hikami:
      if (u < 1) throw ConfigError("u: must be >= 1");
      if (l < 0 || l >= u) throw ConfigError("l: must satisfy 0 <= l < u");
      break;
    case Family::t3_2k:
      if (k < 1 || k > 20) throw ConfigError("k: must lie in 1..20");
      break;
  }
  theta_spec();  // the owning constructors validate the rest
}

ChiParams Config::chi() const {
  switch (family) {
    case Family::chi: return {s, t, n, m};
    case Family::hikami: return {2, 2 * u + 1, 1, l + 1};
    case Family::t3_2k: return {3, 1 << k, 2, 1};
    case Family::general: break;
  }
  throw ConfigError("family: this check needs a chi-type family (chi, hikami or t3-2k)");
}

ThetaSpec Config::theta_spec() const {
  switch (family) {
    case Family::general:
      return {a, b, 1, make_periodic(c, M, k1, k2)};
    case Family::chi: {
      ChiParams p = chi();
      return {0, 4LL * p.s * p.t, 1, chi_function(p).scaled(chi_c.value_or(Rational(1)))};
    }
    case Family::hikami: {
      ChiParams p = chi();
      long long r = 2LL * u - 2LL * l - 1;
      return {r * r, 8LL * p.t, 1, chi_function(p).scaled(Rational(-1, 2))};
    }
    case Family::t3_2k: {
      ChiParams p = chi();
      long long r = (2LL << k) - 3;
      return {r * r, 3LL << (k + 2), 1, chi_function(p).scaled(chi_c.value_or(Rational(-1, 2)))};
    }
  }
  throw ConfigError("family: unknown");
}

bool Config::is_trefoil() const {
  if (family == Family::hikami) return u == 1;
  if (family != Family::general) return false;
  ThetaSpec sp = theta_spec();
  return sp.a == 1 && sp.b == 24 && sp.f == make_periodic(Rational(-1, 2), 12, 1, 5);
}

Json Config::to_json() const {
  Json j;
  j["family"] = family_name(family);
  switch (family) {
    case Family::general:
      j["c"] = format_rational(c);
      j["M"] = M;
      j["k1"] = k1;
      j["k2"] = k2;
      j["a"] = a;
      j["b"] = b;
      break;
    case Family::chi:
      j["s"] = s;
      j["t"] = t;
      j["n"] = n;
      j["m"] = m;
      j["c"] = format_rational(chi_c.value_or(Rational(1)));
      break;
    case Family::hikami:
      j["u"] = u;
      j["l"] = l;
      break;
    case Family::t3_2k:
      j["k"] = k;
      j["c"] = format_rational(chi_c.value_or(Rational(-1, 2)));
      break;
  }
  j["precision_bits"] = bits;
  if (tolerance) {
    std::ostringstream os;
    os << *tolerance;
    j["tolerance"] = os.str();
  }
  if (!alphas.empty()) {
    Json arr = Json::array();
    for (const auto& al : alphas) arr.push_back(format_rational(al));
    j["alpha"] = arr;
  }
  return j;
}

int Report::passed() const {
  int p = 0;
  for (const auto& c : checks) p += c.pass ? 1 : 0;
  return p;
}

Json Report::to_json() const {
  Json j;
  j["schema"] = "hres-report/1";
  j["suite"] = suite;
  j["config"] = config;
  j["summary"] = Json{{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}};
  if (!skipped.empty()) j["skipped"] = skipped;
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json r;
    r["name"] = c.name;
    r["inputs"] = c.inputs;
    r["lhs"] = c.lhs.to_json();
    r["rhs"] = c.rhs.to_json();
    r["abs_error"] = c.abs_error;
    r["tolerance"] = c.tolerance;
    r["pass"] = c.pass;
    if (!c.note.empty()) r["note"] = c.note;
    if (c.wall_time) r["wall_time"] = *c.wall_time;
    arr.push_back(std::move(r));
  }
  j["checks"] = std::move(arr);
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out + "\n";
}

}  // namespace

std::string Report::to_csv() const {
  std::string out = csv_row({"name", "pass", "abs_error", "tolerance", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "note"});
  for (const auto& c : checks)
    out += csv_row({c.name, c.pass ? "true" : "false", c.abs_error, c.tolerance, c.lhs.re, c.lhs.im, c.rhs.re,
                    c.rhs.im, c.note});
  return out;
}

std::string Table::to_csv() const {
  std::string out = csv_row(columns);
  for (const auto& r : rows) out += csv_row(r);
  return out;
}

Json Table::to_json(const Json& config) const {
  Json j;
  j["schema"] = "hres-export/1";
  j["what"] = title;
  j["config"] = config;
  j["columns"] = columns;
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json row;
    for (std::size_t i = 0; i < columns.size(); ++i) row[columns[i]] = r[i];
    arr.push_back(std::move(row));
  }
  j["rows"] = std::move(arr);
  return j;
}

ExportKind parse_export_kind(std::string_view name) {
  if (name == "coefficients") return ExportKind::coefficients;
  if (name == "borel-taylor") return ExportKind::borel_taylor;
  if (name == "singularities") return ExportKind::singularities;
  throw ConfigError("what: expected coefficients, borel-taylor or singularities (got '" + std::string(name) + "')");
}

EvalKind parse_eval_kind(std::string_view name) {
  if (name == "theta") return EvalKind::theta;
  if (name == "borel") return EvalKind::borel;
  if (name == "lateral-plus") return EvalKind::lateral_plus;
  if (name == "lateral-minus") return EvalKind::lateral_minus;
  if (name == "median") return EvalKind::median;
  if (name == "boundary-median") return EvalKind::boundary_median;
  throw ConfigError("what: expected theta, borel, lateral-plus, lateral-minus, median or boundary-median (got '" +
                    std::string(name) + "')");
}

}  // namespace hres::cli
