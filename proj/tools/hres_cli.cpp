#include "hres/cli.hpp"
#include "hres/rational.hpp"

#include "CLI11.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iostream>

namespace {

using namespace hres;
using namespace hres::cli;

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kRuntime = 3;

// Raw flag values; parsed into a Config once CLI11 is done.
struct Flags {
  std::string family = "general";
  std::string c;
  int M = 12;
  long long k1 = 1, k2 = 5, a = 1, b = 24;
  int s = 2, t = 3, n = 1, m = 1;
  int u = 1, l = 0, k = 2;
  std::vector<std::string> alphas;
  int prec = 128;
  std::optional<double> tol;
  std::string out;
  std::string format = "json";
  bool timing = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--family", f.family, "general, chi, hikami or t3-2k")->capture_default_str();
  cmd->add_option("--c", f.c, "scale c as a rational (general: -1/2, chi: 1, t3-2k: -1/2)");
  cmd->add_option("--M", f.M, "period M (general)")->capture_default_str();
  cmd->add_option("--k1", f.k1, "residue k1 (general)")->capture_default_str();
  cmd->add_option("--k2", f.k2, "residue k2 (general)")->capture_default_str();
  cmd->add_option("--a", f.a, "exponent shift a (general)")->capture_default_str();
  cmd->add_option("--b", f.b, "exponent scale b (general)")->capture_default_str();
  cmd->add_option("--s", f.s, "s (chi)")->capture_default_str();
  cmd->add_option("--t", f.t, "t (chi)")->capture_default_str();
  cmd->add_option("--n", f.n, "n (chi)")->capture_default_str();
  cmd->add_option("--m", f.m, "m (chi)")->capture_default_str();
  cmd->add_option("--u", f.u, "u (hikami)")->capture_default_str();
  cmd->add_option("--l", f.l, "l (hikami)")->capture_default_str();
  cmd->add_option("--k", f.k, "k (t3-2k)")->capture_default_str();
  cmd->add_option("--alpha", f.alphas, "rational point j/N; repeat for several")->delimiter(',');
  cmd->add_option("--prec", f.prec, "working precision in bits (53, 128 or 256 tiers)")
      ->envname("HRES_PRECISION")
      ->capture_default_str();
  cmd->add_option("--tol", f.tol, "tolerance overriding every per-check default");
  cmd->add_option("--out", f.out, "output path (default stdout)");
  cmd->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
}

Config to_config(const Flags& f, CLI::App* cmd) {
  Config cfg;
  cfg.family = parse_family(f.family);
  cfg.M = f.M;
  cfg.k1 = f.k1;
  cfg.k2 = f.k2;
  cfg.a = f.a;
  cfg.b = f.b;
  cfg.s = f.s;
  cfg.t = f.t;
  cfg.n = f.n;
  cfg.m = f.m;
  cfg.u = f.u;
  cfg.l = f.l;
  cfg.k = f.k;
  if (cmd->count("--c")) {
    Rational c = parse_rational(f.c);
    if (cfg.family == Family::general) cfg.c = c;
    else if (cfg.family == Family::hikami) throw ConfigError("c: hikami fixes c = -1/2");
    else cfg.chi_c = c;
  }
  for (const auto& s : f.alphas) cfg.alphas.push_back(parse_rational(s));
  cfg.bits = f.prec;
  cfg.tolerance = f.tol;
  cfg.timing = f.timing;
  return cfg;
}

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream os(path, std::ios::binary);
  if (os) os << text;
  if (!os) {
    std::cerr << "error: cannot write '" << path << "': " << std::strerror(errno) << "\n";
    return kRuntime;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resurgence checks for partial theta series and their Habiro-side partners"};
  app.require_subcommand(1);
  Flags flags;

  auto* verify = app.add_subcommand("verify", "run a verification suite and write a report");
  add_common(verify, flags);
  std::string suite;
  verify->add_option("--suite", suite, "coeffs, borel, cm, disc, gentor, strange, main2, eichler or all")->required();
  verify->add_flag("--timing", flags.timing, "record wall time per check (breaks byte determinism)");

  auto* exportc = app.add_subcommand("export", "export series data as a table");
  add_common(exportc, flags);
  std::string what;
  int count = 10;
  exportc->add_option("--what", what, "coefficients, borel-taylor or singularities")->required();
  exportc->add_option("--count", count, "number of rows")->capture_default_str();

  auto* eval = app.add_subcommand("eval", "evaluate one quantity at one point");
  add_common(eval, flags);
  std::string eval_what, x_re = "1", x_im = "0";
  eval->add_option("--what", eval_what,
                   "theta, borel, lateral-plus, lateral-minus, median or boundary-median")
      ->required();
  eval->add_option("--x", x_re, "real part of the point (theta: tau, borel: p)")->capture_default_str();
  eval->add_option("--x-im", x_im, "imaginary part of the point")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (verify->parsed()) {
      Config cfg = to_config(flags, verify);
      Report rep = run_suite(suite, cfg);
      std::string text = flags.format == "csv" ? rep.to_csv() : rep.to_json().dump(2) + "\n";
      if (int rc = emit(text, flags.out)) return rc;
      std::cerr << rep.suite << ": " << rep.passed() << "/" << rep.checks.size() << " checks passed\n";
      return rep.failed() == 0 ? 0 : kCheckFailed;
    }
    if (exportc->parsed()) {
      Config cfg = to_config(flags, exportc);
      Table tab = export_series(cfg, parse_export_kind(what), count);
      std::string text = flags.format == "csv" ? tab.to_csv() : tab.to_json(cfg.to_json()).dump(2) + "\n";
      return emit(text, flags.out);
    }
    Config cfg = to_config(flags, eval);
    if (flags.format == "csv") throw ConfigError("format: eval writes json only");
    return emit(eval_point(cfg, parse_eval_kind(eval_what), x_re, x_im).dump(2) + "\n", flags.out);
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntime;
  }
}
