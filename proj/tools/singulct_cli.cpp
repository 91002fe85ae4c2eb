#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "singulct/singulct.h"

namespace {

constexpr int kUsage = 64;

struct ConfigDeleter {
  void operator()(singulct_config* c) const { singulct_config_destroy(c); }
};
struct PolyDeleter {
  void operator()(singulct_poly* p) const { singulct_poly_destroy(p); }
};
struct ReportDeleter {
  void operator()(singulct_report* r) const { singulct_report_destroy(r); }
};
using ConfigPtr = std::unique_ptr<singulct_config, ConfigDeleter>;
using PolyPtr = std::unique_ptr<singulct_poly, PolyDeleter>;
using ReportPtr = std::unique_ptr<singulct_report, ReportDeleter>;

class Failure {
 public:
  explicit Failure(singulct_status status) : status_(status), message_(singulct_last_error()) {}
  int exitCode() const {
    switch (status_) {
      case SINGULCT_OK:
        return 0;
      case SINGULCT_ERR_BUDGET:
      case SINGULCT_ERR_INCONCLUSIVE:
        return 2;
      case SINGULCT_ERR_IO:
      case SINGULCT_ERR_INTERNAL:
        return 1;
      default:
        return kUsage;
    }
  }
  void print() const { std::cerr << "singulct: " << singulct_status_name(status_) << ": " << message_ << "\n"; }

 private:
  singulct_status status_;
  std::string message_;
};

void check(singulct_status status) {
  if (status != SINGULCT_OK) throw Failure(status);
}

ConfigPtr makeConfig(const std::vector<std::pair<std::string, const std::optional<std::string>*>>& bound) {
  singulct_config* raw = nullptr;
  check(singulct_config_create(&raw));
  ConfigPtr config(raw);
  for (const auto& [key, value] : bound) {
    if (*value) check(singulct_config_set(config.get(), key.c_str(), (*value)->c_str()));
  }
  return config;
}

int finish(const ReportPtr& report, const std::string& format, const std::string& out) {
  const singulct_format f = format == "csv" ? SINGULCT_FORMAT_CSV : SINGULCT_FORMAT_JSON;
  if (out.empty() || out == "-") {
    char* text = nullptr;
    check(singulct_report_render(report.get(), f, &text));
    std::cout << text;
    singulct_string_free(text);
  } else {
    check(singulct_report_write(report.get(), f, out.c_str()));
  }
  switch (singulct_report_verdict(report.get())) {
    case SINGULCT_VERDICT_PASS:
      return 0;
    case SINGULCT_VERDICT_FAIL:
      return 1;
    case SINGULCT_VERDICT_INCONCLUSIVE:
      break;
  }
  return 2;
}

PolyPtr parsePoly(const std::string& text, const std::string& vars) {
  singulct_poly* raw = nullptr;
  check(singulct_poly_parse(text.c_str(), vars.empty() ? nullptr : vars.c_str(), &raw));
  return PolyPtr(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Log canonical thresholds, minimal exponents and p-adic exponential sums of hypersurfaces"};
  app.set_version_flag("--version", singulct_version());
  app.require_subcommand(1);

  using Bound = std::vector<std::pair<std::string, const std::optional<std::string>*>>;
  std::vector<std::unique_ptr<std::optional<std::string>>> storage;
  auto option = [&storage](CLI::App* sub, Bound& bound, const std::string& flag, const std::string& key,
                           const std::string& help) {
    storage.push_back(std::make_unique<std::optional<std::string>>());
    auto* target = storage.back().get();
    sub->add_option_function<std::string>(flag, [target](const std::string& v) { *target = v; }, help);
    bound.emplace_back(key, target);
  };

  std::string format = "json";
  std::string out;
  auto common = [&](CLI::App* sub, Bound& bound) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", out, "Output path (stdout when omitted)");
    option(sub, bound, "--budget", "budget", "Point budget for enumerations (default 10^8 or SINGULCT_BUDGET)");
    option(sub, bound, "--threads", "threads", "Worker threads (0 = hardware concurrency)");
  };

  // invariants
  Bound invBound;
  auto* inv = app.add_subcommand("invariants", "lct of (f)+J_f^2, lct(f), minimal exponent, Milnor number");
  std::string family;
  std::string poly;
  std::string vars;
  auto* famOpt = inv->add_option("--family", family, "diag:n,d or det:n");
  auto* polyOpt = inv->add_option("--poly", poly, "Polynomial text, e.g. \"x^3 + y^3\"");
  inv->add_option("--vars", vars, "Comma-separated variable names (default: order of appearance)");
  famOpt->excludes(polyOpt);
  option(inv, invBound, "--milnor-mode", "milnor_mode", "exact or modular");
  option(inv, invBound, "--det-bound", "determinantal_bound", "Partition-mass bound for the determinantal search");
  common(inv, invBound);

  // expsum
  Bound expBound;
  auto* exp = app.add_subcommand("expsum", "Decay profile of E(p^m) over sampled twists");
  exp->add_option("--poly", poly, "Polynomial text")->required();
  exp->add_option("--vars", vars, "Comma-separated variable names");
  option(exp, expBound, "--primes", "primes", "Comma-separated primes");
  option(exp, expBound, "--mmax", "max_level", "Largest level m");
  option(exp, expBound, "--z", "subscheme", "full, hyp or origin");
  option(exp, expBound, "--twists", "twists", "all, default or a count k");
  common(exp, expBound);

  // verify
  Bound verBound;
  auto* ver = app.add_subcommand("verify", "Run one verification suite");
  std::string suite;
  ver->add_option("--suite", suite, "thmB, moi, localization or pointcount")
      ->required()
      ->check(CLI::IsMember({"thmB", "moi", "localization", "pointcount"}));
  option(ver, verBound, "--grid", "grid", "Families separated by ';', e.g. \"diag:4,3;det:2\"");
  option(ver, verBound, "--poly", "moi_poly", "Polynomial for the moi suite");
  option(ver, verBound, "--vars", "moi_vars", "Its variables");
  option(ver, verBound, "--primes", "primes", "Primes for the moi suite");
  option(ver, verBound, "--mmax", "max_level", "Largest level m for the moi suite");
  option(ver, verBound, "--z", "subscheme", "full, hyp or origin");
  option(ver, verBound, "--twists", "twists", "all, default or a count k");
  option(ver, verBound, "--epsilon", "epsilon", "sigma = lct_pair - epsilon in the boundedness check");
  option(ver, verBound, "--tolerance", "tolerance", "Allowed |sigma_hat - lct_pair|");
  option(ver, verBound, "--bound-cap", "bound_cap", "Cap on max_m |E| p^{m sigma}");
  option(ver, verBound, "--loc-primes", "localization_primes", "Primes for the localization suite");
  option(ver, verBound, "--loc-levels", "localization_levels", "Levels for the localization suite");
  option(ver, verBound, "--slope-family", "slope_family", "Family for the point-count suite");
  option(ver, verBound, "--slope-prime", "slope_prime", "Prime for the point-count suite");
  common(ver, verBound);

  // report
  Bound repBound;
  auto* rep = app.add_subcommand("report", "Full suite: family grid, Theorem A/B, moi, localization, point counts");
  option(rep, repBound, "--grid", "grid", "Families separated by ';'");
  option(rep, repBound, "--primes", "primes", "Primes for the moi suite");
  option(rep, repBound, "--mmax", "max_level", "Largest level m for the moi suite");
  common(rep, repBound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    singulct_report* raw = nullptr;
    if (inv->parsed()) {
      const auto config = makeConfig(invBound);
      if (!family.empty()) {
        check(singulct_run_family(config.get(), family.c_str(), &raw));
      } else if (!poly.empty()) {
        const auto p = parsePoly(poly, vars);
        check(singulct_run_invariants(config.get(), p.get(), &raw));
      } else {
        std::cerr << "singulct: invariants needs --family or --poly\n";
        return kUsage;
      }
    } else if (exp->parsed()) {
      const auto config = makeConfig(expBound);
      const auto p = parsePoly(poly, vars);
      check(singulct_run_expsum(config.get(), p.get(), &raw));
    } else if (ver->parsed()) {
      const auto config = makeConfig(verBound);
      check(singulct_run_verify(config.get(), suite.c_str(), &raw));
    } else {
      const auto config = makeConfig(repBound);
      check(singulct_run_report(config.get(), &raw));
    }
    return finish(ReportPtr(raw), format, out);
  } catch (const Failure& f) {
    f.print();
    return f.exitCode();
  }
}
