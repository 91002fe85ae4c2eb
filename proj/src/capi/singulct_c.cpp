#include "singulct/singulct.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <memory>
#include <new>
#include <sstream>

#include "singulct/error.hpp"
#include "singulct/harness.hpp"
#include "singulct/milnor.hpp"

struct singulct_config {
  singulct::RunConfig config;
};

struct singulct_poly {
  singulct::PolynomialInput input;
  singulct::Polynomial polynomial;
};

struct singulct_report {
  singulct::Report report;
};

namespace {

using singulct::DomainError;

thread_local std::string lastError;

singulct_status fail(singulct_status status, const std::string& message) {
  lastError = message;
  return status;
}

singulct_status guarded(const std::function<void()>& body) {
  try {
    body();
    lastError.clear();
    return SINGULCT_OK;
  } catch (const singulct::ParseError& e) {
    return fail(SINGULCT_ERR_PARSE, e.what());
  } catch (const singulct::BudgetExceeded& e) {
    return fail(SINGULCT_ERR_BUDGET, e.what());
  } catch (const singulct::Inconclusive& e) {
    return fail(SINGULCT_ERR_INCONCLUSIVE, e.what());
  } catch (const singulct::IoError& e) {
    return fail(SINGULCT_ERR_IO, e.what());
  } catch (const singulct::Error& e) {
    return fail(SINGULCT_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SINGULCT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SINGULCT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SINGULCT_ERR_INTERNAL, e.what());
  }
}

void requireNonNull(const void* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(std::string(what) + " must not be null");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, sep)) {
    const auto b = current.find_first_not_of(" \t");
    const auto e = current.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? "" : current.substr(b, e - b + 1));
  }
  return parts;
}

std::uint64_t parseUnsigned(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (!text.empty() && text[0] != '-') v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument("option '" + key + "' expects a nonnegative integer, got '" + text + "'");
  }
  return v;
}

double parseReal(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument("option '" + key + "' expects a real number, got '" + text + "'");
  }
  return v;
}

template <class T>
std::vector<T> parseList(const std::string& key, const std::string& text) {
  std::vector<T> out;
  for (const auto& part : split(text, ',')) out.push_back(static_cast<T>(parseUnsigned(key, part)));
  if (out.empty()) throw std::invalid_argument("option '" + key + "' expects a nonempty list");
  return out;
}

std::vector<std::string> inferVariables(const std::string& text) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
      std::size_t j = i + 1;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      const std::string name = text.substr(i, j - i);
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
      i = j;
    } else {
      ++i;
    }
  }
  if (names.empty()) throw DomainError("cannot infer variables from a constant; pass them explicitly");
  return names;
}

singulct::PolynomialInput makeInput(const std::string& text, const char* vars) {
  if (vars == nullptr || *vars == '\0') return {text, inferVariables(text)};
  return {text, split(vars, ',')};
}

const singulct::RunConfig& configOf(const singulct_config* config) {
  static const singulct::RunConfig defaults = [] {
    singulct::RunConfig c;
    c.enumeration.budget = singulct::budgetFromEnvironment(c.enumeration.budget);
    return c;
  }();
  return config == nullptr ? defaults : config->config;
}

void applyOption(singulct::RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "grid") {
    c.grid.clear();
    for (const auto& item : split(value, ';')) {
      if (!item.empty()) c.grid.push_back(singulct::FamilyDescriptor::parse(item));
    }
  } else if (key == "primes") {
    c.primes = parseList<std::uint64_t>(key, value);
  } else if (key == "max_level") {
    c.maxLevel = static_cast<unsigned>(parseUnsigned(key, value));
  } else if (key == "subscheme") {
    if (value != "full" && value != "hyp" && value != "origin") {
      throw std::invalid_argument("subscheme must be full, hyp or origin");
    }
    c.subscheme = value;
  } else if (key == "twists") {
    c.twists = singulct::TwistSample::parse(value);
  } else if (key == "epsilon") {
    c.epsilon = parseReal(key, value);
  } else if (key == "tolerance") {
    c.tolerance = parseReal(key, value);
  } else if (key == "bound_cap") {
    c.boundCap = parseReal(key, value);
  } else if (key == "localization_tolerance") {
    c.localizationTolerance = parseReal(key, value);
  } else if (key == "budget") {
    c.enumeration.budget = parseUnsigned(key, value);
  } else if (key == "threads") {
    c.enumeration.threads = static_cast<unsigned>(parseUnsigned(key, value));
  } else if (key == "moi_poly") {
    c.moiPolynomial = makeInput(value, nullptr);
  } else if (key == "moi_vars") {
    c.moiPolynomial.variables = split(value, ',');
  } else if (key == "localization_primes") {
    c.localizationPrimes = parseList<std::uint64_t>(key, value);
  } else if (key == "localization_levels") {
    c.localizationLevels = parseList<unsigned>(key, value);
  } else if (key == "slope_family") {
    c.slopeFamily = singulct::FamilyDescriptor::parse(value);
  } else if (key == "slope_prime") {
    c.slopePrime = parseUnsigned(key, value);
  } else if (key == "determinantal_bound") {
    c.bundle.pair.determinantalBound = parseUnsigned(key, value);
  } else if (key == "milnor_mode") {
    if (value == "exact") {
      c.bundle.milnor.mode = singulct::MilnorMode::Exact;
    } else if (value == "modular") {
      c.bundle.milnor.mode = singulct::MilnorMode::Modular;
    } else {
      throw std::invalid_argument("milnor_mode must be exact or modular");
    }
  } else if (key == "milnor") {
    if (value != "on" && value != "off") throw std::invalid_argument("milnor must be on or off");
    c.bundle.computeMilnor = value == "on";
  } else {
    throw std::invalid_argument("unknown configuration key '" + key + "'");
  }
}

singulct_status emit(singulct_report** out, singulct::Report report) {
  *out = new singulct_report{std::move(report)};
  return SINGULCT_OK;
}

}  // namespace

extern "C" {

const char* singulct_version(void) {
  static const std::string version = singulct::versionString();
  return version.c_str();
}

const char* singulct_status_name(singulct_status status) {
  switch (status) {
    case SINGULCT_OK:
      return "ok";
    case SINGULCT_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SINGULCT_ERR_PARSE:
      return "parse error";
    case SINGULCT_ERR_DOMAIN:
      return "domain error";
    case SINGULCT_ERR_BUDGET:
      return "budget exceeded";
    case SINGULCT_ERR_INCONCLUSIVE:
      return "inconclusive";
    case SINGULCT_ERR_IO:
      return "i/o error";
    case SINGULCT_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* singulct_last_error(void) { return lastError.c_str(); }

void singulct_string_free(char* text) { std::free(text); }

singulct_status singulct_config_create(singulct_config** out) {
  return guarded([&] {
    requireNonNull(out, "out");
    *out = nullptr;
    auto config = std::make_unique<singulct_config>();
    config->config.enumeration.budget = singulct::budgetFromEnvironment(config->config.enumeration.budget);
    *out = config.release();
  });
}

void singulct_config_destroy(singulct_config* config) { delete config; }

singulct_status singulct_config_set(singulct_config* config, const char* key, const char* value) {
  return guarded([&] {
    requireNonNull(config, "config");
    requireNonNull(key, "key");
    requireNonNull(value, "value");
    singulct::RunConfig updated = config->config;
    applyOption(updated, key, value);
    config->config = std::move(updated);
  });
}

singulct_status singulct_poly_parse(const char* text, const char* vars, singulct_poly** out) {
  return guarded([&] {
    requireNonNull(text, "text");
    requireNonNull(out, "out");
    *out = nullptr;
    auto input = makeInput(text, vars);
    auto polynomial = input.parse();
    *out = new singulct_poly{std::move(input), std::move(polynomial)};
  });
}

void singulct_poly_destroy(singulct_poly* poly) { delete poly; }

size_t singulct_poly_variable_count(const singulct_poly* poly) {
  return poly == nullptr ? 0 : poly->polynomial.variableCount();
}

singulct_status singulct_poly_to_string(const singulct_poly* poly, char** out) {
  return guarded([&] {
    requireNonNull(poly, "poly");
    requireNonNull(out, "out");
    *out = nullptr;
    *out = duplicate(poly->polynomial.toString(poly->input.variables));
  });
}

singulct_status singulct_poly_lct_pair(const singulct_poly* poly, char** out) {
  return guarded([&] {
    requireNonNull(poly, "poly");
    requireNonNull(out, "out");
    *out = nullptr;
    *out = duplicate(singulct::pairLct(poly->polynomial).value.toString());
  });
}

singulct_status singulct_poly_milnor(const singulct_poly* poly, uint64_t* out) {
  return guarded([&] {
    requireNonNull(poly, "poly");
    requireNonNull(out, "out");
    *out = 0;
    *out = singulct::milnorNumber(poly->polynomial).value;
  });
}

singulct_status singulct_poly_exp_sum(const singulct_poly* poly, uint64_t prime, unsigned level, int64_t twist,
                                      const char* subscheme, uint64_t budget, double* re, double* im,
                                      int* exact_zero) {
  return guarded([&] {
    requireNonNull(poly, "poly");
    const std::string preset = subscheme == nullptr ? "full" : subscheme;
    singulct::EnumerationOptions options;
    options.budget = budget != 0 ? budget : singulct::budgetFromEnvironment(options.budget);
    const auto e = singulct::expSum(poly->polynomial, singulct::PrimePowerModulus(prime, level),
                                    singulct::SubschemeSpec::preset(preset, poly->polynomial), twist, options);
    if (re != nullptr) *re = e.value.real();
    if (im != nullptr) *im = e.value.imag();
    if (exact_zero != nullptr) *exact_zero = e.exactZero ? 1 : 0;
  });
}

singulct_status singulct_run_family(const singulct_config* config, const char* family, singulct_report** out) {
  return guarded([&] {
    requireNonNull(family, "family");
    requireNonNull(out, "out");
    *out = nullptr;
    emit(out, singulct::runFamilyReport(singulct::FamilyDescriptor::parse(family), configOf(config)));
  });
}

singulct_status singulct_run_invariants(const singulct_config* config, const singulct_poly* poly,
                                        singulct_report** out) {
  return guarded([&] {
    requireNonNull(poly, "poly");
    requireNonNull(out, "out");
    *out = nullptr;
    emit(out, singulct::invariantsReport(poly->input, configOf(config)));
  });
}

singulct_status singulct_run_expsum(const singulct_config* config, const singulct_poly* poly, singulct_report** out) {
  return guarded([&] {
    requireNonNull(poly, "poly");
    requireNonNull(out, "out");
    *out = nullptr;
    emit(out, singulct::expsumReport(poly->input, configOf(config)));
  });
}

singulct_status singulct_run_verify(const singulct_config* config, const char* suite, singulct_report** out) {
  return guarded([&] {
    requireNonNull(suite, "suite");
    requireNonNull(out, "out");
    *out = nullptr;
    const auto& c = configOf(config);
    const std::string name = suite;
    if (name == "thmB") {
      emit(out, singulct::verifyThmB(c.grid, c));
    } else if (name == "moi") {
      emit(out, singulct::verifyMoiBound(c.moiPolynomial, c));
    } else if (name == "localization") {
      emit(out, singulct::verifyLocalization(c));
    } else if (name == "pointcount") {
      emit(out, singulct::verifyPointCountSlope(c.slopeFamily, c.slopePrime, c));
    } else {
      throw std::invalid_argument("unknown suite '" + name + "' (expected thmB, moi, localization or pointcount)");
    }
  });
}

singulct_status singulct_run_report(const singulct_config* config, singulct_report** out) {
  return guarded([&] {
    requireNonNull(out, "out");
    *out = nullptr;
    emit(out, singulct::runFullSuite(configOf(config)));
  });
}

singulct_verdict singulct_report_verdict(const singulct_report* report) {
  if (report == nullptr) return SINGULCT_VERDICT_INCONCLUSIVE;
  switch (report->report.verdict()) {
    case singulct::Verdict::Pass:
      return SINGULCT_VERDICT_PASS;
    case singulct::Verdict::Fail:
      return SINGULCT_VERDICT_FAIL;
    case singulct::Verdict::Inconclusive:
      break;
  }
  return SINGULCT_VERDICT_INCONCLUSIVE;
}

singulct_status singulct_report_render(const singulct_report* report, singulct_format format, char** out) {
  return guarded([&] {
    requireNonNull(report, "report");
    requireNonNull(out, "out");
    *out = nullptr;
    const auto f = format == SINGULCT_FORMAT_CSV ? singulct::ReportFormat::Csv : singulct::ReportFormat::Json;
    *out = duplicate(singulct::renderReport(report->report, f));
  });
}

singulct_status singulct_report_write(const singulct_report* report, singulct_format format, const char* path) {
  return guarded([&] {
    requireNonNull(report, "report");
    requireNonNull(path, "path");
    const auto f = format == SINGULCT_FORMAT_CSV ? singulct::ReportFormat::Csv : singulct::ReportFormat::Json;
    singulct::emitReport(report->report, f, path);
  });
}

void singulct_report_destroy(singulct_report* report) { delete report; }

}  // extern "C"
