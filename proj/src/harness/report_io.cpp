#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "singulct/error.hpp"
#include "singulct/harness.hpp"

namespace singulct {

using nlohmann::json;

namespace {

std::string formatDouble(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

void write(const json& value, std::string& out, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (value.type()) {
    case json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      // nlohmann::json objects are std::map backed, so iteration is in sorted key order.
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        write(it.value(), out, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& item : value) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        write(item, out, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float:
      out += formatDouble(value.get<double>());
      return;
    default:
      out += value.dump();
  }
}

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csvDouble(double v) {
  const std::string s = formatDouble(v);
  return s.front() == '"' ? s.substr(1, s.size() - 2) : s;
}

std::string renderCsv(const Report& report) {
  std::ostringstream out;
  if (!report.families.empty()) {
    out << "n,d,lct_pair,lct_f,min_exp,milnor,rs\n";
    for (const auto& r : report.families) {
      const auto& b = r.bundle;
      std::string d;
      if (r.family && r.family->kind() == FamilyKind::Diagonal) d = std::to_string(r.family->d());
      const std::size_t n = r.family ? r.family->n() : r.variableCount;
      out << n << ',' << d << ',' << b.lctPair.value.toString() << ',' << b.lctF.toString() << ','
          << (b.minExp ? b.minExp->toString() : "") << ',' << (b.milnor ? std::to_string(*b.milnor) : "") << ','
          << (b.rationalSingularities ? "true" : "false") << '\n';
    }
    return out.str();
  }
  if (!report.profiles.empty()) {
    out << "label,p,m,twists,max_abs,exponent,all_exact_zero,skipped\n";
    for (const auto& labelled : report.profiles) {
      for (const auto& r : labelled.profile.rows) {
        out << csvField(labelled.label) << ',' << r.prime << ',' << r.level << ',' << r.twistCount << ','
            << csvDouble(r.maxAbs) << ',' << csvDouble(r.exponent) << ',' << (r.allExactZero ? "true" : "false")
            << ',' << (r.skipped ? "true" : "false") << '\n';
      }
    }
    return out.str();
  }
  out << "check,verdict,note\n";
  for (const auto& c : report.checks) {
    out << csvField(c.name) << ',' << toString(c.verdict) << ',' << csvField(c.note) << '\n';
  }
  return out.str();
}

}  // namespace

std::string canonicalJson(const json& value) {
  std::string out;
  write(value, out, -1, 0);
  return out;
}

ReportFormat parseReportFormat(const std::string& text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  throw DomainError("unknown report format '" + text + "' (expected json or csv)");
}

std::string renderReport(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Csv) return renderCsv(report);
  std::string out;
  write(reportToJson(report), out, 2, 0);
  out += '\n';
  return out;
}

void emitReport(const Report& report, ReportFormat format, const std::string& path) {
  const std::string text = renderReport(report, format);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing: " + std::strerror(errno));
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing report to '" + path + "'");
}

}  // namespace singulct
