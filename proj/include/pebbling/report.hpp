#pragma once

#include <pebbling/configuration.hpp>
#include <pebbling/extended_count.hpp>
#include <pebbling/verify.hpp>

#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>

namespace pebbling {

enum class OutputFormat { Human, Json, Csv };

/// Wall-clock fields vary run to run; they are null unless asked for so that
/// reports stay byte-identical.
struct ReportStyle {
  OutputFormat format = OutputFormat::Human;
  bool timing = false;
};

namespace detail {

inline nlohmann::ordered_json count_json(const std::optional<ExtendedCount>& c) {
  if (!c) return nullptr;
  if (c->is_infinite()) return "infinite";
  return c->value();
}

inline nlohmann::ordered_json elapsed_json(double ms, bool timing) {
  if (!timing) return nullptr;
  return std::round(ms * 1000.0) / 1000.0;
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline nlohmann::ordered_json record_json(const GraphRecord& r, bool timing) {
  nlohmann::ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["pi"] = detail::count_json(r.pi);
  j["pi_s"] = detail::count_json(r.pi_s);
  j["equal"] = r.equal;
  if (r.witness) {
    j["witness_config"] = format_configuration(r.witness->configuration);
    j["witness_target"] = r.witness->target.index();
  } else {
    j["witness_config"] = nullptr;
    j["witness_target"] = nullptr;
  }
  j["elapsed_ms"] = detail::elapsed_json(r.elapsed_ms, timing);
  if (r.error) j["error"] = *r.error;
  return j;
}

inline nlohmann::ordered_json report_json(const VerificationReport& report, bool timing) {
  nlohmann::ordered_json j;
  j["scope"] = report.scope;
  j["pass"] = report.pass();
  j["classes_covered"] = report.connected_classes();
  j["expected_exceptions"] = nlohmann::ordered_json::array();
  for (const auto& r : report.records)
    if (r.expected_exception) j["expected_exceptions"].push_back(r.graph6);
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : report.records) j["records"].push_back(record_json(r, timing));
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["cases"] = c.cases;
    cj["counterexample"] = c.counterexample ? nlohmann::ordered_json(*c.counterexample) : nullptr;
    j["checks"].push_back(cj);
  }
  j["elapsed_ms"] = detail::elapsed_json(report.elapsed_ms, timing);
  return j;
}

inline std::string records_csv(const std::vector<GraphRecord>& records, bool timing) {
  std::string out = "graph6,n,pi,pi_s,equal,witness_config,witness_target,elapsed_ms\r\n";
  for (const auto& r : records) {
    auto count = [](const std::optional<ExtendedCount>& c) { return c ? to_string(*c) : std::string(); };
    out += detail::csv_field(r.graph6) + ',' + std::to_string(r.n) + ',' + count(r.pi) + ',' + count(r.pi_s) + ',' +
           (r.equal ? "true" : "false") + ',';
    if (r.witness) {
      out += detail::csv_field(format_configuration(r.witness->configuration)) + ',' +
             std::to_string(r.witness->target.index());
    } else {
      out += ',';
    }
    out += ',';
    if (timing) out += detail::elapsed_json(r.elapsed_ms, true).dump();
    out += "\r\n";
  }
  return out;
}

inline std::string report_human(const VerificationReport& report, bool timing) {
  std::ostringstream os;
  os << "scope: " << report.scope << "\n";
  os << std::left << std::setw(10) << "graph6" << std::setw(4) << "n" << std::setw(10) << "pi" << std::setw(10)
     << "pi_s" << std::setw(8) << "equal" << "blocking (pi-1)\n";
  for (const auto& r : report.records) {
    auto count = [](const std::optional<ExtendedCount>& c) { return c ? to_string(*c) : std::string("error"); };
    os << std::setw(10) << r.graph6 << std::setw(4) << r.n << std::setw(10) << count(r.pi) << std::setw(10)
       << count(r.pi_s) << std::setw(8) << (r.equal ? "yes" : "no");
    if (r.witness) {
      os << format_configuration(r.witness->configuration) << " @" << r.witness->target.index();
    } else {
      os << "-";
    }
    if (r.expected_exception) os << "  (expected exception)";
    if (r.error) os << "  ERROR: " << *r.error;
    os << "\n";
  }
  for (const auto& c : report.checks) {
    os << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.cases << " cases)";
    if (c.counterexample) os << " first counterexample: " << *c.counterexample;
    os << "\n";
  }
  os << "connected classes covered: " << report.connected_classes() << "\n";
  os << "overall: " << (report.pass() ? "PASS" : "FAIL") << "\n";
  if (timing) os << "elapsed: " << report.elapsed_ms << " ms\n";
  return os.str();
}

inline std::string render_report(const VerificationReport& report, const ReportStyle& style) {
  switch (style.format) {
    case OutputFormat::Json:
      return report_json(report, style.timing).dump(2) + "\n";
    case OutputFormat::Csv:
      return records_csv(report.records, style.timing);
    case OutputFormat::Human:
      break;
  }
  return report_human(report, style.timing);
}

}  // namespace pebbling
