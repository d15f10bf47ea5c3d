#include "curvelab/harness/report.hpp"

#include <sstream>

#include "curvelab/error.hpp"

namespace curvelab {
namespace {

Json witness_json(const Witness& w) {
  return Json{{"semigroup", w.semigroup}, {"check", w.check}, {"ideals", w.ideals}, {"details", w.details}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string witness_line(const Witness& w) {
  std::string line = w.check + " on <" + w.semigroup + ">";
  for (const auto& e : w.ideals) line += " " + e;
  if (!w.details.empty()) line += ": " + w.details;
  return line;
}

std::string text(const SuiteReport& r, bool with_timing) {
  std::ostringstream out;
  out << "suite: " << r.suite << "\n"
      << "genus range: " << r.genus_lo << ".." << r.genus_hi << "\n"
      << "semigroups checked: " << r.semigroups_checked << "\n"
      << "checks executed: " << r.checks_executed << "\n"
      << "violations: " << r.violation_count << "\n"
      << "informational: " << r.informational_count << "\n";
  if (with_timing) out << "wall time: " << r.wall_time_seconds << " s\n";
  if (r.fail_fast_stopped) out << "stopped early (fail-fast)\n";
  for (const auto& w : r.violations) out << "VIOLATION " << witness_line(w) << "\n";
  for (const auto& w : r.informational) out << "INFO " << witness_line(w) << "\n";
  out << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string csv(const SuiteReport& r) {
  std::ostringstream out;
  out << "semigroup,check,status,details\r\n";
  for (const auto& o : r.outcomes) {
    for (const auto& t : o.tallies) {
      std::string status = "PASS";
      std::string details = std::to_string(t.executed) + " checks";
      const std::vector<Witness>* source = nullptr;
      if (t.violations) {
        status = "FAIL";
        source = &o.violations;
      } else if (t.informational) {
        status = "INFO";
        source = &o.informational;
      }
      if (source)
        for (const auto& w : *source)
          if (w.check == t.check) {
            details = witness_line(w);
            break;
          }
      out << csv_field(o.semigroup) << ',' << csv_field(t.check) << ',' << status << ',' << csv_field(details)
          << "\r\n";
    }
  }
  return out.str();
}

}  // namespace

Json report_json(const SuiteReport& r, bool with_timing) {
  Json violations = Json::array();
  for (const auto& w : r.violations) violations.push_back(witness_json(w));
  Json informational = Json::array();
  for (const auto& w : r.informational) informational.push_back(witness_json(w));
  Json j{{"suite", r.suite},
         {"genus_range", {r.genus_lo, r.genus_hi}},
         {"semigroups_checked", r.semigroups_checked},
         {"checks_executed", r.checks_executed},
         {"violations", violations},
         {"informational", informational},
         {"violation_count", r.violation_count},
         {"informational_count", r.informational_count},
         {"fail_fast_stopped", r.fail_fast_stopped},
         {"passed", r.passed()}};
  if (with_timing) j["wall_time_seconds"] = r.wall_time_seconds;
  return j;
}

std::string emit_report(const SuiteReport& report, std::string_view format, bool with_timing) {
  if (format == "text") return text(report, with_timing);
  if (format == "json") return report_json(report, with_timing).dump(2) + "\n";
  if (format == "csv") return csv(report);
  throw Error(Errc::UnsupportedFormat, "unknown report format '" + std::string(format) + "'");
}

}  // namespace curvelab
