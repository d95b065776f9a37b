#include "qtrunc/report.hpp"

#include <algorithm>

namespace qtrunc {

const char* const kReportCsvHeader = "suite,R,S,k,n,expected,actual,pass";

std::optional<long> CheckReport::param(const std::string& name) const {
  for (const auto& [key, value] : params_) {
    if (key == name) return value;
  }
  return std::nullopt;
}

CheckReport& CheckReport::set_param(const std::string& name, long value) {
  for (auto& [key, stored] : params_) {
    if (key == name) {
      stored = value;
      return *this;
    }
  }
  params_.emplace_back(name, value);
  return *this;
}

void CheckReport::add_note(std::string note) {
  if (std::find(notes_.begin(), notes_.end(), note) == notes_.end()) {
    notes_.push_back(std::move(note));
  }
}

void CheckReport::absorb(const CheckReport& other) {
  for (const auto& v : other.violations_) violations_.push_back(v);
  for (const auto& v : other.values_) values_.push_back(v);
  for (const auto& note : other.notes_) add_note(note);
}

nlohmann::ordered_json to_json(const CheckReport& report) {
  nlohmann::ordered_json out;
  out["suite"] = report.suite();
  auto params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.params()) params[key] = value;
  out["params"] = params;
  out["pass"] = report.pass();
  auto violations = nlohmann::ordered_json::array();
  for (const auto& v : report.violations()) {
    nlohmann::ordered_json item;
    item["witness"] = v.witness;
    item["expected"] = v.expected;
    item["actual"] = v.actual;
    if (v.n) item["n"] = *v.n;
    violations.push_back(item);
  }
  out["violations"] = violations;
  if (!report.values().empty()) {
    auto values = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.values()) values[key] = value;
    out["values"] = values;
  }
  if (!report.notes().empty()) out["notes"] = report.notes();
  return out;
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string opt_field(std::optional<long> value) {
  return value ? std::to_string(*value) : std::string();
}

}  // namespace

std::vector<std::string> to_csv_rows(const CheckReport& report) {
  auto k = report.param("k");
  if (!k) k = report.param("m");
  const std::string prefix = csv_field(report.suite()) + "," + opt_field(report.param("R")) + "," +
                             opt_field(report.param("S")) + "," + opt_field(k) + ",";
  std::vector<std::string> rows;
  if (report.violations().empty()) {
    rows.push_back(prefix + opt_field(report.param("n")) + ",,,true");
    return rows;
  }
  for (const auto& v : report.violations()) {
    auto n = v.n ? v.n : report.param("n");
    std::string expected = v.expected;
    if (!v.witness.empty() && !v.n) expected = v.witness + ": " + expected;
    rows.push_back(prefix + opt_field(n) + "," + csv_field(expected) + "," + csv_field(v.actual) +
                   ",false");
  }
  return rows;
}

}  // namespace qtrunc
