#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qtrunc {

/// One failed comparison inside a check. Degree-style checks fill `n`;
/// bijection checks put the partition and index into `witness`.
struct Violation {
  std::string witness;
  std::string expected;
  std::string actual;
  std::optional<long> n;
};

/// Verdict of one verification run at a single parameter point.
///
/// `pass` is derived: a report passes iff it carries no violations.
class CheckReport {
 public:
  CheckReport() = default;
  explicit CheckReport(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  bool pass() const { return violations_.empty(); }

  /// Ordered (name, value) pairs describing the parameter point.
  const std::vector<std::pair<std::string, long>>& params() const { return params_; }
  std::optional<long> param(const std::string& name) const;
  CheckReport& set_param(const std::string& name, long value);

  const std::vector<Violation>& violations() const { return violations_; }
  void add_violation(Violation v) { violations_.push_back(std::move(v)); }

  /// Informational measurements (counts, sums) that are not pass/fail.
  const std::vector<std::pair<std::string, std::string>>& values() const { return values_; }
  void add_value(std::string name, std::string value) {
    values_.emplace_back(std::move(name), std::move(value));
  }

  /// Conventions or regimes the run relied on.
  const std::vector<std::string>& notes() const { return notes_; }
  void add_note(std::string note);

  /// Appends another report's violations, values and notes.
  void absorb(const CheckReport& other);

 private:
  std::string suite_;
  std::vector<std::pair<std::string, long>> params_;
  std::vector<Violation> violations_;
  std::vector<std::pair<std::string, std::string>> values_;
  std::vector<std::string> notes_;
};

nlohmann::ordered_json to_json(const CheckReport& report);

/// Header and rows of the CSV rendering: one row per violation, or a single
/// passing row when there are none.
extern const char* const kReportCsvHeader;
std::vector<std::string> to_csv_rows(const CheckReport& report);

}  // namespace qtrunc
