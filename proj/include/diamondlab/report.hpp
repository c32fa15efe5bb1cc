#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace diamondlab {

struct Violation {
  std::string where;
  std::string detail;
};

/// Verdict of one verification run. Serialization is deterministic: keys keep
/// insertion order and every value is an exact string or integer.
class Report {
 public:
  /// Violations beyond this many are counted but not stored.
  static constexpr std::size_t kMaxStoredViolations = 50;

  explicit Report(std::string table = {}) : table_(std::move(table)) {}

  const std::string& table() const { return table_; }
  std::uint64_t cases_checked() const { return cases_; }
  std::uint64_t violation_count() const { return violation_count_; }
  const std::vector<Violation>& violations() const { return violations_; }
  bool ok() const { return violation_count_ == 0; }

  /// Counts one case; records a violation when !passed.
  void check(bool passed, const std::string& where, const std::string& detail = {});
  void add_cases(std::uint64_t count) { cases_ += count; }
  void add_violation(const std::string& where, const std::string& detail);
  /// Appends cases and violations of `other` (in order).
  void absorb(const Report& other);

  nlohmann::ordered_json& info() { return info_; }
  const nlohmann::ordered_json& info() const { return info_; }

  void set_columns(std::vector<std::string> columns) { columns_ = std::move(columns); }
  void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

 private:
  std::string table_;
  std::uint64_t cases_ = 0;
  std::uint64_t violation_count_ = 0;
  std::vector<Violation> violations_;
  nlohmann::ordered_json info_ = nlohmann::ordered_json::object();
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

nlohmann::ordered_json to_json(const Report& report);
/// JSON object for one report, JSON array for several.
std::string format_json(const std::vector<Report>& reports);
/// Per-table CSV; several tables are separated by a "# table: <name>" line.
std::string format_csv(const std::vector<Report>& reports);
std::string format_text(const std::vector<Report>& reports);

}  // namespace diamondlab
