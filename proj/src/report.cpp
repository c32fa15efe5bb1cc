#include "diamondlab/report.hpp"

#include <sstream>

namespace diamondlab {

void Report::check(bool passed, const std::string& where, const std::string& detail) {
  ++cases_;
  if (!passed) add_violation(where, detail);
}

void Report::add_violation(const std::string& where, const std::string& detail) {
  ++violation_count_;
  if (violations_.size() < kMaxStoredViolations) violations_.push_back({where, detail});
}

void Report::absorb(const Report& other) {
  cases_ += other.cases_;
  violation_count_ += other.violation_count_;
  for (const auto& v : other.violations_) {
    if (violations_.size() >= kMaxStoredViolations) break;
    violations_.push_back(v);
  }
}

nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["table"] = report.table();
  j["cases_checked"] = report.cases_checked();
  j["violation_count"] = report.violation_count();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : report.violations()) arr.push_back({{"where", v.where}, {"detail", v.detail}});
  j["violations"] = std::move(arr);
  if (!report.info().empty()) j["info"] = report.info();
  if (!report.rows().empty()) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : report.rows()) {
      nlohmann::ordered_json row;
      for (std::size_t c = 0; c < r.size() && c < report.columns().size(); ++c) row[report.columns()[c]] = r[c];
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
  }
  return j;
}

std::string format_json(const std::vector<Report>& reports) {
  if (reports.size() == 1) return to_json(reports.front()).dump(2) + "\n";
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_line(std::ostringstream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << '\n';
}

}  // namespace

std::string format_csv(const std::vector<Report>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    if (reports.size() > 1) out << "# table: " << r.table() << '\n';
    if (r.columns().empty()) {
      csv_line(out, {"table", "cases_checked", "violation_count"});
      csv_line(out, {r.table(), std::to_string(r.cases_checked()), std::to_string(r.violation_count())});
    } else {
      csv_line(out, r.columns());
      for (const auto& row : r.rows()) csv_line(out, row);
    }
  }
  return out.str();
}

std::string format_text(const std::vector<Report>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << r.table() << ": " << (r.ok() ? "ok" : "FAILED") << ", " << r.cases_checked() << " cases, "
        << r.violation_count() << " violations\n";
    for (const auto& [key, value] : r.info().items())
      out << "  " << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    if (!r.rows().empty()) {
      out << "  ";
      for (std::size_t c = 0; c < r.columns().size(); ++c) out << (c ? " | " : "") << r.columns()[c];
      out << '\n';
      for (const auto& row : r.rows()) {
        out << "  ";
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " | " : "") << row[c];
        out << '\n';
      }
    }
    for (const auto& v : r.violations()) out << "  violation at " << v.where << ": " << v.detail << '\n';
  }
  return out.str();
}

}  // namespace diamondlab
