#pragma once

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace k3g2 {

enum class OutputFormat { csv, json, md };

// A named table with a fixed column schema and deterministically ordered
// rows; the unit of all CLI output.
struct TableArtifact {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  // Deterministic row order: cells that are integers compare numerically,
  // everything else lexicographically.
  void sort_rows() {
    auto as_int = [](const std::string& s, long long& v) {
      if (s.empty()) return false;
      size_t i = s[0] == '-' ? 1 : 0;
      if (i == s.size()) return false;
      for (size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
      v = std::stoll(s);
      return true;
    };
    std::sort(rows.begin(), rows.end(),
              [&](const std::vector<std::string>& a, const std::vector<std::string>& b) {
                for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
                  long long x, y;
                  bool ax = as_int(a[i], x), by = as_int(b[i], y);
                  if (ax && by) {
                    if (x != y) return x < y;
                  } else if (a[i] != b[i]) {
                    return a[i] < b[i];
                  }
                }
                return a.size() < b.size();
              });
  }

  std::string to_csv() const {
    std::ostringstream os;
    auto quote = [](const std::string& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char c : s) {
        if (c == '"') q += '"';
        q += c;
      }
      return q + "\"";
    };
    for (size_t i = 0; i < columns.size(); ++i)
      os << (i ? "," : "") << quote(columns[i]);
    os << "\r\n";
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << quote(row[i]);
      os << "\r\n";
    }
    return os.str();
  }

  std::string to_json() const {
    nlohmann::json j;  // nlohmann::json orders keys lexicographically
    j["name"] = name;
    j["columns"] = columns;
    j["rows"] = rows;
    return j.dump(2) + "\n";
  }

  static TableArtifact from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    TableArtifact t;
    t.name = j.at("name").get<std::string>();
    t.columns = j.at("columns").get<std::vector<std::string>>();
    t.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    return t;
  }

  std::string to_md() const {
    std::ostringstream os;
    os << "### " << name << "\n\n|";
    for (const auto& c : columns) os << " " << c << " |";
    os << "\n|";
    for (size_t i = 0; i < columns.size(); ++i) os << " --- |";
    os << "\n";
    for (const auto& row : rows) {
      os << "|";
      for (const auto& cell : row) os << " " << cell << " |";
      os << "\n";
    }
    return os.str();
  }

  std::string render(OutputFormat f) const {
    switch (f) {
      case OutputFormat::csv: return to_csv();
      case OutputFormat::json: return to_json();
      default: return to_md();
    }
  }

  bool operator==(const TableArtifact& o) const {
    return name == o.name && columns == o.columns && rows == o.rows;
  }
};

}  // namespace k3g2
