#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "nlvirial/errors.hpp"

namespace nlvirial {

/// Column-typed result table rendered as CSV or as a JSON array of row
/// objects.  Numbers are formatted once, with the column's printf
/// conversion, so both renderings carry identical digits.
class Table {
public:
  struct Column {
    std::string name;
    std::string format;  ///< printf conversion for numbers; empty for text
  };
  using Cell = std::variant<double, std::string>;

  explicit Table(std::vector<Column> columns) : columns_(std::move(columns)) {}

  const std::vector<Column>& columns() const noexcept { return columns_; }
  std::size_t rows() const noexcept { return cells_.size(); }

  void add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) throw precondition_error("Table: row width does not match header");
    std::vector<std::string> text;
    text.reserve(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (const double* d = std::get_if<double>(&row[i])) {
        if (!std::isfinite(*d))
          throw numerical_error("Table: non-finite value in column " + columns_[i].name);
        text.push_back(format_number(columns_[i].format.empty() ? "%.12g" : columns_[i].format, *d));
      } else {
        text.push_back(std::get<std::string>(row[i]));
      }
    }
    cells_.push_back(std::move(text));
  }

  const std::string& cell(std::size_t row, std::size_t col) const { return cells_.at(row).at(col); }

  std::string to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i) out += ',';
      out += columns_[i].name;
    }
    out += '\n';
    for (const auto& row : cells_) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += row[i];
      }
      out += '\n';
    }
    return out;
  }

  std::string to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : cells_) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (columns_[i].format.empty())
          obj[columns_[i].name] = row[i];
        else
          obj[columns_[i].name] = nlohmann::ordered_json::parse(row[i]);
      }
      arr.push_back(std::move(obj));
    }
    return arr.dump(2) + '\n';
  }

private:
  static std::string format_number(const std::string& fmt, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt.c_str(), value);
    std::string s(buf);
    if (s == "-0" || s.find_first_not_of("-0.") == std::string::npos) {
      // normalise negative zero so output does not depend on rounding sign
      if (!s.empty() && s[0] == '-') s.erase(0, 1);
    }
    return s;
  }

  std::vector<Column> columns_;
  std::vector<std::vector<std::string>> cells_;
};

}  // namespace nlvirial
