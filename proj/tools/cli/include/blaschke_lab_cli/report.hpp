#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace blaschke_lab::cli {

using Cell = std::variant<std::string, double, std::int64_t>;

/// A flat table; name doubles as the output file stem.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// One two-column plot series.
struct Series {
  std::string name;
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Everything one experiment produces. Tables and series are views of
/// numbers that also appear in structured.
struct ReportBundle {
  nlohmann::json structured = nlohmann::json::object();
  std::vector<Table> tables;
  std::vector<Series> series;
};

}  // namespace blaschke_lab::cli
