#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace hankel::cli {

using nlohmann::ordered_json;

// Everything a subcommand emits. Rows are flat objects sharing `columns`.
struct Report {
  std::string experiment;
  ordered_json config = ordered_json::object();
  std::vector<std::string> columns;
  std::vector<ordered_json> rows;
  ordered_json verdict;  // null, a string, or a flat object
  ordered_json thresholds = ordered_json::object();
  std::optional<double> runtime_ms;

  void add_row(ordered_json row) { rows.push_back(std::move(row)); }
};

enum class Format { Csv, Json };

Format parse_format(const std::string& s);

void write_json(std::ostream& os, const Report& r);
void write_csv(std::ostream& os, const Report& r);

// Writes to `path`, or stdout when it is empty or "-".
void emit(const Report& r, Format f, const std::string& path);

}  // namespace hankel::cli
