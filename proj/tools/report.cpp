#include "report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "hankel/errors.hpp"

namespace hankel::cli {

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw ArgumentError("unknown format '" + s + "' (expected csv or json)");
}

void write_json(std::ostream& os, const Report& r) {
  ordered_json j;
  j["experiment"] = r.experiment;
  j["config"] = r.config;
  j["rows"] = r.rows;
  j["verdict"] = r.verdict;
  j["thresholds"] = r.thresholds;
  j["runtime_ms"] = r.runtime_ms ? ordered_json(*r.runtime_ms) : ordered_json(nullptr);
  os << j.dump(2) << '\n';
}

namespace {

std::string cell(const ordered_json& v) {
  if (v.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

}  // namespace

void write_csv(std::ostream& os, const Report& r) {
  os << "# experiment: " << r.experiment << '\n';
  os << "# config: " << r.config.dump() << '\n';
  os << "# thresholds: " << r.thresholds.dump() << '\n';
  os << "# verdict: " << (r.verdict.is_string() ? r.verdict.get<std::string>() : r.verdict.dump()) << '\n';
  if (r.runtime_ms) os << "# runtime_ms: " << cell(ordered_json(*r.runtime_ms)) << '\n';
  for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
  os << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
      const auto it = row.find(r.columns[i]);
      os << (i ? "," : "") << (it == row.end() ? "" : cell(*it));
    }
    os << '\n';
  }
}

void emit(const Report& r, Format f, const std::string& path) {
  std::ofstream file;
  if (!path.empty() && path != "-") {
    file.open(path, std::ios::binary);
    if (!file) throw ArgumentError("cannot open output file '" + path + "'");
  }
  std::ostream& os = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;
  if (f == Format::Json)
    write_json(os, r);
  else
    write_csv(os, r);
  os.flush();
  if (!os) throw std::runtime_error("write failed");
}

}  // namespace hankel::cli
