#include <array>
#include <charconv>
#include <cmath>
#include <json.hpp>
#include <sstream>

#include "sptunnel/cli.hpp"

namespace sptunnel::cli {

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
  return std::string(buf.data(), result.ptr);
}

std::string render_csv(const Table& table) {
  std::ostringstream out;
  if (table.has_series) out << "series,";
  out << table.x_name << ",T,R,status\n";
  for (const Row& row : table.rows) {
    if (table.has_series) out << row.series << ',';
    out << format_number(row.x) << ',';
    if (row.T) out << format_number(*row.T);
    out << ',';
    if (row.R) out << format_number(*row.R);
    out << ',' << row.status << '\n';
  }
  return out.str();
}

std::string render_json(const Table& table) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const Row& row : table.rows) {
    nlohmann::ordered_json record;
    if (table.has_series) record["series"] = row.series;
    record[table.x_name] = row.x;
    record["T"] = row.T ? nlohmann::ordered_json(*row.T) : nlohmann::ordered_json(nullptr);
    record["R"] = row.R ? nlohmann::ordered_json(*row.R) : nlohmann::ordered_json(nullptr);
    record["status"] = row.status;
    records.push_back(std::move(record));
  }
  return records.dump(2) + "\n";
}

std::string render(const Table& table, Format format) {
  return format == Format::Csv ? render_csv(table) : render_json(table);
}

int exit_code(const Table& table) {
  bool undetermined = false;
  for (const Row& row : table.rows) {
    if (row.status == "Error") return kExitError;
    if (row.status == "Undetermined") undetermined = true;
  }
  return undetermined ? kExitUndetermined : kExitOk;
}

}  // namespace sptunnel::cli
