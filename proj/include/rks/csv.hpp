#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace rks {

/// Plain rectangular table, emitted as CSV preceded by `# key: value`
/// metadata lines. Numeric cells are pre-formatted by the caller (see
/// format_number).
struct CsvTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// %.6g rendering used for every numeric cell and metadata value.
std::string format_number(double value);

void emit_csv(std::ostream& os, const CsvTable& table);

/// UTC timestamp, ISO 8601.
std::string iso_timestamp();

}  // namespace rks
