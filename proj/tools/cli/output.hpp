#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cylbif::cli {

enum class Schema { TableRow, SigmaSample, ProfileSample, DelaunaySample, CheckResult };

const char* schema_name(Schema schema);

enum class Format { Csv, Json };

// Empty optional serialises as an empty CSV cell / JSON null.
using Value = std::variant<std::monostate, double, std::int64_t, std::string>;

struct OutputRecord {
  Schema schema;
  std::vector<std::pair<std::string, Value>> payload;

  OutputRecord& add(std::string key, Value value);
  OutputRecord& add(std::string key, const std::optional<double>& value);
  OutputRecord& add(std::string key, double value) { return add(std::move(key), Value(value)); }
  OutputRecord& add(std::string key, int value) { return add(std::move(key), Value(std::int64_t{value})); }
  OutputRecord& add(std::string key, const char* value) { return add(std::move(key), Value(std::string(value))); }
};

/// Reals with 10 significant digits; identical text in both formats.
std::string format_real(double value);

/// Writes a homogeneous batch. The CSV header is printed even for an empty
/// batch, so the column names are passed explicitly; every record must carry
/// exactly these keys in this order (std::logic_error otherwise).
void write_records(std::ostream& os, Format format, const std::vector<std::string>& columns,
                   const std::vector<OutputRecord>& records);

}  // namespace cylbif::cli
