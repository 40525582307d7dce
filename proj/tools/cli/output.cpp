#include "cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <stdexcept>

namespace cylbif::cli {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_cell(const Value& v) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double d) const { return format_real(d); }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(const std::string& s) const { return csv_escape(s); }
  };
  return std::visit(Visitor{}, v);
}

nlohmann::ordered_json json_value(const Value& v) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double d) const {
      if (!std::isfinite(d)) return nullptr;
      // Round through the printed form so JSON and CSV carry the same number.
      return std::strtod(format_real(d).c_str(), nullptr);
    }
    nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

void check_columns(const std::vector<std::string>& columns, const OutputRecord& r) {
  bool ok = r.payload.size() == columns.size();
  for (std::size_t i = 0; ok && i < columns.size(); ++i) ok = r.payload[i].first == columns[i];
  if (!ok) throw std::logic_error(std::string("record does not match the columns of schema ") + schema_name(r.schema));
}

}  // namespace

const char* schema_name(Schema schema) {
  switch (schema) {
    case Schema::TableRow:
      return "table-row";
    case Schema::SigmaSample:
      return "sigma-sample";
    case Schema::ProfileSample:
      return "profile-sample";
    case Schema::DelaunaySample:
      return "delaunay-sample";
    case Schema::CheckResult:
      return "check-result";
  }
  return "unknown";
}

OutputRecord& OutputRecord::add(std::string key, Value value) {
  payload.emplace_back(std::move(key), std::move(value));
  return *this;
}

OutputRecord& OutputRecord::add(std::string key, const std::optional<double>& value) {
  return add(std::move(key), value ? Value(*value) : Value(std::monostate{}));
}

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value == 0.0 ? 0.0 : value);
  return buf;
}

void write_records(std::ostream& os, Format format, const std::vector<std::string>& columns,
                   const std::vector<OutputRecord>& records) {
  for (const auto& r : records) check_columns(columns, r);

  if (format == Format::Json) {
    auto array = nlohmann::ordered_json::array();
    for (const auto& r : records) {
      nlohmann::ordered_json obj;
      for (const auto& [key, value] : r.payload) obj[key] = json_value(value);
      array.push_back(std::move(obj));
    }
    os << array.dump(2) << '\n';
    return;
  }

  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_escape(columns[i]);
  os << '\n';
  for (const auto& r : records) {
    for (std::size_t i = 0; i < r.payload.size(); ++i) os << (i ? "," : "") << csv_cell(r.payload[i].second);
    os << '\n';
  }
}

}  // namespace cylbif::cli
