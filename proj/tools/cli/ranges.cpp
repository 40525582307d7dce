#include "cli/ranges.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace cylbif::cli {

namespace {

int to_int(const std::string& s) {
  int value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc() || ptr != last) throw UsageError("not an integer: '" + s + "'");
  return value;
}

double to_real(const std::string& s) {
  if (s.empty()) throw UsageError("empty number");
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) throw UsageError("not a finite number: '" + s + "'");
  return v;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(item));
      continue;
    }
    const int a = to_int(item.substr(0, dots));
    const int b = to_int(item.substr(dots + 2));
    if (b < a) throw UsageError("descending span: '" + item + "'");
    for (int v = a; v <= b; ++v) out.push_back(v);
  }
  if (out.empty() || (!text.empty() && text.back() == ',')) throw UsageError("empty integer list: '" + text + "'");
  return out;
}

RealRange parse_real_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const double v = to_real(text);
    return {v, v};
  }
  const RealRange r{to_real(text.substr(0, colon)), to_real(text.substr(colon + 1))};
  if (r.end < r.start) throw UsageError("range end below start: '" + text + "'");
  return r;
}

std::vector<double> sample_range(const RealRange& range, int samples) {
  if (samples < 1) throw UsageError("samples must be >= 1");
  if (range.start == range.end) return {range.start};
  if (samples == 1) return {range.start};
  std::vector<double> out(samples);
  for (int i = 0; i < samples; ++i) out[i] = range.start + (range.end - range.start) * i / (samples - 1);
  out.back() = range.end;
  return out;
}

}  // namespace cylbif::cli
