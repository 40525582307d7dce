#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cylbif::cli {

/// Bad command-line input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comma-separated integers and inclusive a..b spans, e.g. "0..20,40,200".
std::vector<int> parse_int_list(const std::string& text);

struct RealRange {
  double start;
  double end;
};

/// "start:end" (inclusive) or a single value, which yields start == end.
RealRange parse_real_range(const std::string& text);

/// samples points evenly spaced over the range, endpoints included; a
/// degenerate range gives its single point.
std::vector<double> sample_range(const RealRange& range, int samples);

}  // namespace cylbif::cli
