#pragma once

#include <ostream>

namespace cylbif::cli {

/// Entry point of the cylbif tool. Returns 0 on success, 1 on a numerical
/// failure or a failed check, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cylbif::cli
