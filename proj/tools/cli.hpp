#pragma once

#include <ostream>

namespace fe::cli {

/// Exit codes: 0 success, 1 verification failure, 2 input or runtime error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fe::cli
