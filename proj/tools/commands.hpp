#pragma once

#include <ostream>

namespace cli {

// Entry point of the `cmcs` tool. Returns the exit code: 0 on success,
// 1 on I/O errors, 2 on contract violations and usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cli
