#pragma once

#include <iostream>

namespace nanobeam {

/// Entry point of the `nanobeam` tool. Exit codes: 0 success, 1 invalid
/// input (config, flags, parameters, I/O), 2 numerical failure or failed
/// verification.
int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace nanobeam
