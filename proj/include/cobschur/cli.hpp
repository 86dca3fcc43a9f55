#pragma once

#include <iosfwd>

namespace cobschur {

// Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 assertion failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cobschur
