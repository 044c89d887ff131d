#pragma once

#include <iosfwd>

namespace anick {

/* Exit codes: 0 ok, 1 usage/config/parse error, 2 computation cap too small, 3 internal error. */
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace anick
