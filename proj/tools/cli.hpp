#pragma once

#include <ostream>

namespace ascent::cli {

// Exit codes: 0 ok, 1 verification failure, 2 usage or input error, 3 internal error.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ascent::cli
