#pragma once

#include <ostream>

namespace confstudy {

// Exit codes: 0 success, 1 usage or schema error, 2 mathematical error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace confstudy
