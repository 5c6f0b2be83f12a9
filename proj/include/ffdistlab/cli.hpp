#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ffd {

// Exit codes: 0 success, 1 identity/numeric violation, 2 usage or hypothesis
// error, 3 resource budget exceeded.
int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace ffd
