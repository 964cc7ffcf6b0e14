#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilcoh {

// Full command dispatch; exits 0 on success, 1 on a failed check or a
// structured error, 2 on usage errors. `in` serves as stdin for "-" inputs.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace nilcoh
