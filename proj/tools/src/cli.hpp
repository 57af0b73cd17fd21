#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dblcat::cli {

// Exit codes: 0 clean or positive verdict, 1 violations / negative verdict / not composable,
// 2 malformed input or a carrier outside the bound.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dblcat::cli
