#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotcalc::cli {

// Exit codes: 0 success, 1 bad input, 2 usage, 3 violated internal
// mathematical certificate.
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCertificate = 3;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace knotcalc::cli
