#pragma once

#include <string>
#include <vector>

#include "neuralpol/codes.hpp"

namespace neuralpol {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string detail;
};

const char* to_string(CheckStatus s);

// Complexes on more generators than this are not built by the self-check.
inline constexpr std::size_t kSelfcheckTaylorLimit = 16;

// Cross-checks independent routes through the library on one code.
std::vector<CheckResult> run_selfcheck(const Code& c);

}  // namespace neuralpol
