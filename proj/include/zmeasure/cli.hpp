#pragma once

// Command-line front end: measure, kernel, verify, sample, meixner, scaling.
// Exit status 0 on success, 1 on a failed verification or numerical error,
// 2 on usage or parameter errors.

#include <iosfwd>
#include <string>
#include <vector>

#include "zmeasure/specfun.hpp"

namespace zmeasure::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// "0.5", "-1e-3", "0.5+1.5i", "0.5-1.5i", "2i", "-i". Locale independent.
// Throws DomainError on malformed input.
Complex parse_complex(const std::string& text);

// Resolves a relative output path against $ZMEASURE_OUT_DIR when set.
std::string resolve_output_path(const std::string& path);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zmeasure::cli
