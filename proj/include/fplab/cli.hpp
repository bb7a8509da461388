#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fplab::cli {

/// Exit codes: the property holds or the artifact was produced.
inline constexpr int kOk = 0;
/// A witness was found, or the requested object cannot exist.
inline constexpr int kRefuted = 1;
/// Bad input, bad parameters, or a size guard was hit.
inline constexpr int kInputError = 2;

/// Runs one command line (without the program name). JSON goes to `out`
/// (or to --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fplab::cli
