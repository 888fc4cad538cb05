#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>

#include "fbh/types.hpp"

namespace fbh::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kNumericFailure = 3,
};

/// Parses "re", "re+imi", "re-imi", "imi", "i" and "-i" (exponents allowed).
std::optional<Complex> parse_complex(std::string_view text);

/// Entry point behind the `fbh` executable. Results go to `out` unless a
/// subcommand was given --out; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fbh::cli
