#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace hiccup::cli {

/// Downloads a URL and returns the body; throws on failure. Injected so the
/// library itself performs no network I/O.
using Fetcher = std::function<std::string(const std::string& url)>;

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,  // a checked claim failed or a crosscheck mismatched
  kUsage = 2,               // bad invocation or out-of-domain arguments
};

/// Runs one invocation. `args` excludes the program name. Normal output goes
/// to `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Fetcher& fetch = {});

}  // namespace hiccup::cli
