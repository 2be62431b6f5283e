#pragma once

// Command-line surface. run() is the whole program minus process I/O so it
// can be exercised in-process by tests.
//
// Exit codes: 0 all checks pass, 1 a property or theorem check failed,
// 2 input error, 3 capacity or budget exceeded.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace catbase::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapacity = 3;

struct RunResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// args excludes the program name. read_stdin is called only when a command
/// reads its input document from "-" (the default).
RunResult run(const std::vector<std::string>& args, const std::function<std::string()>& read_stdin);
RunResult run(const std::vector<std::string>& args, std::string_view stdin_text = {});

}  // namespace catbase::cli
