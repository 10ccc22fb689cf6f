#pragma once

#include <stdexcept>
#include <string>

namespace cbk {

/// All recoverable failures (bad dimensions, indeterminate compositions,
/// non-logarithmic poles, ...) are thrown as Error. The scenario runner
/// converts them into failed checks; they never escape the CLI.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

}  // namespace cbk
