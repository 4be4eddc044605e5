#pragma once

#include <stdexcept>
#include <string>

namespace syzcx {

/// Broad failure category; the CLI maps each one to an exit code.
enum class ErrorKind {
  usage,         // exit 1
  parse,         // exit 2
  validation,    // exit 3
  precondition,  // exit 4
  internal,      // exit 5
};

/// Every library failure carries a stable machine-readable code
/// (e.g. "infinite_dimensional", "not_monic") next to a human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

int exit_code(ErrorKind kind) noexcept;

}  // namespace syzcx
