#include "syzcx/error.hpp"

namespace syzcx {

Error::Error(ErrorKind kind, std::string code, const std::string& message)
    : std::runtime_error(code + ": " + message), kind_(kind), code_(std::move(code)) {}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::usage:
      return 1;
    case ErrorKind::parse:
      return 2;
    case ErrorKind::validation:
      return 3;
    case ErrorKind::precondition:
      return 4;
    case ErrorKind::internal:
      return 5;
  }
  return 5;
}

}  // namespace syzcx
