#pragma once

#include <stdexcept>
#include <string>

namespace bpring {

enum class ErrorKind {
  invalid_input,
  division_by_zero,
  parse_error,
  composition_error,
  unsupported_input,
  internal_error,
  classification_error,
  oracle_error,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::division_by_zero: return "division-by-zero";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::composition_error: return "composition-error";
    case ErrorKind::unsupported_input: return "unsupported-input";
    case ErrorKind::internal_error: return "internal-error";
    case ErrorKind::classification_error: return "classification-error";
    case ErrorKind::oracle_error: return "oracle-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bpring
