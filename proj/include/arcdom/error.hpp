#pragma once

#include <stdexcept>
#include <string>

namespace arcdom {

enum class ErrorKind {
  Parse,          // malformed input text
  Validation,     // structurally invalid argument (loop edge, bad certificate, ...)
  Precondition,   // operation contract not met (degree floor, claw found, ...)
  ResourceLimit,  // instance exceeds a configured budget
  GenerationFailed,
  Internal,       // an invariant the library guarantees was violated; a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::GenerationFailed: return "generation-failed";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace arcdom
