#pragma once

#include <stdexcept>
#include <string>

namespace hap {

/// Error taxonomy shared by the library and the CLI.
///
/// precondition  — caller violated a documented operation precondition
/// capability    — the family representation cannot decide the question
/// budget        — an enumeration or solver budget was exceeded
/// infeasible    — a solve that must succeed reported infeasibility
/// unsupported   — parameter combination outside the implemented range
enum class ErrorKind {
  precondition,
  capability,
  budget,
  infeasible,
  unsupported,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  const char* kind_name() const {
    switch (kind_) {
      case ErrorKind::precondition: return "precondition";
      case ErrorKind::capability: return "capability";
      case ErrorKind::budget: return "budget";
      case ErrorKind::infeasible: return "infeasible";
      case ErrorKind::unsupported: return "unsupported";
    }
    return "unknown";
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_precondition(const std::string& msg) {
  throw Error(ErrorKind::precondition, msg);
}
[[noreturn]] inline void throw_capability(const std::string& msg) {
  throw Error(ErrorKind::capability, msg);
}
[[noreturn]] inline void throw_budget(const std::string& msg) {
  throw Error(ErrorKind::budget, msg);
}
[[noreturn]] inline void throw_infeasible(const std::string& msg) {
  throw Error(ErrorKind::infeasible, msg);
}
[[noreturn]] inline void throw_unsupported(const std::string& msg) {
  throw Error(ErrorKind::unsupported, msg);
}

}  // namespace hap
