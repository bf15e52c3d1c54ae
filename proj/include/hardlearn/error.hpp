#pragma once

#include <stdexcept>
#include <string>

namespace hardlearn {

// Error categories mirror the process exit codes: domain errors exit 1,
// usage errors exit 2.
enum class ErrorCode {
  Domain,
  Usage,
  Io,
  Budget,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  ErrorCode code() const { return code_; }

  static Error domain(const std::string& msg) { return Error(ErrorCode::Domain, msg); }
  static Error usage(const std::string& msg) { return Error(ErrorCode::Usage, msg); }
  static Error io(const std::string& msg) { return Error(ErrorCode::Io, msg); }

private:
  ErrorCode code_;
};

// Thrown when an oracle bundle runs out of query budget.
class BudgetExceeded : public Error {
public:
  explicit BudgetExceeded(const std::string& msg) : Error(ErrorCode::Budget, msg) {}
};

}  // namespace hardlearn
