#pragma once

#include <stdexcept>
#include <string>

namespace xmodkit {

// Error categories, mapped 1:1 onto CLI exit codes.
enum class ErrorKind {
  parse = 2,           // malformed input files or words
  precondition = 3,    // caller violated a documented precondition
  resource_limit = 4,  // enumeration or rewriting cap exceeded
  internal = 5,        // invariant that should be unreachable failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(ErrorKind::parse, msg) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& msg)
      : Error(ErrorKind::precondition, msg) {}
};

struct NotNormalError : PreconditionError {
  explicit NotNormalError(const std::string& msg) : PreconditionError(msg) {}
};

struct NotGeneratingError : PreconditionError {
  explicit NotGeneratingError(const std::string& msg) : PreconditionError(msg) {}
};

struct KernelNotCentralError : PreconditionError {
  explicit KernelNotCentralError(const std::string& msg) : PreconditionError(msg) {}
};

struct ActionViolationError : PreconditionError {
  explicit ActionViolationError(const std::string& msg) : PreconditionError(msg) {}
};

struct CokernelNotCyclicError : PreconditionError {
  explicit CokernelNotCyclicError(const std::string& msg) : PreconditionError(msg) {}
};

struct TooLargeError : PreconditionError {
  explicit TooLargeError(const std::string& msg) : PreconditionError(msg) {}
};

struct CosetLimitError : Error {
  explicit CosetLimitError(const std::string& msg)
      : Error(ErrorKind::resource_limit, msg) {}
};

struct RewriteLimitError : Error {
  explicit RewriteLimitError(const std::string& msg)
      : Error(ErrorKind::resource_limit, msg) {}
};

struct RelatorNotKilledError : Error {
  explicit RelatorNotKilledError(const std::string& msg)
      : Error(ErrorKind::internal, msg) {}
};

struct OverflowError : Error {
  explicit OverflowError(const std::string& msg)
      : Error(ErrorKind::internal, msg) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& msg)
      : Error(ErrorKind::internal, msg) {}
};

}  // namespace xmodkit
