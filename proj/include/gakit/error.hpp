#pragma once
#include <stdexcept>
#include <string>

namespace gakit {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  DomainError,     // scalar-domain arithmetic (div by zero, sqrt of negative, missing trig, ...)
  ShapeMismatch,   // array broadcasting
  UndefinedOp,     // generation-time: operator undefined for these input types
  HookFailure,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

} // namespace gakit
