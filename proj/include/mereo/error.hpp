#ifndef MEREO_ERROR_HPP
#define MEREO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mereo {

enum class ErrorCode {
  DuplicateLabel,
  InvalidLabel,
  TooManyAtoms,
  UnknownAtom,
  SyntaxError,
  AlgebraMismatch,
  NotAnAtom,
  NotAHomomorphism,
  NotComplete,
  InternalMismatch,
  WrongFlavor,
  CapacityExceeded,
  KindMismatch,
  NotATopology,
  UnknownPoint,
  ParseError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace mereo

#endif
