#ifndef QWSIM_ERROR_HPP
#define QWSIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qwsim {

enum class ErrorCode {
  NotHermitian,
  NoConvergence,
  NotInvolution,
  DimensionMismatch,
  InvalidGraph,
  UnknownEdgeId,
  IsolatedVertex,
  NonOrthonormalAlphas,
  MissingCoin,
  NonReflectionCoin,
  NotRegular,
  NotAllGrover,
  InvalidState,
  SpecParse,
  Io,
};

const char* error_code_name(ErrorCode code);

class QwError : public std::runtime_error {
 public:
  QwError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw QwError(code, message);
}

} // namespace qwsim

#endif
