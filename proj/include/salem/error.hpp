#pragma once

#include <stdexcept>
#include <string>

namespace salem {

enum class Err {
  EmptyMeasure,
  InvalidInterval,
  InvalidKeepCount,
  InvalidArgument,
  SupportContainsZero,
  TooFewSamples,
  InvalidExponent,
  NonconvergentTail,
  NonpositiveRadius,
  ResolutionTooCoarse,
  RetryExhausted,
  DepthExceeded,
  ConfigError,
};

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const noexcept { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Err code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace salem
