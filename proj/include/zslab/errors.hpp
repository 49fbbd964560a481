#pragma once

#include <stdexcept>
#include <string>

namespace zslab {

enum class Errc {
  NotPrime,
  BadRank,
  DimensionMismatch,
  RankUnsupported,
  SingularBasis,
  ParseError,
  CoordOutOfRange,
  HeaderMissing,
  NotASubsequence,
  MemoryCapExceeded,
  BadK,
  WidthExceeded,
  NotSquarefree,
  BadLengthForPart3,
  EmptySet,
  BadLength,
  TheoremViolation,
  HasFullLengthZeroSum,
  HasShortZeroSum,
  LengthGuard,
  BadM,
  NotFound,
  FeasibilityGuard,
  BudgetExceeded,
  BadArgument,
};

const char* errc_name(Errc code);

/// Single exception type carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace zslab
