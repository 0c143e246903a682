#pragma once

#include <stdexcept>
#include <string>

namespace lme {

enum class Errc {
  TooFewSubsystems,        // n < 2
  InsufficientNontrivial,  // fewer than two entries >= 2
  NonPositiveEntry,        // some entry <= 0
  Overflow,                // wide-integer range or tensor-size cap exceeded
  NotCaseC,                // castling step requested outside P/2 < d_n < P
  IndexOutOfRange,
  InvalidArgument,         // malformed bounds / config
  InternalInconsistency,   // unreachable for correct inputs; implementation bug
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

}  // namespace lme
