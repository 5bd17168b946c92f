#pragma once

#include <stdexcept>
#include <string>

namespace permloc {

enum class Errc {
  DuplicateSymbol,
  OutOfRange,
  EmptyInput,
  CapExceeded,
  SearchBudgetExceeded,
  DivisibilityViolation,
  SameBlockDoubleErasure,
  MultipleErasure,
  Ambiguous,
  DivisionByZero,
  DuplicateEvalPoint,
  NotInCode,
  InsufficientKnownSymbols,
  DuplicateSymbolInE,
  NonInjectiveMap,
  NotAMember,
  CellErased,
  ReducibleModulus,
  FormatError,
  UsageError,
};

const char* name(Errc c);

// Single exception type for the whole library; code() identifies the
// failure class exactly as the CLI reports it (error=<name>).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, std::string(name(code)) + ": " + what);
}

}  // namespace permloc
