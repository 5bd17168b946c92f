#include "permloc/errors.hpp"

namespace permloc {

const char* name(Errc c) {
  switch (c) {
    case Errc::DuplicateSymbol: return "DuplicateSymbol";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::DivisibilityViolation: return "DivisibilityViolation";
    case Errc::SameBlockDoubleErasure: return "SameBlockDoubleErasure";
    case Errc::MultipleErasure: return "MultipleErasure";
    case Errc::Ambiguous: return "Ambiguous";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DuplicateEvalPoint: return "DuplicateEvalPoint";
    case Errc::NotInCode: return "NotInCode";
    case Errc::InsufficientKnownSymbols: return "InsufficientKnownSymbols";
    case Errc::DuplicateSymbolInE: return "DuplicateSymbolInE";
    case Errc::NonInjectiveMap: return "NonInjectiveMap";
    case Errc::NotAMember: return "NotAMember";
    case Errc::CellErased: return "CellErased";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::FormatError: return "FormatError";
    case Errc::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace permloc
