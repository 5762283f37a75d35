#include "invtqft/error.hpp"

namespace invtqft {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MalformedExpression: return "MalformedExpression";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EnumerationLimit: return "EnumerationLimit";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotInCatalog: return "NotInCatalog";
    case ErrorKind::ObstructionUndetermined: return "ObstructionUndetermined";
    case ErrorKind::UndeterminedCohomology: return "UndeterminedCohomology";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::UnsupportedK: return "UnsupportedK";
    case ErrorKind::InvalidModularData: return "InvalidModularData";
    case ErrorKind::ParityViolation: return "ParityViolation";
  }
  return "Unknown";
}

bool Error::is_undetermined() const noexcept {
  switch (kind_) {
    case ErrorKind::UnsupportedDegree:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::NotInCatalog:
    case ErrorKind::ObstructionUndetermined:
    case ErrorKind::UndeterminedCohomology:
    case ErrorKind::HypothesisViolated:
    case ErrorKind::UnsupportedK:
      return true;
    default:
      return false;
  }
}

}  // namespace invtqft
