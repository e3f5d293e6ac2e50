#include "omsr/error.hpp"

namespace omsr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::OrderTooSmall: return "OrderTooSmall";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::IsAbelian: return "IsAbelian";
    case ErrorKind::BlockMismatch: return "BlockMismatch";
    case ErrorKind::InfeasibleSweep: return "InfeasibleSweep";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& message, int line, int column)
    : std::runtime_error(std::string(to_string(kind)) + ": line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

}  // namespace omsr
