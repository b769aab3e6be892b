#include "numsg/error.hpp"

namespace numsg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::TooFewGenerators: return "TooFewGenerators";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::EmptyMultiset: return "EmptyMultiset";
    case ErrorCode::NodesNotDistinct: return "NodesNotDistinct";
    case ErrorCode::NodesNotSorted: return "NodesNotSorted";
    case ErrorCode::NonPositiveNode: return "NonPositiveNode";
    case ErrorCode::ZeroNode: return "ZeroNode";
    case ErrorCode::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace numsg
