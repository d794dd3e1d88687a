#pragma once

#include <stdexcept>
#include <string>

namespace graphjoin {

enum class ErrorCode {
    ParseError,
    DuplicateEdge,
    UnknownVertex,
    InvalidWeight,
    EmptyGraph,
    InvalidSize,
    NotFullySupported,
    ShapeError,
    UndefinedGcd,
    NotIsomorphism,
    InfeasibleParameter,
    UnsupportedEigenvalue,
    NotAnEigenpair,
    DegenerateDirection,
    RequiresUniformWeights,
    NotASubgraph,
    RequiresConnectedNoLoops,
    InvalidCost,
    RequiresConnected,
    CharacterizationInapplicable,
    InternalInconsistency,
    CompositionMismatch,
    SearchBudgetExceeded,
    InvalidJoining,
    NotReversible,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace graphjoin
