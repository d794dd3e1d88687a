#include "graphjoin/errors.hpp"

namespace graphjoin {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::InvalidWeight: return "InvalidWeight";
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::InvalidSize: return "InvalidSize";
        case ErrorCode::NotFullySupported: return "NotFullySupported";
        case ErrorCode::ShapeError: return "ShapeError";
        case ErrorCode::UndefinedGcd: return "UndefinedGcd";
        case ErrorCode::NotIsomorphism: return "NotIsomorphism";
        case ErrorCode::InfeasibleParameter: return "InfeasibleParameter";
        case ErrorCode::UnsupportedEigenvalue: return "UnsupportedEigenvalue";
        case ErrorCode::NotAnEigenpair: return "NotAnEigenpair";
        case ErrorCode::DegenerateDirection: return "DegenerateDirection";
        case ErrorCode::RequiresUniformWeights: return "RequiresUniformWeights";
        case ErrorCode::NotASubgraph: return "NotASubgraph";
        case ErrorCode::RequiresConnectedNoLoops: return "RequiresConnectedNoLoops";
        case ErrorCode::InvalidCost: return "InvalidCost";
        case ErrorCode::RequiresConnected: return "RequiresConnected";
        case ErrorCode::CharacterizationInapplicable: return "CharacterizationInapplicable";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::CompositionMismatch: return "CompositionMismatch";
        case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case ErrorCode::InvalidJoining: return "InvalidJoining";
        case ErrorCode::NotReversible: return "NotReversible";
    }
    return "UnknownError";
}

}  // namespace graphjoin
