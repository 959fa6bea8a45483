#include "morseforge/errors.hpp"

namespace morseforge {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DuplicateCell: return "DuplicateCell";
        case ErrorKind::DanglingVertexIndex: return "DanglingVertexIndex";
        case ErrorKind::NonManifoldEdge: return "NonManifoldEdge";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::NonFiniteValue: return "NonFiniteValue";
        case ErrorKind::UnknownCell: return "UnknownCell";
        case ErrorKind::CycleDetected: return "CycleDetected";
        case ErrorKind::IndexMismatch: return "IndexMismatch";
        case ErrorKind::NotCritical: return "NotCritical";
        case ErrorKind::StalePlan: return "StalePlan";
        case ErrorKind::EndpointOrder: return "EndpointOrder";
        case ErrorKind::MarginNotMonotone: return "MarginNotMonotone";
        case ErrorKind::OrbitBelowLevelMissing: return "OrbitBelowLevelMissing";
        case ErrorKind::BudgetTooTight: return "BudgetTooTight";
        case ErrorKind::FrontierConflict: return "FrontierConflict";
        case ErrorKind::NonMonotoneCensus: return "NonMonotoneCensus";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "UnknownError";
}

}  // namespace morseforge
