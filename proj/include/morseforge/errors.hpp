#pragma once

#include <stdexcept>
#include <string>

namespace morseforge {

/// Failure kinds surfaced by the library. Each maps to one documented
/// contract violation; CLI translates kinds to exit codes.
enum class ErrorKind {
    DuplicateCell,
    DanglingVertexIndex,
    NonManifoldEdge,
    LengthMismatch,
    NonFiniteValue,
    UnknownCell,
    CycleDetected,
    IndexMismatch,
    NotCritical,
    StalePlan,
    EndpointOrder,
    MarginNotMonotone,
    OrbitBelowLevelMissing,
    BudgetTooTight,
    FrontierConflict,
    NonMonotoneCensus,
    ParseError,
    InvariantViolation,
};

const char* to_string(ErrorKind kind);

class MorseError : public std::runtime_error {
  public:
    MorseError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace morseforge
