#pragma once

#include <stdexcept>
#include <string>

namespace pagecross {

// Error codes shared across the library. Validation routines that return
// diagnostics lists do not throw; everything else reports failures through
// Error with one of these codes.
enum class Err {
    MalformedEvent,
    UnbalancedStrands,
    DanglingComponent,
    NotClosed,
    NoOrientation,
    ResolutionTooLow,
    UnknownComponent,
    MismatchedEndpoints,
    OddCuspTotal,
    InvalidConfig,
    MinimalityViolation,
    NoDiskDeclared,
    NotIgnorable,
    PositiveTbBirth,
    NoSplitDeclared,
    SameComponent,
    PatternMismatch,
    DisconnectedTrace,
    NotEssential,
    BoundExceeded,
    DomainMismatch,
    CollisionDetected,
    CurvesIntersect,
    PoorConvergence,
    NonGenericProjection,
    PoleTooClose,
    BadFormat,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
  public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

    Err code() const { return code_; }

  private:
    Err code_;
};

} // namespace pagecross
