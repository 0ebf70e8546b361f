#include "pagecross/error.hpp"

namespace pagecross {

const char* err_name(Err e) {
    switch (e) {
    case Err::MalformedEvent: return "MalformedEvent";
    case Err::UnbalancedStrands: return "UnbalancedStrands";
    case Err::DanglingComponent: return "DanglingComponent";
    case Err::NotClosed: return "NotClosed";
    case Err::NoOrientation: return "NoOrientation";
    case Err::ResolutionTooLow: return "ResolutionTooLow";
    case Err::UnknownComponent: return "UnknownComponent";
    case Err::MismatchedEndpoints: return "MismatchedEndpoints";
    case Err::OddCuspTotal: return "OddCuspTotal";
    case Err::InvalidConfig: return "InvalidConfig";
    case Err::MinimalityViolation: return "MinimalityViolation";
    case Err::NoDiskDeclared: return "NoDiskDeclared";
    case Err::NotIgnorable: return "NotIgnorable";
    case Err::PositiveTbBirth: return "PositiveTbBirth";
    case Err::NoSplitDeclared: return "NoSplitDeclared";
    case Err::SameComponent: return "SameComponent";
    case Err::PatternMismatch: return "PatternMismatch";
    case Err::DisconnectedTrace: return "DisconnectedTrace";
    case Err::NotEssential: return "NotEssential";
    case Err::BoundExceeded: return "BoundExceeded";
    case Err::DomainMismatch: return "DomainMismatch";
    case Err::CollisionDetected: return "CollisionDetected";
    case Err::CurvesIntersect: return "CurvesIntersect";
    case Err::PoorConvergence: return "PoorConvergence";
    case Err::NonGenericProjection: return "NonGenericProjection";
    case Err::PoleTooClose: return "PoleTooClose";
    case Err::BadFormat: return "BadFormat";
    }
    return "UnknownError";
}

} // namespace pagecross
