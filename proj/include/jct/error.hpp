#pragma once
#include <stdexcept>
#include <string>

namespace jct {

// Every recoverable failure in the library carries one of these codes.  The
// CLI prints the code name verbatim and exits with status 2, so the names are
// part of the public contract.
enum class Err {
    DegenerateCrossing,
    EndpointMismatch,
    PoleAtInput,
    NumericalFailure,
    BranchAmbiguity,
    CriticalValueProximity,
    WindowEscape,
    InvalidClassEntry,
    NoConvergence,
    ZeroMeasureTile,
    Inconclusive,
    UnsupportedFamily,
    FamilyMismatch,
    DegenerateClass,
    NonClosedLift,
    EmptyGraph,
    AccuracyUnreachable,
};

inline const char* err_name(Err e) {
    switch (e) {
    case Err::DegenerateCrossing:     return "DegenerateCrossing";
    case Err::EndpointMismatch:       return "EndpointMismatch";
    case Err::PoleAtInput:            return "PoleAtInput";
    case Err::NumericalFailure:       return "NumericalFailure";
    case Err::BranchAmbiguity:        return "BranchAmbiguity";
    case Err::CriticalValueProximity: return "CriticalValueProximity";
    case Err::WindowEscape:           return "WindowEscape";
    case Err::InvalidClassEntry:      return "InvalidClassEntry";
    case Err::NoConvergence:          return "NoConvergence";
    case Err::ZeroMeasureTile:        return "ZeroMeasureTile";
    case Err::Inconclusive:           return "Inconclusive";
    case Err::UnsupportedFamily:      return "UnsupportedFamily";
    case Err::FamilyMismatch:         return "FamilyMismatch";
    case Err::DegenerateClass:        return "DegenerateClass";
    case Err::NonClosedLift:          return "NonClosedLift";
    case Err::EmptyGraph:             return "EmptyGraph";
    case Err::AccuracyUnreachable:    return "AccuracyUnreachable";
    }
    return "UnknownError";
}

struct Error : std::runtime_error {
    Err code;
    Error(Err c, const std::string& msg)
        : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& msg) {
    throw Error(c, msg);
}

} // namespace jct
