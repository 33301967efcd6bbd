#pragma once

#include <stdexcept>
#include <string>

namespace pushgame {

enum class ErrorKind {
    EmptyGraph,
    RegionSizeMismatch,
    DuplicateVertexInRegion,
    DuplicateRegion,
    UncoveredVertex,
    IndexOutOfRange,
    DimensionMismatch,
    ModulusMismatch,
    ColorOutOfRange,
    ImproperColoring,
    HypothesisViolation,
    NotRegionConnected,
    CyclicAssociation,
    StitchConflict,
    InternalCheckFailed,
    DomainError,
    TooLarge,
    ParseError,
};

inline const char* error_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyGraph: return "EmptyGraph";
        case ErrorKind::RegionSizeMismatch: return "RegionSizeMismatch";
        case ErrorKind::DuplicateVertexInRegion: return "DuplicateVertexInRegion";
        case ErrorKind::DuplicateRegion: return "DuplicateRegion";
        case ErrorKind::UncoveredVertex: return "UncoveredVertex";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ModulusMismatch: return "ModulusMismatch";
        case ErrorKind::ColorOutOfRange: return "ColorOutOfRange";
        case ErrorKind::ImproperColoring: return "ImproperColoring";
        case ErrorKind::HypothesisViolation: return "HypothesisViolation";
        case ErrorKind::NotRegionConnected: return "NotRegionConnected";
        case ErrorKind::CyclicAssociation: return "CyclicAssociation";
        case ErrorKind::StitchConflict: return "StitchConflict";
        case ErrorKind::InternalCheckFailed: return "InternalCheckFailed";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "UnknownError";
}

// Every library failure surfaces as a GameError. `kind` is the stable,
// machine-readable part; what() prepends its name to the detail so the CLI
// can print structured failures without a lookup.
class GameError : public std::runtime_error {
public:
    GameError(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace pushgame
