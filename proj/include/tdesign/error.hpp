#pragma once

#include <stdexcept>
#include <string>

namespace tdesign {

// Every failure the library can signal. Input errors describe bad user data;
// internal errors mean an invariant that must hold mathematically was violated.
enum class ErrorKind {
    // input / validation
    BadInput,
    InvalidGeometry,
    MixedRadicands,
    NotSymmetric,
    BadDiagonal,
    EntryOutOfRange,
    DuplicatePoint,
    NotUnitVector,
    DimensionMismatch,
    UnsupportedPolygon,
    NotTight,
    // internal invariants
    DivisionByZero,
    BoundViolation,
    RankMismatch,
    NonIntegralRank,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::BadInput: return "BadInput";
        case ErrorKind::InvalidGeometry: return "InvalidGeometry";
        case ErrorKind::MixedRadicands: return "MixedRadicands";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::BadDiagonal: return "BadDiagonal";
        case ErrorKind::EntryOutOfRange: return "EntryOutOfRange";
        case ErrorKind::DuplicatePoint: return "DuplicatePoint";
        case ErrorKind::NotUnitVector: return "NotUnitVector";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::UnsupportedPolygon: return "UnsupportedPolygon";
        case ErrorKind::NotTight: return "NotTight";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::BoundViolation: return "BoundViolation";
        case ErrorKind::RankMismatch: return "RankMismatch";
        case ErrorKind::NonIntegralRank: return "NonIntegralRank";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    // Internal errors map to CLI exit code 2, everything else to 1.
    bool internal() const {
        switch (kind_) {
            case ErrorKind::DivisionByZero:
            case ErrorKind::BoundViolation:
            case ErrorKind::RankMismatch:
            case ErrorKind::NonIntegralRank:
                return true;
            default:
                return false;
        }
    }

private:
    ErrorKind kind_;
};

} // namespace tdesign
