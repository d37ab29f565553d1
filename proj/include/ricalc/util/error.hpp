#pragma once
#include <stdexcept>
#include <string>

namespace ricalc {

enum class ErrorKind {
    DuplicateLabel,
    UnknownLabel,
    DimensionMismatch,
    NotTracePreserving,
    InvalidObject,
    UnknownKind,
    OverlappingGroups,
    OutOfRange,
    NegativeScale,
    DegreeOverflow,
    UnboundTag,
    ParseError,
    SchemaMismatch,
    MissingSideCondition,
    UndischargedFlag,
    InvalidWitness,
    IncompatibleCurves,
    OwnershipViolation,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotTracePreserving: return "NotTracePreserving";
    case ErrorKind::InvalidObject: return "InvalidObject";
    case ErrorKind::UnknownKind: return "UnknownKind";
    case ErrorKind::OverlappingGroups: return "OverlappingGroups";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NegativeScale: return "NegativeScale";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::UnboundTag: return "UnboundTag";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::MissingSideCondition: return "MissingSideCondition";
    case ErrorKind::UndischargedFlag: return "UndischargedFlag";
    case ErrorKind::InvalidWitness: return "InvalidWitness";
    case ErrorKind::IncompatibleCurves: return "IncompatibleCurves";
    case ErrorKind::OwnershipViolation: return "OwnershipViolation";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace ricalc
