#pragma once

#include <stdexcept>
#include <string>

namespace audit {

enum class ErrorCode {
    // ingestion
    MalformedRow,
    DuplicateOccupation,
    DuplicateCategory,
    MissingCategory,
    // survey
    OutOfRange,
    EmptyTally,
    // sentences
    PlaceholderMismatch,
    // translation
    MalformedFixture,
    MissingFixture,
    BackendUnavailable,
    AuthFailure,
    AlignmentError,
    CacheCorrupt,
    // scoring
    UnscorableLabel,
    MissingReference,
    InvalidOrder,
    // aggregation
    EmptyGroup,
    InsufficientData,
    // pipeline
    MissingArtifact,
    ConfigError,
    IoError,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedRow: return "MalformedRow";
        case ErrorCode::DuplicateOccupation: return "DuplicateOccupation";
        case ErrorCode::DuplicateCategory: return "DuplicateCategory";
        case ErrorCode::MissingCategory: return "MissingCategory";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::EmptyTally: return "EmptyTally";
        case ErrorCode::PlaceholderMismatch: return "PlaceholderMismatch";
        case ErrorCode::MalformedFixture: return "MalformedFixture";
        case ErrorCode::MissingFixture: return "MissingFixture";
        case ErrorCode::BackendUnavailable: return "BackendUnavailable";
        case ErrorCode::AuthFailure: return "AuthFailure";
        case ErrorCode::AlignmentError: return "AlignmentError";
        case ErrorCode::CacheCorrupt: return "CacheCorrupt";
        case ErrorCode::UnscorableLabel: return "UnscorableLabel";
        case ErrorCode::MissingReference: return "MissingReference";
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::EmptyGroup: return "EmptyGroup";
        case ErrorCode::InsufficientData: return "InsufficientData";
        case ErrorCode::MissingArtifact: return "MissingArtifact";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

class AuditError : public std::runtime_error {
public:
    AuditError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace audit
