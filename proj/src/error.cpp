#include "gdeck/error.hpp"

namespace gdeck {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::BadMagic: return "BadMagic";
        case ErrorCode::TruncatedFile: return "TruncatedFile";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::IoFailure: return "IoFailure";
        case ErrorCode::TimeOutOfRange: return "TimeOutOfRange";
        case ErrorCode::SceneError: return "SceneError";
        case ErrorCode::EmptySampleSet: return "EmptySampleSet";
        case ErrorCode::AllSamplesQuantizeEmpty: return "AllSamplesQuantizeEmpty";
        case ErrorCode::EmptyLibrary: return "EmptyLibrary";
        case ErrorCode::OutOfOrderTimestamp: return "OutOfOrderTimestamp";
        case ErrorCode::BehindCamera: return "BehindCamera";
        case ErrorCode::BadSubdivision: return "BadSubdivision";
        case ErrorCode::ConfigError: return "ConfigError";
    }
    return "Error";
}

}  // namespace gdeck
