#pragma once

#include <stdexcept>
#include <string>

namespace gdeck {

enum class ErrorCode {
    BadMagic,
    TruncatedFile,
    DimensionMismatch,
    InvariantViolation,
    IoFailure,
    TimeOutOfRange,
    SceneError,
    EmptySampleSet,
    AllSamplesQuantizeEmpty,
    EmptyLibrary,
    OutOfOrderTimestamp,
    BehindCamera,
    BadSubdivision,
    ConfigError,
};

const char* to_string(ErrorCode code);

/// All recoverable failures surface as this exception; code() identifies the
/// condition so callers can branch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace gdeck
