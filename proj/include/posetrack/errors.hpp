#pragma once

#include <stdexcept>
#include <string>

namespace posetrack {

enum class ErrorCode {
    // skeleton
    CycleDetected,
    MultipleRoots,
    NoRoot,
    DuplicateName,
    InvalidParent,
    // imaging
    ZeroSizeImage,
    LengthMismatch,
    CenterOutsideImage,
    InvalidGeometry,
    // models
    NoSamples,
    NoClusters,
    PartNeverObserved,
    SchemaVersionMismatch,
    CorruptFile,
    // tracker
    WindowFullyOutsideImage,
    MissingGroundTruthForReinit,
    IncompleteFirstPose,
    // eval
    NoEvaluableFrames,
    MissingPrediction,
    // io
    MissingFrame,
    AnnotationMismatch,
    DecodeError,
    ConfigParse,
    IoFailure,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception. `code()` identifies the failure class, the
/// message carries the offending file/part context.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace posetrack
