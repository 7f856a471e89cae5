#include "posetrack/errors.hpp"

namespace posetrack {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::CycleDetected: return "CycleDetected";
        case ErrorCode::MultipleRoots: return "MultipleRoots";
        case ErrorCode::NoRoot: return "NoRoot";
        case ErrorCode::DuplicateName: return "DuplicateName";
        case ErrorCode::InvalidParent: return "InvalidParent";
        case ErrorCode::ZeroSizeImage: return "ZeroSizeImage";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::CenterOutsideImage: return "CenterOutsideImage";
        case ErrorCode::InvalidGeometry: return "InvalidGeometry";
        case ErrorCode::NoSamples: return "NoSamples";
        case ErrorCode::NoClusters: return "NoClusters";
        case ErrorCode::PartNeverObserved: return "PartNeverObserved";
        case ErrorCode::SchemaVersionMismatch: return "SchemaVersionMismatch";
        case ErrorCode::CorruptFile: return "CorruptFile";
        case ErrorCode::WindowFullyOutsideImage: return "WindowFullyOutsideImage";
        case ErrorCode::MissingGroundTruthForReinit: return "MissingGroundTruthForReinit";
        case ErrorCode::IncompleteFirstPose: return "IncompleteFirstPose";
        case ErrorCode::NoEvaluableFrames: return "NoEvaluableFrames";
        case ErrorCode::MissingPrediction: return "MissingPrediction";
        case ErrorCode::MissingFrame: return "MissingFrame";
        case ErrorCode::AnnotationMismatch: return "AnnotationMismatch";
        case ErrorCode::DecodeError: return "DecodeError";
        case ErrorCode::ConfigParse: return "ConfigParse";
        case ErrorCode::IoFailure: return "IoFailure";
    }
    return "UnknownError";
}

} // namespace posetrack
