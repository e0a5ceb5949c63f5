#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace steiner {

enum class ErrorCode {
    BoundarySquareNonzero,
    AugmentationNonzeroOnBoundary,
    UnknownBasisId,
    DuplicateBasisId,
    BasisMismatch,
    GradingViolation,
    NegativeCoefficient,
    NotHomogeneous,
    NotCoherent,
    NotCoherentTable,
    MalformedTable,
    NotComposable,
    CycleDetected,
    NothingToDecompose,
    BadIndex,
    WordTooLong,
    FaceIdentityViolation,
    BoundaryMismatch,
    AugmentationMismatch,
    NegativeImage,
    MalformedInput,
    Internal,
};

inline std::string_view error_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::BoundarySquareNonzero: return "BoundarySquareNonzero";
    case ErrorCode::AugmentationNonzeroOnBoundary: return "AugmentationNonzeroOnBoundary";
    case ErrorCode::UnknownBasisId: return "UnknownBasisId";
    case ErrorCode::DuplicateBasisId: return "DuplicateBasisId";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::GradingViolation: return "GradingViolation";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NotCoherent: return "NotCoherent";
    case ErrorCode::NotCoherentTable: return "NotCoherentTable";
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NothingToDecompose: return "NothingToDecompose";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::WordTooLong: return "WordTooLong";
    case ErrorCode::FaceIdentityViolation: return "FaceIdentityViolation";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::AugmentationMismatch: return "AugmentationMismatch";
    case ErrorCode::NegativeImage: return "NegativeImage";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace steiner
