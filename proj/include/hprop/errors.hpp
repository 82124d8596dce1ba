#pragma once

#include <stdexcept>
#include <string>

namespace hprop {

enum class ErrorCode {
    NonMonotonePartition,
    EndpointsNot01,
    AsymmetricValues,
    ValueOutOfRange,
    DimensionMismatch,
    CoordinateOutOfRange,
    InvalidN,
    InvalidTrials,
    UnalignedPartition,
    AsymmetricC,
    NTooLargeForOracle,
    UnboundedObjective,
    ParseError,
};

/// Structured input/usage error; the CLI maps these to exit code 2.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NonMonotonePartition: return "NonMonotonePartition";
        case ErrorCode::EndpointsNot01: return "EndpointsNot01";
        case ErrorCode::AsymmetricValues: return "AsymmetricValues";
        case ErrorCode::ValueOutOfRange: return "ValueOutOfRange";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::CoordinateOutOfRange: return "CoordinateOutOfRange";
        case ErrorCode::InvalidN: return "InvalidN";
        case ErrorCode::InvalidTrials: return "InvalidTrials";
        case ErrorCode::UnalignedPartition: return "UnalignedPartition";
        case ErrorCode::AsymmetricC: return "AsymmetricC";
        case ErrorCode::NTooLargeForOracle: return "NTooLargeForOracle";
        case ErrorCode::UnboundedObjective: return "UnboundedObjective";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace hprop
