#include "tandel/error.hpp"

namespace tandel {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AlphaIsOne: return "AlphaIsOne";
    case ErrorCode::AlphaZero: return "AlphaZero";
    case ErrorCode::EssentialSingularityInput: return "EssentialSingularityInput";
    case ErrorCode::PoleInput: return "PoleInput";
    case ErrorCode::NoPoles: return "NoPoles";
    case ErrorCode::ParamOutsideDisk: return "ParamOutsideDisk";
    case ErrorCode::InvalidSeed: return "InvalidSeed";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DegenerateDerivative: return "DegenerateDerivative";
    case ErrorCode::DerivativeThroughPole: return "DerivativeThroughPole";
    case ErrorCode::ContinuationLost: return "ContinuationLost";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::GridOutsideHalfDisk: return "GridOutsideHalfDisk";
    case ErrorCode::AZero: return "AZero";
    case ErrorCode::ZeroPixelViewport: return "ZeroPixelViewport";
    case ErrorCode::MalformedTile: return "MalformedTile";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace tandel
