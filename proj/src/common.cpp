#include "cataxi/common.hpp"

namespace cataxi {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonRectangular: return "NonRectangular";
    case ErrorCode::NegativeCount: return "NegativeCount";
    case ErrorCode::ZeroMarginal: return "ZeroMarginal";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::InvalidNumber: return "InvalidNumber";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

double l1_norm(const Matrix& m) { return m.cwiseAbs().sum(); }

double max_abs_margin(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return std::max(m.rowwise().sum().cwiseAbs().maxCoeff(),
                  m.colwise().sum().cwiseAbs().maxCoeff());
}

}  // namespace cataxi
