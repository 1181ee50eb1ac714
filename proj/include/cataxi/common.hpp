#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cataxi {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class ErrorCode {
  NonRectangular,
  NegativeCount,
  ZeroMarginal,
  DuplicateLabel,
  InvalidShape,
  InvalidNumber,
  ZeroMatrix,
  EnumerationTooLarge,
  ConvergenceFailure,
  IndexOutOfRange,
  ShapeMismatch,
  InvalidArgument,
};

/// Stable identifier for an error code, e.g. "ZeroMarginal".
std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Entrywise taxicab norm: sum of absolute values.
double l1_norm(const Matrix& m);

/// Largest absolute row or column sum; zero for a double-centered matrix.
double max_abs_margin(const Matrix& m);

}  // namespace cataxi
