#pragma once

#include "cataxi/common.hpp"

#include <span>
#include <string>
#include <vector>

namespace cataxi {

/// A labeled two-way table of nonnegative counts.
///
/// Construction validates the table: at least 2x2, finite nonnegative
/// entries, strictly positive row and column totals, unique labels.
class ContingencyTable {
 public:
  ContingencyTable(Matrix counts, std::vector<std::string> row_labels,
                   std::vector<std::string> col_labels);

  const Matrix& counts() const noexcept { return counts_; }
  const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
  const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }
  double total() const noexcept { return total_; }
  Index rows() const noexcept { return counts_.rows(); }
  Index cols() const noexcept { return counts_.cols(); }

 private:
  Matrix counts_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  double total_ = 0.0;
};

struct RowRecord {
  std::string label;
  std::vector<double> counts;
};

/// Builds a table from row records. Throws Error with NonRectangular,
/// NegativeCount, ZeroMarginal, DuplicateLabel or InvalidShape.
ContingencyTable load_table(std::span<const RowRecord> rows,
                            std::vector<std::string> col_labels);

/// P = N / n together with its marginals r (rows) and c (columns).
struct CorrespondenceMatrix {
  Matrix p;
  Vector r;
  Vector c;

  Index rows() const noexcept { return p.rows(); }
  Index cols() const noexcept { return p.cols(); }
  auto row_metric() const { return r.asDiagonal(); }
  auto col_metric() const { return c.asDiagonal(); }
};

/// Cross-covariance residual p_ij - p_i* p_*j (order 1) or a later deflation.
struct ResidualCovMatrix {
  Matrix values;
  int order = 1;
};

/// Pearson-ratio residual p_ij / (p_i* p_*j) - 1 (order 1) or a later deflation.
struct DensityResidualMatrix {
  Matrix values;
  int order = 1;
};

CorrespondenceMatrix correspondence(const ContingencyTable& table);

ResidualCovMatrix residual_cov(const CorrespondenceMatrix& cm);

DensityResidualMatrix density_residual(const CorrespondenceMatrix& cm);

}  // namespace cataxi
