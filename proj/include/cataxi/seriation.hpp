#pragma once

#include "cataxi/table.hpp"

#include <string>
#include <vector>

namespace cataxi {

enum class SeriationKey { Marginals, AxisScores };

/// seriated(i, j) == original(row_perm[i], col_perm[j]).
struct SeriationResult {
  std::vector<Index> row_perm;
  std::vector<Index> col_perm;
  Matrix seriated;
  SeriationKey key = SeriationKey::Marginals;
};

/// Stable sort of rows and columns by descending count totals.
SeriationResult seriate_by_marginals(const ContingencyTable& table);

/// Stable sort by descending scores. Scores closer than 1e-12 of the largest
/// magnitude count as tied, so equal profiles keep their input order.
/// Throws ShapeMismatch.
SeriationResult seriate_by_axis(const Matrix& matrix, const Vector& row_scores,
                                const Vector& col_scores);

/// Applies row_perm/col_perm to a label list or a matrix.
std::vector<std::string> permute_labels(const std::vector<std::string>& labels,
                                        const std::vector<Index>& perm);
Matrix permute(const Matrix& m, const std::vector<Index>& row_perm, const std::vector<Index>& col_perm);
Vector permute(const Vector& v, const std::vector<Index>& perm);

enum class Direction { RowWise, ColumnWise };

/// S(row, col) < S(row, col + 1) for RowWise, S(row, col) < S(row + 1, col) for ColumnWise.
struct RobinsonViolation {
  Index row = 0;
  Index col = 0;
  Direction direction = Direction::RowWise;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// All strict decreases required of a Robinson matrix that fail, row-major.
std::vector<RobinsonViolation> robinson_violations(const Matrix& seriated);

}  // namespace cataxi
