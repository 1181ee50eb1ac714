#include "cataxi/seriation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cataxi {

namespace {

std::vector<Index> descending_order(const Vector& key) {
  std::vector<Index> perm(static_cast<std::size_t>(key.size()));
  std::iota(perm.begin(), perm.end(), Index{0});
  std::stable_sort(perm.begin(), perm.end(), [&](Index a, Index b) { return key(a) > key(b); });
  return perm;
}

Vector quantized(const Vector& scores) {
  const double scale = scores.size() ? scores.cwiseAbs().maxCoeff() : 0.0;
  if (!(scale > 0.0)) return Vector::Zero(scores.size());
  const double step = 1e-12 * scale;
  return scores.unaryExpr([step](double x) { return std::round(x / step); });
}

}  // namespace

Matrix permute(const Matrix& m, const std::vector<Index>& row_perm, const std::vector<Index>& col_perm) {
  Matrix out(static_cast<Index>(row_perm.size()), static_cast<Index>(col_perm.size()));
  for (Index j = 0; j < out.cols(); ++j) {
    for (Index i = 0; i < out.rows(); ++i) {
      out(i, j) = m(row_perm[static_cast<std::size_t>(i)], col_perm[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

Vector permute(const Vector& v, const std::vector<Index>& perm) {
  Vector out(static_cast<Index>(perm.size()));
  for (Index i = 0; i < out.size(); ++i) out(i) = v(perm[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<std::string> permute_labels(const std::vector<std::string>& labels,
                                        const std::vector<Index>& perm) {
  std::vector<std::string> out;
  out.reserve(perm.size());
  for (Index i : perm) out.push_back(labels[static_cast<std::size_t>(i)]);
  return out;
}

SeriationResult seriate_by_marginals(const ContingencyTable& table) {
  SeriationResult s;
  s.key = SeriationKey::Marginals;
  s.row_perm = descending_order(table.counts().rowwise().sum());
  s.col_perm = descending_order(table.counts().colwise().sum().transpose());
  s.seriated = permute(table.counts(), s.row_perm, s.col_perm);
  return s;
}

SeriationResult seriate_by_axis(const Matrix& matrix, const Vector& row_scores,
                                const Vector& col_scores) {
  if (row_scores.size() != matrix.rows() || col_scores.size() != matrix.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "score lengths do not match the matrix");
  }
  SeriationResult s;
  s.key = SeriationKey::AxisScores;
  s.row_perm = descending_order(quantized(row_scores));
  s.col_perm = descending_order(quantized(col_scores));
  s.seriated = permute(matrix, s.row_perm, s.col_perm);
  return s;
}

std::vector<RobinsonViolation> robinson_violations(const Matrix& m) {
  std::vector<RobinsonViolation> out;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j + 1 < m.cols() && m(i, j) < m(i, j + 1)) {
        out.push_back({i, j, Direction::RowWise, m(i, j), m(i, j + 1)});
      }
      if (i + 1 < m.rows() && m(i, j) < m(i + 1, j)) {
        out.push_back({i, j, Direction::ColumnWise, m(i, j), m(i + 1, j)});
      }
    }
  }
  return out;
}

}  // namespace cataxi
