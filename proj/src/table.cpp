#include "cataxi/table.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace cataxi {

namespace {

void check_unique(const std::vector<std::string>& labels, const char* axis) {
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::DuplicateLabel,
                  std::string(axis) + " label '" + label + "' appears more than once");
    }
  }
}

std::string join_quoted(const std::vector<std::string>& items) {
  std::ostringstream out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out << ", ";
    out << "'" << items[i] << "'";
  }
  return out.str();
}

}  // namespace

ContingencyTable::ContingencyTable(Matrix counts, std::vector<std::string> row_labels,
                                   std::vector<std::string> col_labels)
    : counts_(std::move(counts)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
  if (counts_.rows() < 2 || counts_.cols() < 2) {
    throw Error(ErrorCode::InvalidShape, "a contingency table needs at least 2 rows and 2 columns");
  }
  if (static_cast<Index>(row_labels_.size()) != counts_.rows() ||
      static_cast<Index>(col_labels_.size()) != counts_.cols()) {
    throw Error(ErrorCode::NonRectangular, "label count does not match the count matrix shape");
  }
  check_unique(row_labels_, "row");
  check_unique(col_labels_, "column");

  for (Index i = 0; i < counts_.rows(); ++i) {
    for (Index j = 0; j < counts_.cols(); ++j) {
      const double x = counts_(i, j);
      if (!std::isfinite(x)) {
        throw Error(ErrorCode::InvalidNumber, "count at row '" + row_labels_[i] + "', column '" +
                                                  col_labels_[j] + "' is not finite");
      }
      if (x < 0.0) {
        throw Error(ErrorCode::NegativeCount, "count at row '" + row_labels_[i] + "', column '" +
                                                  col_labels_[j] + "' is negative");
      }
    }
  }

  std::vector<std::string> empty_rows;
  std::vector<std::string> empty_cols;
  const Vector row_sums = counts_.rowwise().sum();
  const Vector col_sums = counts_.colwise().sum().transpose();
  for (Index i = 0; i < row_sums.size(); ++i) {
    if (!(row_sums(i) > 0.0)) empty_rows.push_back(row_labels_[i]);
  }
  for (Index j = 0; j < col_sums.size(); ++j) {
    if (!(col_sums(j) > 0.0)) empty_cols.push_back(col_labels_[j]);
  }
  if (!empty_rows.empty() || !empty_cols.empty()) {
    std::string msg = "zero marginal total for";
    if (!empty_rows.empty()) msg += " row " + join_quoted(empty_rows);
    if (!empty_rows.empty() && !empty_cols.empty()) msg += " and";
    if (!empty_cols.empty()) msg += " column " + join_quoted(empty_cols);
    throw Error(ErrorCode::ZeroMarginal, msg);
  }
  total_ = counts_.sum();
}

ContingencyTable load_table(std::span<const RowRecord> rows, std::vector<std::string> col_labels) {
  const std::size_t width = col_labels.size();
  Matrix counts(static_cast<Index>(rows.size()), static_cast<Index>(width));
  std::vector<std::string> row_labels;
  row_labels.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& record = rows[i];
    if (record.counts.size() != width) {
      throw Error(ErrorCode::NonRectangular,
                  "row '" + record.label + "' has " + std::to_string(record.counts.size()) +
                      " counts, expected " + std::to_string(width));
    }
    for (std::size_t j = 0; j < width; ++j) {
      counts(static_cast<Index>(i), static_cast<Index>(j)) = record.counts[j];
    }
    row_labels.push_back(record.label);
  }
  return ContingencyTable(std::move(counts), std::move(row_labels), std::move(col_labels));
}

CorrespondenceMatrix correspondence(const ContingencyTable& table) {
  CorrespondenceMatrix cm;
  cm.p = table.counts() / table.total();
  cm.r = cm.p.rowwise().sum();
  cm.c = cm.p.colwise().sum().transpose();
  return cm;
}

ResidualCovMatrix residual_cov(const CorrespondenceMatrix& cm) {
  return {cm.p - cm.r * cm.c.transpose(), 1};
}

DensityResidualMatrix density_residual(const CorrespondenceMatrix& cm) {
  Matrix d(cm.rows(), cm.cols());
  for (Index j = 0; j < cm.cols(); ++j) {
    for (Index i = 0; i < cm.rows(); ++i) {
      d(i, j) = cm.p(i, j) / (cm.r(i) * cm.c(j)) - 1.0;
    }
  }
  return {std::move(d), 1};
}

}  // namespace cataxi
