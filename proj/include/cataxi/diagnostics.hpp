#pragma once

#include "cataxi/ca.hpp"
#include "cataxi/tca.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace cataxi {

/// Rows in S and columns in T are those with score >= 0.
struct QuadrantPartition {
  std::vector<bool> in_s;
  std::vector<bool> in_t;

  Index rows() const noexcept { return static_cast<Index>(in_s.size()); }
  Index cols() const noexcept { return static_cast<Index>(in_t.size()); }
  int row_sign(Index i) const { return in_s[static_cast<std::size_t>(i)] ? 1 : -1; }
  int col_sign(Index j) const { return in_t[static_cast<std::size_t>(j)] ? 1 : -1; }
};

QuadrantPartition partition_from_axis(const Vector& row_scores, const Vector& col_scores);

/// Report order of the four blocks: (S,T), (S',T'), (S',T), (S,T').
enum Quadrant : int { PlusPlus = 0, MinusMinus = 1, MinusPlus = 2, PlusMinus = 3 };

inline constexpr std::array<Quadrant, 4> kQuadrants{PlusPlus, MinusMinus, MinusPlus, PlusMinus};

/// Short label such as "(+,-)" with the row sign first.
const char* quadrant_label(Quadrant q) noexcept;

enum class Flavor { Tca, Ca };

struct QsrReport {
  /// Signed sum over absolute sum per block; empty when the block has no
  /// cells or only zero cells.
  std::array<std::optional<double>, 4> value;
  std::array<double, 4> signed_sum{};
  std::array<double, 4> abs_sum{};
  double overall = 0.0;
  double dispersion = 0.0;  // delta for Tca, varpi for Ca
  double abs_total = 0.0;
  Flavor flavor = Flavor::Tca;
};

/// Quality of signs of a taxicab residual. Throws ShapeMismatch, InvalidArgument.
QsrReport qsr(const ResidualCovMatrix& resid, const QuadrantPartition& part, double dispersion);

/// s' Q t with s, t the +-1 indicators of the partition.
double sign_dispersion(const Matrix& q, const QuadrantPartition& part);

/// CA flavor: the dispersion is sign_dispersion of the residual itself.
QsrReport ca_qsr(const ResidualCovMatrix& q_resid, const QuadrantPartition& part);

struct QuadrantContribution {
  std::array<double, 4> sacq{};
  std::array<double, 4> srcq{};
  double sres = 0.0;
  double sigma = 0.0;
};

/// sACQ(E,F) = sum over E x F of |v_i| |u_j| q_ij, with blocks cut by v >= 0, u >= 0.
QuadrantContribution quadrant_contributions(const ResidualCovMatrix& q_resid, const Vector& u_std,
                                            const Vector& v_std, double sigma);

struct MeanBoundAudit {
  bool unit_overall = false;     // overall == 1
  bool unit_quadrants = false;   // every quadrant magnitude == 1
  bool equivalence_holds = false;
  double mean_magnitude = 0.0;
  double slack = 0.0;            // mean_magnitude - overall
  bool bound_holds = false;
  int defined_quadrants = 0;
};

/// Checks QSR = 1 iff all four magnitudes are 1, and that the mean magnitude
/// bounds the overall value from above. Undefined blocks are skipped.
MeanBoundAudit mean_bound_audit(const QsrReport& report, double tol = 1e-10);

struct BlockVerdict {
  double sigma1 = 0.0;
  double sigma1_squared = 0.0;
  bool exact = false;
  bool quasi = false;
  std::vector<int> row_block;  // 0 for f1 >= 0, 1 otherwise
  std::vector<int> col_block;
  double row_constant_pos = 0.0;
  double row_constant_neg = 0.0;
  double col_constant_pos = 0.0;
  double col_constant_neg = 0.0;
  double constant_spread = 0.0;  // largest deviation of f1, g1 from their block mean
  std::array<std::optional<double>, 2> off_diagonal_qsr;  // (S',T), (S,T')
  bool off_diagonal_minus_one = false;
  std::array<double, 2> off_diagonal_sacq{};
  bool off_diagonal_sacq_equal = false;
};

inline constexpr double kQuasiBlockThreshold = 0.7;

/// Two-block diagnostics of the first CA axis. Requires at least one factor.
BlockVerdict block_structure(const CaDecomposition& d, double tol = 1e-8);

/// sum_ij x_i y_j r_i c_j d_ij
double weighted_bilinear(const Vector& row_axis, const Vector& col_axis, const Vector& r,
                         const Vector& c, const Matrix& density);

struct UnifiedCheck {
  double sign_form = 0.0;  // kernel with sign(f), sign(g)
  double sign_target = 0.0;
  double axis_form = 0.0;  // kernel with v, u
  double axis_target = 0.0;
  double sign_error() const;
  double axis_error() const;
};

/// Taxicab flavor: both kernels against delta, on the density residual of order step.
UnifiedCheck unified_dispersion_check(const TcovDecomposition& t, int step);

/// CA flavor: sign kernel against varpi from the covariance residual, axis kernel against sigma.
UnifiedCheck unified_dispersion_check(const CaDecomposition& d, int step);

/// |a_i| / delta (Side::Rows) or |b_j| / delta (Side::Columns), summed over indices.
double relative_contribution(const TcovDecomposition& t, int step, std::span<const Index> indices,
                             Side side);

inline double relative_contribution(const TcovDecomposition& t, int step, Index index, Side side) {
  return relative_contribution(t, step, std::span<const Index>(&index, 1), side);
}

/// First-axis agreement of CA and TCA: when the partitions coincide the
/// two dispersions must be equal, otherwise varpi1 < delta1.
struct FirstAxisComparison {
  bool same_partition = false;
  double delta1 = 0.0;
  double varpi1 = 0.0;
  double qsr1 = 0.0;
  double ca_qsr1 = 0.0;
  bool holds = false;
};

FirstAxisComparison compare_first_axes(const TcovDecomposition& t, const CaDecomposition& d);

}  // namespace cataxi
