#pragma once

#include "cataxi/table.hpp"

#include <vector>

namespace cataxi {

/// Thin SVD: m = left * diag(singular_values) * right'.
struct SvdResult {
  Matrix left;
  Matrix right;
  Vector singular_values;  // descending
};

/// Dense SVD. Each singular pair is oriented so that the largest-magnitude
/// entry of its right vector is positive. Throws InvalidArgument on
/// non-finite input and ConvergenceFailure if the solver reports failure.
SvdResult dense_svd(const Matrix& m);

/// (p_ij - p_i* p_*j) / sqrt(p_i* p_*j)
Matrix chi_residuals(const CorrespondenceMatrix& cm);

/// One CA dimension. u_std = g / sigma and v_std = f / sigma are the
/// standardized column and row axes.
struct CaFactor {
  Vector f;
  Vector g;
  double sigma = 0.0;
  Vector u_std;
  Vector v_std;
  int step = 1;
};

struct CaDecomposition {
  std::vector<CaFactor> factors;  // descending sigma
  Vector r;
  Vector c;
  ResidualCovMatrix covariance;   // P^(1)
  DensityResidualMatrix density;  // D^(1)
};

/// Singular values at or below this are treated as zero.
inline constexpr double kCaRankTolerance = 1e-12;

/// CA via SVD of the chi-square residuals; at most min(k_max, I-1, J-1) factors.
/// Each axis is oriented so the largest-magnitude entry of g is positive.
CaDecomposition ca_decompose(const CorrespondenceMatrix& cm, int k_max);

/// D^(m+1) = D^(1) - sum_{alpha <= m} f_alpha g_alpha' / sigma_alpha.
DensityResidualMatrix ca_residual_density(const CaDecomposition& d, int m);

/// Q^(m+1) = P^(1) - sum_{alpha <= m} sigma_alpha (r o v_alpha)(c o u_alpha)'.
/// For m = 0 this is P^(1) itself.
ResidualCovMatrix ca_residual_cov(const CaDecomposition& d, int m);

enum class Side { Rows, Columns };

/// Weighted covariance of a residual density with a standardized axis:
/// Rows gives f(i) = sum_j d(i,j) c_j axis(j); Columns gives
/// g(j) = sum_i axis(i) r_i d(i,j). Throws ShapeMismatch.
Vector transition_covariance(const Vector& r, const Vector& c, const DensityResidualMatrix& density,
                             const Vector& axis, Side result);

inline Vector transition_covariance(const CaDecomposition& d, const DensityResidualMatrix& density,
                                    const Vector& axis, Side result) {
  return transition_covariance(d.r, d.c, density, axis, result);
}

}  // namespace cataxi
