#pragma once

#include "cataxi/table.hpp"
#include "cataxi/tsvd.hpp"

#include <vector>

namespace cataxi {

/// TSVD of the cross-covariance matrix P^(1).
struct TcovDecomposition {
  std::vector<TaxicabFactor> factors;
  /// residuals[m] is P^(m+1); one more entry than there are factors.
  std::vector<ResidualCovMatrix> residuals;
  Vector r;
  Vector c;
  DensityResidualMatrix density;  // D^(1)
  Strategy strategy = Strategy::Enumeration;
};

/// Throws ZeroMatrix for an independence table and EnumerationTooLarge
/// when enumeration is forced on a wide table.
TcovDecomposition tcov_decompose(const CorrespondenceMatrix& cm, int k_max,
                                 Strategy strategy = Strategy::Auto,
                                 const TsvdOptions& options = {});

/// f = a / r, g = b / c.
struct TcaCoordinates {
  Vector f;
  Vector g;
  double delta = 0.0;
  int step = 1;
};

/// step is 1-based. Throws IndexOutOfRange.
TcaCoordinates tca_coordinates(const TcovDecomposition& t, int step);

/// Sums of P^(step) over the four blocks cut by S = {a >= 0}, T = {b >= 0}.
struct QuadrantSums {
  double st = 0.0;          // S x T
  double s_bar_t_bar = 0.0; // S' x T'
  double s_bar_t = 0.0;     // S' x T
  double s_t_bar = 0.0;     // S x T'
  double row_half = 0.0;    // sum of a over S
  double col_half = 0.0;    // sum of b over T
};

QuadrantSums quadrant_sums(const TcovDecomposition& t, int step);

/// D^(m+1) = D^(1) - sum_{alpha <= m} f_alpha g_alpha' / delta_alpha, which
/// equals P^(m+1) / (r c'). m = 0 gives D^(1) itself.
DensityResidualMatrix tca_residual_density(const TcovDecomposition& t, int m);

}  // namespace cataxi
