#include "cataxi/tca.hpp"

#include <algorithm>
#include <string>

namespace cataxi {

namespace {

const TaxicabFactor& factor_at(const TcovDecomposition& t, int step) {
  if (step < 1 || static_cast<std::size_t>(step) > t.factors.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "step " + std::to_string(step) + " outside 1.." +
                                                std::to_string(t.factors.size()));
  }
  return t.factors[static_cast<std::size_t>(step - 1)];
}

}  // namespace

TcovDecomposition tcov_decompose(const CorrespondenceMatrix& cm, int k_max, Strategy strategy,
                                 const TsvdOptions& options) {
  if (k_max < 1) throw Error(ErrorCode::InvalidArgument, "k_max must be at least 1");
  TcovDecomposition t;
  t.r = cm.r;
  t.c = cm.c;
  t.density = density_residual(cm);
  t.strategy = resolve_strategy(strategy, cm.rows(), cm.cols(), options);

  ResidualCovMatrix current = residual_cov(cm);
  const double scale = l1_norm(current.values);
  if (scale <= options.zero_tolerance) {
    throw Error(ErrorCode::ZeroMatrix, "table is exactly independent; nothing to decompose");
  }
  const double stop = std::max(options.rank_tolerance * scale, options.zero_tolerance);

  t.residuals.push_back(current);
  for (int step = 1; step <= k_max; ++step) {
    if (l1_norm(current.values) <= stop) break;
    TaxicabFactor f = tsvd_step(current.values, t.strategy, options);
    f.step = step;
    current = ResidualCovMatrix{deflate(current.values, f), step + 1};
    t.factors.push_back(std::move(f));
    t.residuals.push_back(current);
  }
  return t;
}

TcaCoordinates tca_coordinates(const TcovDecomposition& t, int step) {
  const TaxicabFactor& f = factor_at(t, step);
  return {f.a.cwiseQuotient(t.r), f.b.cwiseQuotient(t.c), f.delta, step};
}

QuadrantSums quadrant_sums(const TcovDecomposition& t, int step) {
  const TaxicabFactor& f = factor_at(t, step);
  const Matrix& x = t.residuals[static_cast<std::size_t>(step - 1)].values;
  QuadrantSums q;
  for (Index i = 0; i < x.rows(); ++i) {
    const bool in_s = f.a(i) >= 0.0;
    if (in_s) q.row_half += f.a(i);
    for (Index j = 0; j < x.cols(); ++j) {
      const bool in_t = f.b(j) >= 0.0;
      if (in_s && in_t) q.st += x(i, j);
      else if (!in_s && !in_t) q.s_bar_t_bar += x(i, j);
      else if (in_t) q.s_bar_t += x(i, j);
      else q.s_t_bar += x(i, j);
    }
  }
  for (Index j = 0; j < f.b.size(); ++j) {
    if (f.b(j) >= 0.0) q.col_half += f.b(j);
  }
  return q;
}

DensityResidualMatrix tca_residual_density(const TcovDecomposition& t, int m) {
  if (m < 0 || static_cast<std::size_t>(m) > t.factors.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "residual order " + std::to_string(m) + " outside 0.." +
                                                std::to_string(t.factors.size()));
  }
  DensityResidualMatrix out{t.density.values, m + 1};
  for (int a = 1; a <= m; ++a) {
    const TcaCoordinates k = tca_coordinates(t, a);
    out.values -= k.f * k.g.transpose() / k.delta;
  }
  return out;
}

}  // namespace cataxi
