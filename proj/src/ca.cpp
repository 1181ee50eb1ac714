#include "cataxi/ca.hpp"

#include <algorithm>
#include <cmath>

namespace cataxi {

namespace {

Index argmax_abs(const Vector& x) {
  Index best = 0;
  for (Index i = 1; i < x.size(); ++i) {
    if (std::abs(x(i)) > std::abs(x(best))) best = i;
  }
  return best;
}

void check_step(int m, std::size_t count) {
  if (m < 0 || static_cast<std::size_t>(m) > count) {
    throw Error(ErrorCode::IndexOutOfRange, "residual order " + std::to_string(m) +
                                                " outside 0.." + std::to_string(count));
  }
}

}  // namespace

SvdResult dense_svd(const Matrix& m) {
  if (!m.allFinite()) throw Error(ErrorCode::InvalidArgument, "SVD input has non-finite entries");
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "Jacobi SVD did not converge");
  }
  SvdResult out{svd.matrixU(), svd.matrixV(), svd.singularValues()};
  if (!out.left.allFinite() || !out.right.allFinite() || !out.singular_values.allFinite()) {
    throw Error(ErrorCode::ConvergenceFailure, "SVD produced non-finite factors");
  }
  for (Index k = 0; k < out.singular_values.size(); ++k) {
    if (out.right(argmax_abs(out.right.col(k)), k) < 0.0) {
      out.right.col(k) *= -1.0;
      out.left.col(k) *= -1.0;
    }
  }
  return out;
}

Matrix chi_residuals(const CorrespondenceMatrix& cm) {
  Matrix z(cm.rows(), cm.cols());
  for (Index j = 0; j < cm.cols(); ++j) {
    for (Index i = 0; i < cm.rows(); ++i) {
      const double e = cm.r(i) * cm.c(j);
      z(i, j) = (cm.p(i, j) - e) / std::sqrt(e);
    }
  }
  return z;
}

CaDecomposition ca_decompose(const CorrespondenceMatrix& cm, int k_max) {
  if (k_max < 1) throw Error(ErrorCode::InvalidArgument, "k_max must be at least 1");
  CaDecomposition d;
  d.r = cm.r;
  d.c = cm.c;
  d.covariance = residual_cov(cm);
  d.density = density_residual(cm);

  const SvdResult svd = dense_svd(chi_residuals(cm));
  const Index limit = std::min<Index>({static_cast<Index>(k_max), cm.rows() - 1, cm.cols() - 1,
                                       svd.singular_values.size()});
  const Vector sqrt_r = cm.r.cwiseSqrt();
  const Vector sqrt_c = cm.c.cwiseSqrt();
  for (Index k = 0; k < limit; ++k) {
    const double sigma = svd.singular_values(k);
    if (!(sigma > kCaRankTolerance)) break;
    CaFactor f;
    f.sigma = sigma;
    f.f = sigma * svd.left.col(k).cwiseQuotient(sqrt_r);
    f.g = sigma * svd.right.col(k).cwiseQuotient(sqrt_c);
    if (f.g(argmax_abs(f.g)) < 0.0) {
      f.f = -f.f;
      f.g = -f.g;
    }
    f.u_std = f.g / sigma;
    f.v_std = f.f / sigma;
    f.step = static_cast<int>(k) + 1;
    d.factors.push_back(std::move(f));
  }
  return d;
}

DensityResidualMatrix ca_residual_density(const CaDecomposition& d, int m) {
  check_step(m, d.factors.size());
  DensityResidualMatrix out{d.density.values, m + 1};
  for (int a = 0; a < m; ++a) {
    const CaFactor& f = d.factors[static_cast<std::size_t>(a)];
    out.values -= f.f * f.g.transpose() / f.sigma;
  }
  return out;
}

ResidualCovMatrix ca_residual_cov(const CaDecomposition& d, int m) {
  check_step(m, d.factors.size());
  ResidualCovMatrix out{d.covariance.values, m + 1};
  for (int a = 0; a < m; ++a) {
    const CaFactor& f = d.factors[static_cast<std::size_t>(a)];
    out.values -= f.sigma * d.r.cwiseProduct(f.v_std) * d.c.cwiseProduct(f.u_std).transpose();
  }
  return out;
}

Vector transition_covariance(const Vector& r, const Vector& c, const DensityResidualMatrix& density,
                             const Vector& axis, Side result) {
  const Matrix& d = density.values;
  if (d.rows() != r.size() || d.cols() != c.size()) {
    throw Error(ErrorCode::ShapeMismatch, "density shape does not match the marginals");
  }
  if (result == Side::Rows) {
    if (axis.size() != d.cols()) throw Error(ErrorCode::ShapeMismatch, "column axis has wrong length");
    return d * c.cwiseProduct(axis);
  }
  if (axis.size() != d.rows()) throw Error(ErrorCode::ShapeMismatch, "row axis has wrong length");
  return d.transpose() * r.cwiseProduct(axis);
}

}  // namespace cataxi
