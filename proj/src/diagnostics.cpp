#include "cataxi/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cataxi {

namespace {

Quadrant quadrant_of(bool in_s, bool in_t) {
  if (in_s) return in_t ? PlusPlus : PlusMinus;
  return in_t ? MinusPlus : MinusMinus;
}

void check_partition(const Matrix& m, const QuadrantPartition& part) {
  if (m.rows() != part.rows() || m.cols() != part.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "partition does not match residual shape");
  }
}

QsrReport fill_quadrants(const Matrix& m, const QuadrantPartition& part, Flavor flavor) {
  check_partition(m, part);
  QsrReport rep;
  rep.flavor = flavor;
  std::array<int, 4> cells{};
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      const Quadrant q = quadrant_of(part.in_s[static_cast<std::size_t>(i)],
                                     part.in_t[static_cast<std::size_t>(j)]);
      rep.signed_sum[q] += m(i, j);
      rep.abs_sum[q] += std::abs(m(i, j));
      ++cells[q];
    }
  }
  for (Quadrant q : kQuadrants) {
    if (cells[q] > 0 && rep.abs_sum[q] > 0.0) rep.value[q] = rep.signed_sum[q] / rep.abs_sum[q];
  }
  rep.abs_total = l1_norm(m);
  return rep;
}

Vector partition_signs(const std::vector<bool>& in) {
  Vector s(static_cast<Index>(in.size()));
  for (std::size_t i = 0; i < in.size(); ++i) s(static_cast<Index>(i)) = in[i] ? 1.0 : -1.0;
  return s;
}

const CaFactor& ca_factor(const CaDecomposition& d, int step) {
  if (step < 1 || static_cast<std::size_t>(step) > d.factors.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "step " + std::to_string(step) + " outside 1.." +
                                                std::to_string(d.factors.size()));
  }
  return d.factors[static_cast<std::size_t>(step - 1)];
}

}  // namespace

QuadrantPartition partition_from_axis(const Vector& row_scores, const Vector& col_scores) {
  if (!row_scores.allFinite() || !col_scores.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "axis scores must be finite");
  }
  QuadrantPartition p;
  for (Index i = 0; i < row_scores.size(); ++i) p.in_s.push_back(row_scores(i) >= 0.0);
  for (Index j = 0; j < col_scores.size(); ++j) p.in_t.push_back(col_scores(j) >= 0.0);
  return p;
}

const char* quadrant_label(Quadrant q) noexcept {
  switch (q) {
    case PlusPlus: return "(+,+)";
    case MinusMinus: return "(-,-)";
    case MinusPlus: return "(-,+)";
    case PlusMinus: return "(+,-)";
  }
  return "?";
}

QsrReport qsr(const ResidualCovMatrix& resid, const QuadrantPartition& part, double dispersion) {
  if (!(dispersion > 0.0)) throw Error(ErrorCode::InvalidArgument, "dispersion must be positive");
  QsrReport rep = fill_quadrants(resid.values, part, Flavor::Tca);
  rep.dispersion = dispersion;
  rep.overall = dispersion / rep.abs_total;
  return rep;
}

double sign_dispersion(const Matrix& q, const QuadrantPartition& part) {
  check_partition(q, part);
  return partition_signs(part.in_s).dot(q * partition_signs(part.in_t));
}

QsrReport ca_qsr(const ResidualCovMatrix& q_resid, const QuadrantPartition& part) {
  QsrReport rep = fill_quadrants(q_resid.values, part, Flavor::Ca);
  rep.dispersion = sign_dispersion(q_resid.values, part);
  rep.overall = rep.abs_total > 0.0 ? rep.dispersion / rep.abs_total : 0.0;
  return rep;
}

QuadrantContribution quadrant_contributions(const ResidualCovMatrix& q_resid, const Vector& u_std,
                                            const Vector& v_std, double sigma) {
  const Matrix& q = q_resid.values;
  if (q.rows() != v_std.size() || q.cols() != u_std.size()) {
    throw Error(ErrorCode::ShapeMismatch, "axes do not match residual shape");
  }
  if (!(sigma > 0.0)) throw Error(ErrorCode::InvalidArgument, "sigma must be positive");
  QuadrantContribution out;
  out.sigma = sigma;
  for (Index j = 0; j < q.cols(); ++j) {
    for (Index i = 0; i < q.rows(); ++i) {
      const Quadrant k = quadrant_of(v_std(i) >= 0.0, u_std(j) >= 0.0);
      out.sacq[k] += std::abs(v_std(i)) * std::abs(u_std(j)) * q(i, j);
    }
  }
  for (Quadrant k : kQuadrants) {
    out.srcq[k] = out.sacq[k] / sigma;
    out.sres += out.sacq[k];
  }
  return out;
}

MeanBoundAudit mean_bound_audit(const QsrReport& report, double tol) {
  MeanBoundAudit a;
  a.unit_quadrants = true;
  double sum = 0.0;
  for (const auto& v : report.value) {
    if (!v) {
      a.unit_quadrants = false;
      continue;
    }
    ++a.defined_quadrants;
    sum += std::abs(*v);
    if (std::abs(std::abs(*v) - 1.0) > tol) a.unit_quadrants = false;
  }
  a.unit_overall = std::abs(report.overall - 1.0) <= tol;
  a.equivalence_holds = a.unit_overall == a.unit_quadrants;
  a.mean_magnitude = a.defined_quadrants > 0 ? sum / a.defined_quadrants : 0.0;
  a.slack = a.mean_magnitude - report.overall;
  a.bound_holds = a.slack >= -tol;
  return a;
}

BlockVerdict block_structure(const CaDecomposition& d, double tol) {
  const CaFactor& f1 = ca_factor(d, 1);
  BlockVerdict v;
  v.sigma1 = f1.sigma;
  v.sigma1_squared = f1.sigma * f1.sigma;
  v.exact = f1.sigma >= 1.0 - tol;
  v.quasi = v.sigma1_squared >= kQuasiBlockThreshold;

  auto split = [&](const Vector& x, std::vector<int>& block, double& pos, double& neg) {
    double sp = 0.0, sn = 0.0;
    int np = 0, nn = 0;
    for (Index i = 0; i < x.size(); ++i) {
      const bool p = x(i) >= 0.0;
      block.push_back(p ? 0 : 1);
      (p ? sp : sn) += x(i);
      ++(p ? np : nn);
    }
    pos = np ? sp / np : 0.0;
    neg = nn ? sn / nn : 0.0;
    double spread = 0.0;
    for (Index i = 0; i < x.size(); ++i) {
      spread = std::max(spread, std::abs(x(i) - (x(i) >= 0.0 ? pos : neg)));
    }
    return spread;
  };
  v.constant_spread = std::max(split(f1.f, v.row_block, v.row_constant_pos, v.row_constant_neg),
                               split(f1.g, v.col_block, v.col_constant_pos, v.col_constant_neg));

  const ResidualCovMatrix q1 = ca_residual_cov(d, 0);
  const QsrReport rep = ca_qsr(q1, partition_from_axis(f1.v_std, f1.u_std));
  v.off_diagonal_qsr = {rep.value[MinusPlus], rep.value[PlusMinus]};
  v.off_diagonal_minus_one = true;
  for (const auto& x : v.off_diagonal_qsr) {
    if (!x || std::abs(*x + 1.0) > tol) v.off_diagonal_minus_one = false;
  }
  const QuadrantContribution qc = quadrant_contributions(q1, f1.u_std, f1.v_std, f1.sigma);
  v.off_diagonal_sacq = {qc.sacq[MinusPlus], qc.sacq[PlusMinus]};
  v.off_diagonal_sacq_equal = std::abs(qc.sacq[MinusPlus] - qc.sacq[PlusMinus]) <= tol;
  return v;
}

double weighted_bilinear(const Vector& row_axis, const Vector& col_axis, const Vector& r,
                         const Vector& c, const Matrix& density) {
  if (density.rows() != r.size() || density.cols() != c.size() || row_axis.size() != r.size() ||
      col_axis.size() != c.size()) {
    throw Error(ErrorCode::ShapeMismatch, "bilinear form operands disagree in shape");
  }
  double s = 0.0;
  for (Index j = 0; j < density.cols(); ++j) {
    for (Index i = 0; i < density.rows(); ++i) {
      s += row_axis(i) * col_axis(j) * r(i) * c(j) * density(i, j);
    }
  }
  return s;
}

double UnifiedCheck::sign_error() const { return std::abs(sign_form - sign_target); }
double UnifiedCheck::axis_error() const { return std::abs(axis_form - axis_target); }

UnifiedCheck unified_dispersion_check(const TcovDecomposition& t, int step) {
  const TcaCoordinates k = tca_coordinates(t, step);
  const TaxicabFactor& f = t.factors[static_cast<std::size_t>(step - 1)];
  const Matrix dens = tca_residual_density(t, step - 1).values;
  UnifiedCheck u;
  // f and a share signs, so sign(f) is the sgn-rule axis v
  u.sign_form = weighted_bilinear(SignVector::of(k.f).to_vector(), SignVector::of(k.g).to_vector(),
                                  t.r, t.c, dens);
  u.sign_target = f.delta;
  u.axis_form = weighted_bilinear(f.v.to_vector(), f.u.to_vector(), t.r, t.c, dens);
  u.axis_target = f.delta;
  return u;
}

UnifiedCheck unified_dispersion_check(const CaDecomposition& d, int step) {
  const CaFactor& f = ca_factor(d, step);
  const Matrix dens = ca_residual_density(d, step - 1).values;
  const QuadrantPartition part = partition_from_axis(f.f, f.g);
  UnifiedCheck u;
  u.sign_form = weighted_bilinear(partition_signs(part.in_s), partition_signs(part.in_t), d.r, d.c, dens);
  u.sign_target = sign_dispersion(ca_residual_cov(d, step - 1).values, part);
  u.axis_form = weighted_bilinear(f.v_std, f.u_std, d.r, d.c, dens);
  u.axis_target = f.sigma;
  return u;
}

double relative_contribution(const TcovDecomposition& t, int step, std::span<const Index> indices,
                             Side side) {
  if (step < 1 || static_cast<std::size_t>(step) > t.factors.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "step " + std::to_string(step) + " out of range");
  }
  const TaxicabFactor& f = t.factors[static_cast<std::size_t>(step - 1)];
  const Vector& x = side == Side::Rows ? f.a : f.b;
  double s = 0.0;
  for (Index i : indices) {
    if (i < 0 || i >= x.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "coordinate index " + std::to_string(i) + " out of range");
    }
    s += std::abs(x(i));
  }
  return s / f.delta;
}

FirstAxisComparison compare_first_axes(const TcovDecomposition& t, const CaDecomposition& d) {
  if (t.factors.empty() || d.factors.empty()) {
    throw Error(ErrorCode::IndexOutOfRange, "both decompositions need a first factor");
  }
  const TaxicabFactor& tf = t.factors.front();
  const CaFactor& cf = d.factors.front();
  const QuadrantPartition tp = partition_from_axis(tf.a, tf.b);
  const QuadrantPartition cp = partition_from_axis(cf.v_std, cf.u_std);
  auto flipped = [](const std::vector<bool>& x) {
    std::vector<bool> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = !x[i];
    return y;
  };
  FirstAxisComparison c;
  // a joint sign flip of both axes leaves every index unchanged
  c.same_partition = (tp.in_s == cp.in_s && tp.in_t == cp.in_t) ||
                     (tp.in_s == flipped(cp.in_s) && tp.in_t == flipped(cp.in_t));
  const QsrReport tr = qsr(t.residuals.front(), tp, tf.delta);
  const QsrReport cr = ca_qsr(ca_residual_cov(d, 0), cp);
  c.delta1 = tf.delta;
  c.varpi1 = cr.dispersion;
  c.qsr1 = tr.overall;
  c.ca_qsr1 = cr.overall;
  const double tol = 1e-12;
  c.holds = c.same_partition ? std::abs(c.varpi1 - c.delta1) <= tol && std::abs(c.qsr1 - c.ca_qsr1) <= tol
                             : c.varpi1 <= c.delta1 + tol;
  return c;
}

}  // namespace cataxi
