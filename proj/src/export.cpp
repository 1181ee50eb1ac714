#include "cataxi/export.hpp"

#include "cataxi/ca.hpp"
#include "cataxi/tca.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace cataxi {

ResidualKind parse_residual_kind(std::string_view s) {
  if (s == "tcov") return ResidualKind::Tcov;
  if (s == "tca-density") return ResidualKind::TcaDensity;
  if (s == "ca-cov") return ResidualKind::CaCov;
  if (s == "ca-density") return ResidualKind::CaDensity;
  throw Error(ErrorCode::InvalidArgument, "unknown residual kind '" + std::string(s) + "'");
}

namespace {

void require_step(int step, std::size_t available) {
  if (step < 0 || static_cast<std::size_t>(step) > available) {
    throw Error(ErrorCode::IndexOutOfRange, "step " + std::to_string(step) + " requested but only " +
                                                std::to_string(available) + " factors extracted");
  }
}

std::string number(double x, int digits) {
  char buf[64];
  if (digits < 0) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
  } else {
    const double p = std::pow(10.0, digits);
    double y = std::round(x * p) / p;
    if (y == 0.0) y = 0.0;  // no "-0"
    std::snprintf(buf, sizeof buf, "%.*f", digits, y);
  }
  return buf;
}

}  // namespace

LabeledMatrix residual_dump(const ContingencyTable& table, const ResidualRequest& req) {
  const CorrespondenceMatrix cm = correspondence(table);
  const int k = std::max(req.step, 1);
  LabeledMatrix out;
  Vector rows_axis, cols_axis;
  const char* tag = "";

  if (req.step >= 1) switch (req.kind) {
    case ResidualKind::Tcov:
    case ResidualKind::TcaDensity: {
      const TcovDecomposition t = tcov_decompose(cm, k, req.strategy, req.options);
      require_step(req.step, t.factors.size());
      const int m = std::max(req.step, 1) - 1;
      if (req.kind == ResidualKind::Tcov) {
        out.values = t.residuals[static_cast<std::size_t>(m)].values;
      } else {
        out.values = tca_residual_density(t, m).values;
      }
      if (req.step >= 1) {
        if (req.kind == ResidualKind::Tcov) {
          rows_axis = t.factors[static_cast<std::size_t>(m)].a;
          cols_axis = t.factors[static_cast<std::size_t>(m)].b;
          tag = "ab";
        } else {
          const TcaCoordinates c = tca_coordinates(t, req.step);
          rows_axis = c.f;
          cols_axis = c.g;
          tag = "fg";
        }
      }
      break;
    }
    case ResidualKind::CaCov:
    case ResidualKind::CaDensity: {
      const CaDecomposition d = ca_decompose(cm, k);
      require_step(req.step, d.factors.size());
      const int m = std::max(req.step, 1) - 1;
      out.values = req.kind == ResidualKind::CaCov ? ca_residual_cov(d, m).values
                                                   : ca_residual_density(d, m).values;
      if (req.step >= 1) {
        rows_axis = d.factors[static_cast<std::size_t>(m)].f;
        cols_axis = d.factors[static_cast<std::size_t>(m)].g;
        tag = "fg";
      }
      break;
    }
  }
  if (req.step == 0) {
    // the first-order residual has no factor of its own
    out.values = req.kind == ResidualKind::Tcov || req.kind == ResidualKind::CaCov
                     ? residual_cov(cm).values
                     : density_residual(cm).values;
  }

  std::vector<Index> row_perm(static_cast<std::size_t>(table.rows()));
  std::vector<Index> col_perm(static_cast<std::size_t>(table.cols()));
  for (std::size_t i = 0; i < row_perm.size(); ++i) row_perm[i] = static_cast<Index>(i);
  for (std::size_t j = 0; j < col_perm.size(); ++j) col_perm[j] = static_cast<Index>(j);
  if (req.seriate == SeriateBy::Marginals) {
    const SeriationResult s = seriate_by_marginals(table);
    row_perm = s.row_perm;
    col_perm = s.col_perm;
  } else if (req.seriate == SeriateBy::Axis && req.step >= 1) {
    const SeriationResult s = seriate_by_axis(out.values, rows_axis, cols_axis);
    row_perm = s.row_perm;
    col_perm = s.col_perm;
  }

  out.values = permute(out.values, row_perm, col_perm);
  out.row_labels = permute_labels(table.row_labels(), row_perm);
  out.col_labels = permute_labels(table.col_labels(), col_perm);
  if (req.step >= 1) {
    out.row_margin = permute(rows_axis, row_perm);
    out.col_margin = permute(cols_axis, col_perm);
    out.row_margin_name = std::string(1, tag[0]) + std::to_string(req.step);
    out.col_margin_name = std::string(1, tag[1]) + std::to_string(req.step);
  }
  return out;
}

std::string to_csv(const LabeledMatrix& m, double scale, int digits, double margin_scale,
                   int margin_digits) {
  std::ostringstream out;
  out << "label";
  for (const auto& c : m.col_labels) out << ',' << c;
  if (m.row_margin) out << ',' << m.row_margin_name;
  out << '\n';
  for (Index i = 0; i < m.values.rows(); ++i) {
    out << m.row_labels[static_cast<std::size_t>(i)];
    for (Index j = 0; j < m.values.cols(); ++j) out << ',' << number(scale * m.values(i, j), digits);
    if (m.row_margin) out << ',' << number(margin_scale * (*m.row_margin)(i), margin_digits);
    out << '\n';
  }
  if (m.col_margin) {
    out << m.col_margin_name;
    for (Index j = 0; j < m.col_margin->size(); ++j) {
      out << ',' << number(margin_scale * (*m.col_margin)(j), margin_digits);
    }
    if (m.row_margin) out << ',';
    out << '\n';
  }
  return out.str();
}

MapFlavor parse_map_flavor(std::string_view s) {
  if (s == "ca-map") return MapFlavor::CaMap;
  if (s == "tca-map") return MapFlavor::TcaMap;
  if (s == "tcov-map") return MapFlavor::TcovMap;
  if (s == "ca-contrib") return MapFlavor::CaContrib;
  if (s == "ca-contrib-squared") return MapFlavor::CaContribSquared;
  throw Error(ErrorCode::InvalidArgument, "unknown map flavor '" + std::string(s) + "'");
}

const char* map_flavor_name(MapFlavor f) noexcept {
  switch (f) {
    case MapFlavor::CaMap: return "ca-map";
    case MapFlavor::TcaMap: return "tca-map";
    case MapFlavor::TcovMap: return "tcov-map";
    case MapFlavor::CaContrib: return "ca-contrib";
    case MapFlavor::CaContribSquared: return "ca-contrib-squared";
  }
  return "?";
}

std::vector<MapRecord> map_coordinates(const ContingencyTable& table, MapFlavor flavor, int dim_a,
                                       int dim_b, Strategy strategy, const TsvdOptions& options) {
  if (dim_a < 1 || dim_b < 1) throw Error(ErrorCode::IndexOutOfRange, "dimensions are 1-based");
  const int k = std::max(dim_a, dim_b);
  const CorrespondenceMatrix cm = correspondence(table);
  std::vector<Vector> row_dims, col_dims;

  if (flavor == MapFlavor::TcaMap || flavor == MapFlavor::TcovMap) {
    const TcovDecomposition t = tcov_decompose(cm, k, strategy, options);
    require_step(k, t.factors.size());
    for (int d : {dim_a, dim_b}) {
      if (flavor == MapFlavor::TcovMap) {
        row_dims.push_back(t.factors[static_cast<std::size_t>(d - 1)].a);
        col_dims.push_back(t.factors[static_cast<std::size_t>(d - 1)].b);
      } else {
        const TcaCoordinates c = tca_coordinates(t, d);
        row_dims.push_back(c.f);
        col_dims.push_back(c.g);
      }
    }
  } else {
    const CaDecomposition ca = ca_decompose(cm, k);
    require_step(k, ca.factors.size());
    for (int d : {dim_a, dim_b}) {
      const CaFactor& f = ca.factors[static_cast<std::size_t>(d - 1)];
      if (flavor == MapFlavor::CaMap) {
        row_dims.push_back(f.f);
        col_dims.push_back(f.g);
        continue;
      }
      Vector a = f.f.cwiseProduct(cm.r.cwiseSqrt());
      Vector b = f.g.cwiseProduct(cm.c.cwiseSqrt());
      if (flavor == MapFlavor::CaContribSquared) {
        a = a.cwiseProduct(a.cwiseAbs());
        b = b.cwiseProduct(b.cwiseAbs());
      }
      row_dims.push_back(a);
      col_dims.push_back(b);
    }
  }

  std::vector<MapRecord> out;
  for (Index i = 0; i < table.rows(); ++i) {
    out.push_back({table.row_labels()[static_cast<std::size_t>(i)], true, row_dims[0](i), row_dims[1](i)});
  }
  for (Index j = 0; j < table.cols(); ++j) {
    out.push_back({table.col_labels()[static_cast<std::size_t>(j)], false, col_dims[0](j), col_dims[1](j)});
  }
  return out;
}

std::string map_csv(const std::vector<MapRecord>& records, int dim_a, int dim_b) {
  std::ostringstream out;
  out << "label,kind,dim" << dim_a << ",dim" << dim_b << '\n';
  char buf[96];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, ",%s,%.17g,%.17g\n", r.is_row ? "row" : "col", r.x, r.y);
    out << r.label << buf;
  }
  return out.str();
}

}  // namespace cataxi
