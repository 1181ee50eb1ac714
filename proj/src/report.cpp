#include "cataxi/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace cataxi {

using nlohmann::ordered_json;

const char* method_name(Method m) noexcept {
  switch (m) {
    case Method::Ca: return "ca";
    case Method::Tca: return "tca";
    case Method::Both: return "both";
  }
  return "?";
}

const char* strategy_name(Strategy s) noexcept {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Enumeration: return "enumeration";
    case Strategy::Ascent: return "ascent";
  }
  return "?";
}

Analysis analyze(const ContingencyTable& table, const AnalysisConfig& config) {
  if (config.k_max < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  Analysis out{table, config, {}, {}, {}, {}, {}, {}};
  const CorrespondenceMatrix cm = correspondence(table);

  if (config.method != Method::Ca) {
    out.tcov = tcov_decompose(cm, config.k_max, config.strategy, config.options);
    for (const TaxicabFactor& f : out.tcov->factors) {
      TcaStepReport s;
      s.step = f.step;
      s.delta = f.delta;
      s.qsr = qsr(out.tcov->residuals[static_cast<std::size_t>(f.step - 1)],
                  partition_from_axis(f.a, f.b), f.delta);
      s.audit = mean_bound_audit(s.qsr);
      s.sums = quadrant_sums(*out.tcov, f.step);
      s.unified = unified_dispersion_check(*out.tcov, f.step);
      out.tca_steps.push_back(s);
    }
  }
  if (config.method != Method::Tca) {
    out.ca = ca_decompose(cm, config.k_max);
    for (const CaFactor& f : out.ca->factors) {
      CaStepReport s;
      s.step = f.step;
      s.sigma = f.sigma;
      const ResidualCovMatrix q = ca_residual_cov(*out.ca, f.step - 1);
      s.ca_qsr = ca_qsr(q, partition_from_axis(f.v_std, f.u_std));
      s.audit = mean_bound_audit(s.ca_qsr);
      s.contribution = quadrant_contributions(q, f.u_std, f.v_std, f.sigma);
      s.unified = unified_dispersion_check(*out.ca, f.step);
      out.ca_steps.push_back(s);
    }
    if (!out.ca->factors.empty()) out.blocks = block_structure(*out.ca);
  }
  if (out.tcov && out.ca && !out.tcov->factors.empty() && !out.ca->factors.empty()) {
    out.first_axes = compare_first_axes(*out.tcov, *out.ca);
  }
  return out;
}

namespace {

ordered_json optional_value(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json quadrant_object(const std::array<double, 4>& v) {
  ordered_json j = ordered_json::object();
  for (Quadrant q : kQuadrants) j[quadrant_label(q)] = v[q];
  return j;
}

ordered_json labeled(const std::vector<std::string>& labels, const Vector& x) {
  ordered_json j = ordered_json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) j[labels[i]] = x(static_cast<Index>(i));
  return j;
}

ordered_json qsr_json(const QsrReport& r) {
  ordered_json q = ordered_json::object();
  for (Quadrant k : kQuadrants) q[quadrant_label(k)] = optional_value(r.value[k]);
  return {{"overall", r.overall},
          {"quadrants", q},
          {"signed_sums", quadrant_object(r.signed_sum)},
          {"abs_sums", quadrant_object(r.abs_sum)},
          {"abs_total", r.abs_total}};
}

ordered_json audit_json(const MeanBoundAudit& a) {
  return {{"unit_overall", a.unit_overall},
          {"unit_quadrants", a.unit_quadrants},
          {"equivalence_holds", a.equivalence_holds},
          {"mean_magnitude", a.mean_magnitude},
          {"slack", a.slack},
          {"bound_holds", a.bound_holds}};
}

ordered_json unified_json(const UnifiedCheck& u) {
  return {{"sign_form", u.sign_form},
          {"sign_target", u.sign_target},
          {"sign_error", u.sign_error()},
          {"axis_form", u.axis_form},
          {"axis_target", u.axis_target},
          {"axis_error", u.axis_error()}};
}

}  // namespace

ordered_json to_json(const Analysis& an) {
  const auto& rows = an.table.row_labels();
  const auto& cols = an.table.col_labels();
  ordered_json doc;
  doc["table"] = {{"rows", an.table.rows()},
                  {"cols", an.table.cols()},
                  {"total", an.table.total()},
                  {"row_labels", rows},
                  {"col_labels", cols}};
  doc["config"] = {{"method", method_name(an.config.method)},
                   {"k", an.config.k_max},
                   {"strategy", strategy_name(an.config.strategy)}};

  if (an.tcov) {
    ordered_json dims = ordered_json::array();
    for (const TcaStepReport& s : an.tca_steps) {
      const TaxicabFactor& f = an.tcov->factors[static_cast<std::size_t>(s.step - 1)];
      const TcaCoordinates k = tca_coordinates(*an.tcov, s.step);
      ordered_json d = {{"step", s.step}, {"delta", s.delta}};
      d["qsr"] = qsr_json(s.qsr);
      d["quadrant_sums"] = {{"(+,+)", s.sums.st},
                            {"(-,-)", s.sums.s_bar_t_bar},
                            {"(-,+)", s.sums.s_bar_t},
                            {"(+,-)", s.sums.s_t_bar},
                            {"row_half", s.sums.row_half},
                            {"col_half", s.sums.col_half}};
      d["mean_bound"] = audit_json(s.audit);
      d["unified"] = unified_json(s.unified);
      d["a"] = labeled(rows, f.a);
      d["b"] = labeled(cols, f.b);
      d["f"] = labeled(rows, k.f);
      d["g"] = labeled(cols, k.g);
      dims.push_back(std::move(d));
    }
    doc["tca"] = {{"strategy", strategy_name(an.tcov->strategy)}, {"dimensions", std::move(dims)}};
  }

  if (an.ca) {
    const double inertia = an.ca->covariance.values.cwiseAbs2()
                               .cwiseQuotient(an.ca->r * an.ca->c.transpose())
                               .sum();
    ordered_json dims = ordered_json::array();
    for (const CaStepReport& s : an.ca_steps) {
      const CaFactor& f = an.ca->factors[static_cast<std::size_t>(s.step - 1)];
      ordered_json d = {{"step", s.step},
                        {"sigma", s.sigma},
                        {"sigma_squared", s.sigma * s.sigma},
                        {"inertia_share", inertia > 0.0 ? s.sigma * s.sigma / inertia : 0.0},
                        {"varpi", s.ca_qsr.dispersion}};
      d["ca_qsr"] = qsr_json(s.ca_qsr);
      d["mean_bound"] = audit_json(s.audit);
      d["sacq"] = quadrant_object(s.contribution.sacq);
      d["srcq"] = quadrant_object(s.contribution.srcq);
      d["sres"] = s.contribution.sres;
      d["unified"] = unified_json(s.unified);
      d["f"] = labeled(rows, f.f);
      d["g"] = labeled(cols, f.g);
      dims.push_back(std::move(d));
    }
    doc["ca"] = {{"total_inertia", inertia}, {"dimensions", std::move(dims)}};
  }

  if (an.blocks) {
    const BlockVerdict& b = *an.blocks;
    ordered_json s1 = ordered_json::array(), s2 = ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) (b.row_block[i] ? s2 : s1).push_back(rows[i]);
    ordered_json t1 = ordered_json::array(), t2 = ordered_json::array();
    for (std::size_t j = 0; j < cols.size(); ++j) (b.col_block[j] ? t2 : t1).push_back(cols[j]);
    doc["block_structure"] = {
        {"sigma1", b.sigma1},
        {"sigma1_squared", b.sigma1_squared},
        {"exact_two_blocks", b.exact},
        {"quasi_two_blocks", b.quasi},
        {"blocks", {{{"rows", s1}, {"cols", t1}}, {{"rows", s2}, {"cols", t2}}}},
        {"constants",
         {{"rows", {b.row_constant_pos, b.row_constant_neg}},
          {"cols", {b.col_constant_pos, b.col_constant_neg}}}},
        {"constant_spread", b.constant_spread},
        {"off_diagonal_ca_qsr", {optional_value(b.off_diagonal_qsr[0]), optional_value(b.off_diagonal_qsr[1])}},
        {"off_diagonal_minus_one", b.off_diagonal_minus_one},
        {"off_diagonal_sacq", {b.off_diagonal_sacq[0], b.off_diagonal_sacq[1]}},
        {"off_diagonal_sacq_equal", b.off_diagonal_sacq_equal}};
  }

  if (an.first_axes) {
    const FirstAxisComparison& c = *an.first_axes;
    doc["first_axes"] = {{"same_partition", c.same_partition},
                         {"delta1", c.delta1},
                         {"varpi1", c.varpi1},
                         {"qsr1", c.qsr1},
                         {"ca_qsr1", c.ca_qsr1},
                         {"holds", c.holds}};
  }
  return doc;
}

namespace {

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

std::string pct(const std::optional<double>& v) { return v ? fmt("%.2f", 100.0 * *v) : "n/a"; }

std::string pair(const std::string& a, const std::string& b) { return "(" + a + ", " + b + ")"; }

void row(std::ostringstream& out, const std::vector<std::string>& cells) {
  static constexpr int widths[] = {4, 20, 20, 12, 10};
  for (std::size_t i = 0; i < cells.size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-*s", i < 5 ? widths[i] : 10, cells[i].c_str());
    out << buf;
  }
  out << '\n';
}

}  // namespace

std::string render_text(const Analysis& an) {
  std::ostringstream out;
  out << an.table.rows() << " x " << an.table.cols() << " table, n = " << an.table.total() << "\n";

  if (!an.tca_steps.empty()) {
    out << "\nQSR (%), taxicab\n";
    row(out, {"k", "QSR(+)", "QSR(-)", "QSR", "delta"});
    for (const auto& s : an.tca_steps) {
      const auto& v = s.qsr.value;
      row(out, {std::to_string(s.step), pair(pct(v[PlusPlus]), pct(v[MinusMinus])),
                pair(pct(v[MinusPlus]), pct(v[PlusMinus])), pct(s.qsr.overall), fmt("%.4f", s.delta)});
    }
  }
  if (!an.ca_steps.empty()) {
    out << "\nCA_QSR (%)\n";
    row(out, {"k", "CA_QSR(+)", "CA_QSR(-)", "CA_QSR", "varpi"});
    for (const auto& s : an.ca_steps) {
      const auto& v = s.ca_qsr.value;
      row(out, {std::to_string(s.step), pair(pct(v[PlusPlus]), pct(v[MinusMinus])),
                pair(pct(v[MinusPlus]), pct(v[PlusMinus])), pct(s.ca_qsr.overall),
                fmt("%.4f", s.ca_qsr.dispersion)});
    }

    out << "\nQuadrant contributions x100\n";
    row(out, {"k", "sACQ(+)", "sACQ(-)", "sRES", "sigma"});
    for (const auto& s : an.ca_steps) {
      const auto& a = s.contribution.sacq;
      auto h = [](double x) { return fmt("%.2f", 100.0 * x); };
      row(out, {std::to_string(s.step), pair(h(a[PlusPlus]), h(a[MinusMinus])),
                pair(h(a[MinusPlus]), h(a[PlusMinus])), h(s.contribution.sres), h(s.sigma)});
    }
    out << "\nRelative quadrant contributions (%)\n";
    row(out, {"k", "sRCQ(+)", "sRCQ(-)", "sRES/sigma", "sum|sRCQ|"});
    for (const auto& s : an.ca_steps) {
      const auto& a = s.contribution.srcq;
      auto h = [](double x) { return fmt("%.2f", 100.0 * x); };
      row(out, {std::to_string(s.step), pair(h(a[PlusPlus]), h(a[MinusMinus])),
                pair(h(a[MinusPlus]), h(a[PlusMinus])), h(s.contribution.sres / s.sigma),
                h(std::abs(a[0]) + std::abs(a[1]) + std::abs(a[2]) + std::abs(a[3]))});
    }
  }
  if (an.blocks) {
    const BlockVerdict& b = *an.blocks;
    out << "\nsigma1 = " << fmt("%.6f", b.sigma1) << ", sigma1^2 = " << fmt("%.6f", b.sigma1_squared);
    if (b.exact) out << ": exact two-block structure";
    else if (b.quasi) out << ": quasi two-block structure";
    else out << ": no block structure";
    out << "\noff-diagonal CA_QSR1 = " << pair(pct(b.off_diagonal_qsr[0]), pct(b.off_diagonal_qsr[1]))
        << " %\n";
  }
  if (an.first_axes) {
    const auto& c = *an.first_axes;
    out << "first axes " << (c.same_partition ? "share" : "differ in") << " their partition; varpi1 = "
        << fmt("%.4f", c.varpi1) << ", delta1 = " << fmt("%.4f", c.delta1) << "\n";
  }
  return out.str();
}

}  // namespace cataxi
