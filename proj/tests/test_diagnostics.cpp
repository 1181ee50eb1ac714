#include "cataxi/datasets.hpp"
#include "cataxi/diagnostics.hpp"
#include "reference_values.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cataxi;

namespace {

struct Fixture {
  ContingencyTable table;
  CorrespondenceMatrix cm;
  TcovDecomposition tcov;
  CaDecomposition ca;

  explicit Fixture(ContingencyTable t, int k = 4)
      : table(std::move(t)),
        cm(correspondence(table)),
        tcov(tcov_decompose(cm, k, Strategy::Enumeration)),
        ca(ca_decompose(cm, k)) {}

  QsrReport tca_report(int step) const {
    const auto& f = tcov.factors[static_cast<std::size_t>(step - 1)];
    return qsr(tcov.residuals[static_cast<std::size_t>(step - 1)], partition_from_axis(f.a, f.b), f.delta);
  }
  QsrReport ca_report(int step) const {
    const auto& f = ca.factors[static_cast<std::size_t>(step - 1)];
    return ca_qsr(ca_residual_cov(ca, step - 1), partition_from_axis(f.v_std, f.u_std));
  }
  QuadrantContribution contribution(int step) const {
    const auto& f = ca.factors[static_cast<std::size_t>(step - 1)];
    return quadrant_contributions(ca_residual_cov(ca, step - 1), f.u_std, f.v_std, f.sigma);
  }
};

const Fixture& ws() {
  static const Fixture f(ws_table());
  return f;
}

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void check_pairs(const QsrReport& r, const reference::QuadrantRow& ref, double tol) {
  REQUIRE(r.value[PlusPlus]);
  REQUIRE(r.value[MinusMinus]);
  REQUIRE(r.value[MinusPlus]);
  REQUIRE(r.value[PlusMinus]);
  const auto pos = sorted({100 * *r.value[PlusPlus], 100 * *r.value[MinusMinus]});
  const auto neg = sorted({100 * *r.value[MinusPlus], 100 * *r.value[PlusMinus]});
  const auto rpos = sorted({ref.positive[0], ref.positive[1]});
  const auto rneg = sorted({ref.negative[0], ref.negative[1]});
  for (int i = 0; i < 2; ++i) {
    CHECK(std::abs(pos[i] - rpos[i]) <= tol);
    CHECK(std::abs(neg[i] - rneg[i]) <= tol);
  }
  CHECK(std::abs(100 * r.overall - ref.overall) <= tol);
}

}  // namespace

TEST_CASE("partition by the >= 0 rule") {
  Vector r(3), c(2);
  r << 1.0, 0.0, -2.0;
  c << -0.5, 0.0;
  const QuadrantPartition p = partition_from_axis(r, c);
  CHECK(p.in_s == std::vector<bool>{true, true, false});
  CHECK(p.in_t == std::vector<bool>{false, true});
  const QuadrantPartition all = partition_from_axis(Vector::Ones(3), Vector::Ones(2));
  CHECK(std::none_of(all.in_s.begin(), all.in_s.end(), [](bool b) { return !b; }));
}

TEST_CASE("brand table partitions") {
  const auto& f = ws().tcov.factors[0];
  const QuadrantPartition p = partition_from_axis(f.a, f.b);
  std::vector<std::string> s, t;
  for (Index i = 0; i < p.rows(); ++i)
    if (p.in_s[static_cast<std::size_t>(i)]) s.push_back(ws().table.row_labels()[static_cast<std::size_t>(i)]);
  for (Index j = 0; j < p.cols(); ++j)
    if (p.in_t[static_cast<std::size_t>(j)]) t.push_back(ws().table.col_labels()[static_cast<std::size_t>(j)]);
  std::sort(s.begin(), s.end());
  std::sort(t.begin(), t.end());
  CHECK(s == std::vector<std::string>{"A", "B", "C", "E", "G", "Nokia", "Oracle"});
  CHECK(t == std::vector<std::string>{"innovative", "trusted"});
}

TEST_CASE("brand table QSR") {
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    const QsrReport r = ws().tca_report(k);
    check_pairs(r, reference::ws_qsr[static_cast<std::size_t>(k - 1)], 0.02);
    CHECK(r.flavor == Flavor::Tca);
    CHECK(std::abs(r.dispersion - reference::ws_qsr[static_cast<std::size_t>(k - 1)].dispersion) < 5e-5);
    // direct sums agree with the delta/4 shortcut
    CHECK(std::abs(r.signed_sum[PlusPlus] - r.dispersion / 4) < 1e-10);
    CHECK(std::abs(r.signed_sum[PlusMinus] + r.dispersion / 4) < 1e-10);
  }
}

TEST_CASE("brand table CA_QSR") {
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    const QsrReport r = ws().ca_report(k);
    const auto& ref = reference::ws_ca_qsr[static_cast<std::size_t>(k - 1)];
    check_pairs(r, ref, 0.02);
    CHECK(std::abs(r.dispersion - ref.dispersion) < 5e-5);
    CHECK(std::abs(r.dispersion - 4 * r.signed_sum[PlusPlus]) < 1e-10);
    CHECK(std::abs(r.dispersion + 4 * r.signed_sum[MinusPlus]) < 1e-10);
  }
  const FirstAxisComparison c = compare_first_axes(ws().tcov, ws().ca);
  CHECK(c.same_partition);
  CHECK(c.holds);
  CHECK(std::abs(c.varpi1 - c.delta1) < 1e-12);
}

TEST_CASE("brand table quadrant contributions") {
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    const QuadrantContribution q = ws().contribution(k);
    const auto& ra = reference::ws_sacq[static_cast<std::size_t>(k - 1)];
    CHECK(std::abs(100 * q.sigma - ra.dispersion) < 0.005);
    const auto pos = sorted({100 * q.sacq[PlusPlus], 100 * q.sacq[MinusMinus]});
    const auto neg = sorted({100 * q.sacq[MinusPlus], 100 * q.sacq[PlusMinus]});
    CHECK(std::abs(pos[0] - std::min(ra.positive[0], ra.positive[1])) <= 0.02);
    CHECK(std::abs(pos[1] - std::max(ra.positive[0], ra.positive[1])) <= 0.02);
    CHECK(std::abs(neg[0] - std::min(ra.negative[0], ra.negative[1])) <= 0.02);
    CHECK(std::abs(neg[1] - std::max(ra.negative[0], ra.negative[1])) <= 0.02);
    CHECK(std::abs(100 * q.sres - ra.overall) <= 0.02);
    double total = 0;
    for (double x : q.sacq) total += std::abs(x);
    CHECK(std::abs(total - q.sigma) < 1e-10);
    for (Quadrant x : kQuadrants) CHECK(q.srcq[x] == doctest::Approx(q.sacq[x] / q.sigma));
  }
}

TEST_CASE("printed relative contributions of the second axis do not add up") {
  // the printed row is (15.50, 28.43) (-48.43, -7.46) with total -12.14;
  // the four entries sum to -11.96, so one of them is off
  const auto& ref = reference::ws_srcq[1];
  const double printed = ref.positive[0] + ref.positive[1] + ref.negative[0] + ref.negative[1];
  CHECK(std::abs(printed - ref.overall) > 0.1);
  const QuadrantContribution q = ws().contribution(2);
  double sum = 0;
  for (double x : q.srcq) sum += 100 * x;
  CHECK(std::abs(sum - ref.overall) <= 0.01);
  CHECK(std::abs(100 * q.srcq[MinusPlus] + 48.61) <= 0.01);
}

TEST_CASE("mean bound audit") {
  const MeanBoundAudit a = mean_bound_audit(ws().tca_report(1));
  CHECK(a.bound_holds);
  CHECK(std::abs(a.mean_magnitude - 0.7294) < 1e-4);
  CHECK_FALSE(a.unit_overall);
  CHECK(a.equivalence_holds);

  const Fixture diag(testing::make_table(Matrix::Identity(2, 2)), 1);
  const MeanBoundAudit d = mean_bound_audit(diag.tca_report(1));
  CHECK(d.unit_overall);
  CHECK(d.unit_quadrants);
  CHECK(d.equivalence_holds);
}

TEST_CASE("last step has QSR one") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const Fixture f(testing::random_table(rng, 5, 4), 10);
    const int k = static_cast<int>(f.tcov.factors.size());
    const QsrReport r = f.tca_report(k);
    CHECK(std::abs(r.overall - 1.0) < 1e-8);
    const MeanBoundAudit a = mean_bound_audit(r, 1e-8);
    CHECK(a.unit_quadrants);
  }
}

TEST_CASE("block structure verdicts") {
  const Fixture diag(testing::make_table(Matrix::Identity(2, 2)), 1);
  const BlockVerdict b = block_structure(diag.ca);
  CHECK(b.exact);
  CHECK(b.quasi);
  CHECK(b.off_diagonal_minus_one);
  CHECK(b.off_diagonal_sacq_equal);

  const BlockVerdict w = block_structure(ws().ca);
  CHECK_FALSE(w.exact);
  CHECK_FALSE(w.quasi);
  CHECK(std::abs(100 * w.sigma1 - 9.10) < 0.005);

  const Fixture rodent(rodent_table(), 2);
  const BlockVerdict r = block_structure(rodent.ca);
  CHECK_FALSE(r.exact);
  CHECK(r.quasi);
  REQUIRE(r.off_diagonal_qsr[1]);
  CHECK(*r.off_diagonal_qsr[1] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(r.sigma1 - 0.864) < 0.001);
}

TEST_CASE("rodent first CA dimension") {
  const Fixture rodent(rodent_table(), 2);
  const QsrReport r = rodent.ca_report(1);
  const QuadrantContribution q = rodent.contribution(1);
  for (Quadrant x : kQuadrants) {
    CAPTURE(x);
    REQUIRE(r.value[x]);
    CHECK(std::abs(*r.value[x] - reference::rodent_ca_qsr1[x]) <= 0.002);
    CHECK(std::abs(q.sacq[x] - reference::rodent_sacq1[x]) <= 0.001);
    CHECK(std::abs(q.srcq[x] - reference::rodent_srcq1[x]) <= 0.0005);
  }
}

TEST_CASE("exact two-block tables") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    const Fixture f(testing::make_table(testing::random_two_block(rng)), 2);
    const BlockVerdict b = block_structure(f.ca);
    CHECK(b.exact);
    CHECK(b.constant_spread < 1e-10);
    CHECK(b.off_diagonal_minus_one);
    CHECK(b.off_diagonal_sacq_equal);
  }
}

TEST_CASE("unified dispersion formulas") {
  for (int k = 1; k <= 4; ++k) {
    const UnifiedCheck t = unified_dispersion_check(ws().tcov, k);
    CHECK(t.sign_error() < 1e-10);
    CHECK(t.axis_error() < 1e-10);
    const UnifiedCheck c = unified_dispersion_check(ws().ca, k);
    CHECK(c.sign_error() < 1e-10);
    CHECK(c.axis_error() < 1e-10);
  }
  CHECK(std::abs(unified_dispersion_check(ws().tcov, 1).sign_form - 0.0476) < 5e-5);

  Vector r(2), c(3);
  r << 0.4, 0.6;
  c << 0.2, 0.3, 0.5;
  CHECK(weighted_bilinear(Vector::Ones(2), Vector::Ones(3), r, c, Matrix::Zero(2, 3)) == 0.0);
  CHECK_THROWS_AS(weighted_bilinear(Vector::Ones(3), Vector::Ones(3), r, c, Matrix::Zero(2, 3)), Error);
}

TEST_CASE("relative contributions") {
  const auto& t = ws().tcov;
  const Index innovative = testing::index_of(ws().table.col_labels(), "innovative");
  const Index relevant = testing::index_of(ws().table.col_labels(), "relevant");
  const Index essential = testing::index_of(ws().table.col_labels(), "essential");
  CHECK(std::round(100 * relative_contribution(t, 1, innovative, Side::Columns)) == 41);
  const Index pair[] = {relevant, essential};
  CHECK(std::round(100 * relative_contribution(t, 1, pair, Side::Columns)) == 39);
  for (Index i = 0; i < ws().table.rows(); ++i) CHECK(relative_contribution(t, 2, i, Side::Rows) <= 0.5 + 1e-12);
  CHECK_THROWS_AS(relative_contribution(t, 1, 99, Side::Rows), Error);
  CHECK_THROWS_AS(relative_contribution(t, 9, 0, Side::Rows), Error);

  const Fixture diag(testing::make_table(Matrix::Identity(2, 2)), 1);
  CHECK(relative_contribution(diag.tcov, 1, 0, Side::Rows) == doctest::Approx(0.5));
}

TEST_CASE("indices survive relabeling") {
  std::mt19937_64 rng(53);
  const Matrix n = testing::random_counts(rng, 6, 5);
  Eigen::PermutationMatrix<Eigen::Dynamic> pr(6), pc(5);
  pr.indices() << 2, 4, 0, 5, 3, 1;
  pc.indices() << 1, 3, 4, 0, 2;
  const Fixture a(testing::make_table(n), 3);
  const Fixture b(testing::make_table(pr * n * pc.transpose()), 3);
  for (int k = 1; k <= 3; ++k) {
    CHECK(std::abs(a.tca_report(k).overall - b.tca_report(k).overall) < 1e-12);
    CHECK(std::abs(a.ca_report(k).overall - b.ca_report(k).overall) < 1e-12);
    const auto qa = a.contribution(k), qb = b.contribution(k);
    for (Quadrant x : kQuadrants) CHECK(std::abs(qa.sacq[x] - qb.sacq[x]) < 1e-12);
  }
}

TEST_CASE("argument checks") {
  const auto& f = ws().tcov.factors[0];
  const QuadrantPartition p = partition_from_axis(f.a, f.b);
  CHECK_THROWS_AS(qsr(ws().tcov.residuals[0], p, 0.0), Error);
  const QuadrantPartition wrong = partition_from_axis(Vector::Ones(3), Vector::Ones(3));
  CHECK_THROWS_AS(qsr(ws().tcov.residuals[0], wrong, 1.0), Error);
  CHECK_THROWS_AS(quadrant_contributions(ws().tcov.residuals[0], Vector::Ones(3), Vector::Ones(12), 1.0),
                  Error);
}

TEST_CASE("empty quadrant is reported undefined") {
  Matrix x(2, 2);
  x << 1, -1, -1, 1;
  const QsrReport r = qsr(ResidualCovMatrix{x, 1}, partition_from_axis(Vector::Ones(2), Vector::Ones(2)), 1.0);
  CHECK(r.value[PlusPlus]);
  CHECK_FALSE(r.value[MinusMinus]);
  CHECK_FALSE(r.value[MinusPlus]);
  const MeanBoundAudit a = mean_bound_audit(r);
  CHECK(a.defined_quadrants == 1);
}
