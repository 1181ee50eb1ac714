#pragma once

#include "cataxi/diagnostics.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cataxi {

enum class Method { Ca, Tca, Both };

struct AnalysisConfig {
  Method method = Method::Both;
  int k_max = 4;
  Strategy strategy = Strategy::Auto;
  TsvdOptions options;
};

struct TcaStepReport {
  int step = 1;
  double delta = 0.0;
  QsrReport qsr;
  MeanBoundAudit audit;
  QuadrantSums sums;
  UnifiedCheck unified;
};

struct CaStepReport {
  int step = 1;
  double sigma = 0.0;
  QsrReport ca_qsr;
  MeanBoundAudit audit;
  QuadrantContribution contribution;
  UnifiedCheck unified;
};

struct Analysis {
  ContingencyTable table;
  AnalysisConfig config;
  std::optional<TcovDecomposition> tcov;
  std::optional<CaDecomposition> ca;
  std::vector<TcaStepReport> tca_steps;
  std::vector<CaStepReport> ca_steps;
  std::optional<BlockVerdict> blocks;
  std::optional<FirstAxisComparison> first_axes;
};

Analysis analyze(const ContingencyTable& table, const AnalysisConfig& config);

nlohmann::ordered_json to_json(const Analysis& analysis);

/// Aligned text tables: QSR and CA_QSR per dimension, then quadrant contributions.
std::string render_text(const Analysis& analysis);

const char* method_name(Method m) noexcept;
const char* strategy_name(Strategy s) noexcept;

}  // namespace cataxi
