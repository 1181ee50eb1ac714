#pragma once

#include "cataxi/seriation.hpp"
#include "cataxi/tsvd.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cataxi {

/// A matrix with labels and optional coordinate margins.
struct LabeledMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  Matrix values;
  std::optional<Vector> row_margin;
  std::optional<Vector> col_margin;
  std::string row_margin_name;
  std::string col_margin_name;
};

enum class ResidualKind { Tcov, TcaDensity, CaCov, CaDensity };
enum class SeriateBy { None, Axis, Marginals };

/// Parses "tcov", "tca-density", "ca-cov", "ca-density". Throws InvalidArgument.
ResidualKind parse_residual_kind(std::string_view s);

struct ResidualRequest {
  ResidualKind kind = ResidualKind::Tcov;
  /// 0 dumps the first-order residual without margins; step >= 1 dumps the
  /// residual the step-th factor was extracted from, with that factor's
  /// coordinates as margins.
  int step = 1;
  SeriateBy seriate = SeriateBy::Axis;
  Strategy strategy = Strategy::Auto;
  TsvdOptions options;
};

/// Throws IndexOutOfRange when fewer than step factors exist.
LabeledMatrix residual_dump(const ContingencyTable& table, const ResidualRequest& request);

/// Values times scale, rounded to digits decimals (negative digits keep full precision).
std::string to_csv(const LabeledMatrix& m, double scale, int digits, double margin_scale,
                   int margin_digits);

enum class MapFlavor { CaMap, TcaMap, TcovMap, CaContrib, CaContribSquared };

MapFlavor parse_map_flavor(std::string_view s);
const char* map_flavor_name(MapFlavor f) noexcept;

struct MapRecord {
  std::string label;
  bool is_row = true;
  double x = 0.0;
  double y = 0.0;
};

/// Coordinates of every row and column on dimensions dim_a and dim_b (1-based).
/// ca-contrib uses f sqrt(r) and g sqrt(c); the squared variant keeps the sign.
/// Throws IndexOutOfRange if either dimension was not extracted.
std::vector<MapRecord> map_coordinates(const ContingencyTable& table, MapFlavor flavor, int dim_a,
                                       int dim_b, Strategy strategy = Strategy::Auto,
                                       const TsvdOptions& options = {});

std::string map_csv(const std::vector<MapRecord>& records, int dim_a, int dim_b);

}  // namespace cataxi
