// Command-line front end: analyze, residuals, export-maps, seriate, datasets.

#include "cataxi/csv.hpp"
#include "cataxi/datasets.hpp"
#include "cataxi/export.hpp"
#include "cataxi/report.hpp"
#include "cataxi/seriation.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace fs = std::filesystem;
using namespace cataxi;

namespace {

struct Source {
  std::string input;
  std::string dataset;
  bool no_header = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("input", input, "CSV file: column labels on the first line, row labels first");
    cmd->add_option("--dataset", dataset, "built-in table instead of a file")
        ->check(CLI::IsMember(builtin_dataset_names()));
    cmd->add_flag("--no-header", no_header, "every CSV field is a count; labels become R1.., C1..");
  }

  ContingencyTable load() const {
    if (input.empty() == dataset.empty()) {
      throw Error(ErrorCode::InvalidArgument, "give either an input file or --dataset");
    }
    if (!dataset.empty()) return builtin_dataset(dataset);
    return read_csv_file(input, CsvOptions{!no_header});
  }
};

const std::map<std::string, Strategy> kStrategies{
    {"auto", Strategy::Auto}, {"enumeration", Strategy::Enumeration}, {"ascent", Strategy::Ascent}};

TsvdOptions options_from_env() {
  TsvdOptions o;
  if (const char* env = std::getenv("CA_MAX_ENUM")) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
      o.max_enumeration_axis = v;
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, std::string("CA_MAX_ENUM must be a positive integer, got '") +
                                                  env + "'");
    }
  }
  return o;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

const char* direction_name(Direction d) { return d == Direction::RowWise ? "row-wise" : "column-wise"; }

std::string number(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correspondence analysis and taxicab correspondence analysis of contingency tables"};
  app.require_subcommand(1);

  auto* datasets = app.add_subcommand("datasets", "list the built-in tables");

  Source analyze_src;
  std::string method = "both", strategy = "auto", format = "json", analyze_out;
  int k = 4;
  auto* analyze_cmd = app.add_subcommand("analyze", "dispersions, QSR tables and quadrant contributions");
  analyze_src.attach(analyze_cmd);
  analyze_cmd->add_option("--method", method)->check(CLI::IsMember({"ca", "tca", "both"}));
  analyze_cmd->add_option("-k", k, "number of dimensions")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"auto", "enumeration", "ascent"}));
  analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  analyze_cmd->add_option("-o,--output", analyze_out);

  Source resid_src;
  std::string kind = "tcov", seriate_mode = "axis", resid_strategy = "auto", resid_out;
  int step = 1, digits = -1, margin_digits = -2;
  double scale = 1.0, margin_scale = 0.0;
  auto* resid_cmd = app.add_subcommand("residuals", "dump a residual matrix with coordinate margins");
  resid_src.attach(resid_cmd);
  resid_cmd->add_option("--method", kind)->check(
      CLI::IsMember({"tcov", "tca-density", "ca-cov", "ca-density"}));
  resid_cmd->add_option("--step", step, "0 dumps the first-order residual without margins");
  resid_cmd->add_option("--seriate", seriate_mode)->check(CLI::IsMember({"axis", "marginals", "none"}));
  resid_cmd->add_option("--scale", scale)->check(CLI::PositiveNumber);
  resid_cmd->add_option("--digits", digits, "decimals after scaling; full precision if omitted");
  resid_cmd->add_option("--margin-scale", margin_scale, "defaults to --scale");
  resid_cmd->add_option("--margin-digits", margin_digits, "defaults to --digits");
  resid_cmd->add_option("--strategy", resid_strategy)->check(CLI::IsMember({"auto", "enumeration", "ascent"}));
  resid_cmd->add_option("-o,--output", resid_out);

  Source map_src;
  std::vector<std::string> flavors{"ca-map", "tca-map", "tcov-map", "ca-contrib", "ca-contrib-squared"};
  std::vector<int> dims{1, 2};
  std::string out_dir = ".", map_strategy = "auto";
  int map_k = 2;
  auto* map_cmd = app.add_subcommand("export-maps", "write map coordinates, one CSV per flavor");
  map_src.attach(map_cmd);
  map_cmd->add_option("--flavors", flavors)->delimiter(',')->check(
      CLI::IsMember({"ca-map", "tca-map", "tcov-map", "ca-contrib", "ca-contrib-squared"}));
  map_cmd->add_option("--dims", dims)->delimiter(',')->expected(2);
  map_cmd->add_option("-k", map_k, "dimensions to extract; must be at least 2")->check(CLI::PositiveNumber);
  map_cmd->add_option("--strategy", map_strategy)->check(CLI::IsMember({"auto", "enumeration", "ascent"}));
  map_cmd->add_option("--out-dir", out_dir);

  Source ser_src;
  std::string by = "marginals", ser_out;
  auto* ser_cmd = app.add_subcommand("seriate", "permute the table and audit the Robinson pattern");
  ser_src.attach(ser_cmd);
  ser_cmd->add_option("--by", by, "marginals, or first CA axis")->check(CLI::IsMember({"marginals", "axis"}));
  ser_cmd->add_option("-o,--output", ser_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const TsvdOptions tsvd_options = options_from_env();

    if (*datasets) {
      for (const auto& name : builtin_dataset_names()) {
        const ContingencyTable t = builtin_dataset(name);
        std::cout << name << '\t' << t.rows() << 'x' << t.cols() << "\tn=" << t.total() << '\n';
      }
      return 0;
    }

    if (*analyze_cmd) {
      AnalysisConfig cfg;
      cfg.method = method == "ca" ? Method::Ca : method == "tca" ? Method::Tca : Method::Both;
      cfg.k_max = k;
      cfg.strategy = kStrategies.at(strategy);
      cfg.options = tsvd_options;
      const Analysis an = analyze(analyze_src.load(), cfg);
      emit(format == "json" ? to_json(an).dump(2) + "\n" : render_text(an), analyze_out);
      return 0;
    }

    if (*resid_cmd) {
      ResidualRequest req;
      req.kind = parse_residual_kind(kind);
      req.step = step;
      req.seriate = seriate_mode == "axis" ? SeriateBy::Axis
                    : seriate_mode == "marginals" ? SeriateBy::Marginals
                                                  : SeriateBy::None;
      req.strategy = kStrategies.at(resid_strategy);
      req.options = tsvd_options;
      const LabeledMatrix m = residual_dump(resid_src.load(), req);
      emit(to_csv(m, scale, digits, margin_scale > 0.0 ? margin_scale : scale,
                  margin_digits == -2 ? digits : margin_digits),
           resid_out);
      return 0;
    }

    if (*map_cmd) {
      if (map_k < 2) throw Error(ErrorCode::IndexOutOfRange, "maps need at least 2 dimensions (k >= 2)");
      for (int d : dims) {
        if (d < 1 || d > map_k) {
          throw Error(ErrorCode::IndexOutOfRange, "dimension " + std::to_string(d) + " outside 1.." +
                                                      std::to_string(map_k));
        }
      }
      const ContingencyTable table = map_src.load();
      fs::create_directories(out_dir);
      for (const auto& name : flavors) {
        const MapFlavor f = parse_map_flavor(name);
        const auto records = map_coordinates(table, f, dims[0], dims[1], kStrategies.at(map_strategy),
                                             tsvd_options);
        const fs::path path = fs::path(out_dir) / (name + ".csv");
        emit(map_csv(records, dims[0], dims[1]), path.string());
        std::cout << path.string() << '\n';
      }
      return 0;
    }

    if (*ser_cmd) {
      const ContingencyTable table = ser_src.load();
      SeriationResult s;
      if (by == "marginals") {
        s = seriate_by_marginals(table);
      } else {
        const CaDecomposition d = ca_decompose(correspondence(table), 1);
        if (d.factors.empty()) throw Error(ErrorCode::IndexOutOfRange, "table has no CA axis");
        s = seriate_by_axis(table.counts(), d.factors[0].f, d.factors[0].g);
      }
      const auto rows = permute_labels(table.row_labels(), s.row_perm);
      const auto cols = permute_labels(table.col_labels(), s.col_perm);
      std::ostringstream out;
      out << "label";
      for (const auto& c : cols) out << ',' << c;
      out << '\n';
      for (Index i = 0; i < s.seriated.rows(); ++i) {
        out << rows[static_cast<std::size_t>(i)];
        for (Index j = 0; j < s.seriated.cols(); ++j) out << ',' << number(s.seriated(i, j));
        out << '\n';
      }
      const auto violations = robinson_violations(s.seriated);
      out << '\n';
      for (const auto& v : violations) {
        const bool rw = v.direction == Direction::RowWise;
        const std::string& next = rw ? cols[static_cast<std::size_t>(v.col + 1)]
                                     : rows[static_cast<std::size_t>(v.row + 1)];
        out << direction_name(v.direction) << ' ' << rows[static_cast<std::size_t>(v.row)] << ','
            << cols[static_cast<std::size_t>(v.col)] << " -> " << next << ": " << number(v.lhs)
            << " < " << number(v.rhs) << '\n';
      }
      out << violations.size() << " violations\n";
      emit(out.str(), ser_out);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::ConvergenceFailure ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
