#include "cataxi/csv.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <vector>

namespace cataxi {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_count(const std::string& field, std::size_t line_no) {
  double value = 0.0;
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::InvalidNumber,
                "line " + std::to_string(line_no) + ": '" + field + "' is not a number");
  }
  return value;
}

}  // namespace

ContingencyTable read_csv(std::istream& in, const CsvOptions& options) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::size_t> line_numbers;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (n == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (trim(line).empty()) continue;
    lines.push_back(split_line(line));
    line_numbers.push_back(n);
  }
  if (lines.empty()) throw Error(ErrorCode::InvalidShape, "input has no data");

  std::vector<std::string> col_labels;
  std::size_t first_data = 0;
  std::size_t label_fields = 0;
  if (options.header) {
    // a leading corner cell above the row labels is optional
    const auto& head = lines.front();
    const std::size_t width = lines.size() > 1 ? lines[1].size() : head.size();
    col_labels.assign(head.begin() + (head.size() == width ? 1 : 0), head.end());
    first_data = 1;
    label_fields = 1;
  }

  std::vector<RowRecord> rows;
  const std::size_t expected = options.header ? col_labels.size() + 1 : lines[0].size();
  for (std::size_t k = first_data; k < lines.size(); ++k) {
    const auto& fields = lines[k];
    if (fields.size() != expected) {
      throw Error(ErrorCode::NonRectangular, "line " + std::to_string(line_numbers[k]) + " has " +
                                                 std::to_string(fields.size()) + " fields, expected " +
                                                 std::to_string(expected));
    }
    RowRecord rec;
    rec.label = options.header ? fields[0] : "R" + std::to_string(rows.size() + 1);
    for (std::size_t f = label_fields; f < fields.size(); ++f) {
      rec.counts.push_back(parse_count(fields[f], line_numbers[k]));
    }
    rows.push_back(std::move(rec));
  }
  if (!options.header) {
    for (std::size_t j = 0; j < expected; ++j) col_labels.push_back("C" + std::to_string(j + 1));
  }
  return load_table(rows, std::move(col_labels));
}

ContingencyTable read_csv_file(const std::filesystem::path& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path.string() + "'");
  return read_csv(in, options);
}

}  // namespace cataxi
