#pragma once

#include "cataxi/table.hpp"

#include <filesystem>
#include <istream>

namespace cataxi {

struct CsvOptions {
  /// With a header, the first line holds column labels and the first field of
  /// every line a row label. Without one every field is a count and labels are
  /// generated as R1.., C1...
  bool header = true;
};

/// Throws NonRectangular, InvalidNumber and the table validation errors.
ContingencyTable read_csv(std::istream& in, const CsvOptions& options = {});

/// Also throws InvalidArgument if the file cannot be opened.
ContingencyTable read_csv_file(const std::filesystem::path& path, const CsvOptions& options = {});

}  // namespace cataxi
