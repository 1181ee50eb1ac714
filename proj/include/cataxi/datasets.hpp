#pragma once

#include "cataxi/table.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cataxi {

/// Brand-attribute counts: 12 brands by 8 image attributes.
ContingencyTable ws_table();

/// Rodent species abundance: 28 sites by 9 species, listed in first-axis order.
ContingencyTable rodent_table();

std::vector<std::string> builtin_dataset_names();

/// Throws InvalidArgument for an unknown name.
ContingencyTable builtin_dataset(std::string_view name);

}  // namespace cataxi
