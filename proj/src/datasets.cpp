#include "cataxi/datasets.hpp"

#include <string>

namespace cataxi {

ContingencyTable ws_table() {
  const std::vector<RowRecord> rows{
      {"Oracle", {155, 157, 109, 133, 151, 96, 35, 170}},
      {"Nokia", {375, 350, 274, 318, 351, 284, 91, 408}},
      {"Fedex", {476, 675, 550, 669, 748, 627, 307, 754}},
      {"A", {86, 66, 105, 110, 117, 76, 30, 122}},
      {"B", {30, 21, 25, 37, 40, 20, 9, 43}},
      {"C", {18, 12, 11, 16, 17, 12, 2, 18}},
      {"D", {25, 23, 33, 36, 34, 28, 12, 35}},
      {"E", {21, 20, 21, 26, 27, 18, 9, 36}},
      {"F", {190, 307, 305, 332, 355, 309, 131, 392}},
      {"G", {18, 16, 16, 25, 21, 18, 10, 29}},
      {"H", {408, 549, 467, 551, 613, 523, 239, 624}},
      {"I", {143, 225, 194, 191, 206, 184, 121, 248}},
  };
  return load_table(rows, {"innovative", "leader", "solution", "rapport", "efficient", "relevant",
                           "essential", "trusted"});
}

ContingencyTable rodent_table() {
  // blank cells of the printed table are zeros
  const std::vector<RowRecord> rows{
      {"24", {1, 0, 0, 0, 0, 0, 0, 0, 0}},
      {"17", {3, 0, 0, 0, 0, 0, 0, 0, 0}},
      {"21", {2, 1, 0, 0, 0, 0, 0, 0, 0}},
      {"10", {1, 2, 0, 0, 0, 0, 0, 0, 0}},
      {"9", {3, 8, 0, 0, 0, 0, 0, 0, 0}},
      {"14", {1, 3, 0, 0, 0, 0, 0, 0, 0}},
      {"7", {0, 11, 0, 0, 0, 0, 0, 0, 0}},
      {"11", {0, 9, 0, 0, 0, 0, 0, 0, 0}},
      {"15", {0, 11, 0, 0, 0, 0, 0, 0, 0}},
      {"25", {0, 5, 0, 0, 0, 0, 0, 0, 0}},
      {"22", {0, 3, 0, 0, 0, 0, 0, 0, 0}},
      {"8", {0, 16, 0, 0, 0, 0, 0, 0, 0}},
      {"16", {0, 4, 0, 0, 0, 0, 0, 0, 0}},
      {"1", {0, 13, 2, 0, 3, 1, 0, 1, 0}},
      {"20", {3, 0, 0, 0, 27, 0, 0, 1, 0}},
      {"12", {0, 3, 16, 7, 1, 5, 0, 0, 0}},
      {"3", {0, 4, 9, 0, 36, 2, 0, 0, 0}},
      {"13", {0, 4, 12, 0, 39, 4, 0, 0, 0}},
      {"4", {0, 4, 30, 18, 53, 5, 3, 1, 0}},
      {"18", {0, 2, 14, 4, 78, 10, 0, 0, 0}},
      {"5", {0, 2, 16, 0, 63, 11, 0, 21, 0}},
      {"23", {0, 0, 8, 2, 0, 2, 0, 0, 0}},
      {"26", {0, 0, 11, 2, 22, 0, 0, 0, 0}},
      {"27", {0, 0, 9, 1, 29, 10, 0, 0, 0}},
      {"19", {0, 0, 0, 0, 1, 0, 0, 0, 0}},
      {"28", {0, 0, 1, 0, 10, 0, 0, 1, 0}},
      {"6", {0, 1, 8, 2, 48, 12, 2, 35, 12}},
      {"2", {0, 1, 16, 2, 57, 9, 3, 65, 8}},
  };
  return load_table(rows, {"rod1", "rod2", "rod6", "rod8", "rod3", "rod5", "rod9", "rod4", "rod7"});
}

std::vector<std::string> builtin_dataset_names() { return {"ws", "rodent"}; }

ContingencyTable builtin_dataset(std::string_view name) {
  if (name == "ws") return ws_table();
  if (name == "rodent") return rodent_table();
  throw Error(ErrorCode::InvalidArgument, "unknown dataset '" + std::string(name) + "'");
}

}  // namespace cataxi
