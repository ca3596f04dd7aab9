#pragma once

// Published minimal-index tables, one row per m: n, degree, k, signed value.

#include <cstdint>
#include <vector>

#include "unicyclo/cyclotomic.hpp"

namespace unicyclo::golden {

struct Row {
  std::uint64_t m, n;
  long degree;
  std::uint64_t k;
  long value;
};

struct Table {
  cyclo::PolyFamily family;
  std::vector<Row> rows;
  /// Beyond the printed rows, every m in [tail_from, tail_to] first occurs at tail_n.
  std::uint64_t tail_from, tail_to, tail_n;
};

inline const std::vector<Table>& tables() {
  using cyclo::PolyFamily;
  static const std::vector<Table> all{
      {PolyFamily::Phi,
       {{2, 105, 48, 7, -2},
        {3, 385, 240, 119, -3},
        {4, 1365, 576, 196, -4},
        {5, 1785, 768, 137, 5},
        {6, 2805, 1280, 573, -6},
        {7, 3135, 1440, 616, 7},
        {8, 6545, 3840, 1528, -8},
        {9, 6545, 3840, 1914, 9},
        {10, 10465, 6336, 1196, -10},
        {11, 10465, 6336, 1916, -11}},
       10, 14, 10465},
      {PolyFamily::Psi,
       {{2, 561, 241, 17, -2},
        {3, 1155, 675, 33, -3},
        {4, 2145, 1185, 44, 4},
        {5, 3795, 2035, 132, -5},
        {6, 5005, 2125, 201, -6},
        {7, 5005, 2125, 310, -7},
        {8, 8645, 3461, 227, -8},
        {9, 8645, 3461, 240, 9},
        {10, 11305, 4393, 240, -10},
        {11, 11305, 4393, 306, 11}},
       10, 21, 11305},
      {PolyFamily::PhiStar,
       {{2, 60, 24, 5, -2},
        {3, 385, 240, 119, -3},
        {4, 780, 288, 78, -4},
        {5, 1320, 560, 107, -5},
        {6, 1320, 560, 111, 6},
        {7, 1320, 560, 210, -7},
        {8, 1320, 560, 213, -8},
        {9, 3640, 2016, 626, -9},
        {10, 3640, 2016, 648, 10},
        {11, 3640, 2016, 748, 11},
        {12, 3640, 2016, 761, 12},
        {13, 4620, 1440, 386, -13},
        {14, 4620, 1440, 419, -14},
        {15, 4620, 1440, 425, 15},
        {16, 4620, 1440, 474, -16},
        {17, 4620, 1440, 497, -17},
        {18, 4620, 1440, 475, -18},
        {19, 4620, 1440, 558, 19}},
       20, 41, 9240},
      {PolyFamily::PsiStar,
       {{2, 120, 64, 8, -2},
        {3, 420, 276, 12, -3},
        {4, 1008, 288, 48, -4},
        {5, 1820, 956, 475, 5},
        {6, 3080, 1400, 66, 6},
        {7, 3080, 1400, 103, 7},
        {8, 3080, 1400, 114, -8},
        {9, 3080, 1400, 111, -9},
        {10, 3080, 1400, 112, -10},
        {11, 3080, 1400, 121, 11},
        {12, 3080, 1400, 122, 12},
        {13, 3080, 1400, 177, 13},
        {14, 9240, 5880, 261, -14},
        {15, 8580, 5700, 705, -15},
        {16, 9240, 5880, 253, -16},
        {17, 9240, 5880, 325, 17},
        {18, 9240, 5880, 341, 18},
        {19, 9240, 5880, 450, 19}},
       16, 21, 9240},
  };
  return all;
}

/// Search bound used when regenerating the tables; above every listed n.
inline constexpr std::uint64_t kSearchBound = 12000;

}  // namespace unicyclo::golden
