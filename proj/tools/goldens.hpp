#pragma once

#include <string_view>

namespace limitstab::goldens {

/// A collapsed chamber table: TSV rows "k_lo<TAB>k_hi<TAB>L".
struct TableGolden {
  std::string_view preset;
  std::string_view beta;
  int n;
  std::string_view range;
  std::string_view tsv;
};

/// One wall datum and its contribution in a crossing report.
struct CrossingGolden {
  std::string_view preset;
  std::string_view beta;
  int n;
  std::string_view k0;
  std::string_view data;  // "datum=contribution" lines, in report order
  std::string_view l_plus;
};

inline constexpr TableGolden kTables[] = {
    {"conifold_single:1", "1", 1, "-3:3", "-3\t-1/2\t1\n-1/2\t3\t0\n"},
    {"conifold_single:1", "1", 2, "-3:3", "-3\t-1\t-2\n-1\t3\t0\n"},
    {"conifold_single:1", "1", 3, "-3:3", "-3\t-3/2\t3\n-3/2\t3\t0\n"},
    {"conifold_single:1", "1", 4, "-3:3", "-3\t-2\t-4\n-2\t3\t0\n"},
    {"conifold_single:1", "1", -1, "-3:3", "-3\t1/2\t0\n1/2\t3\t1\n"},
    {"conifold_single:1", "1", -3, "-3:3", "-3\t3/2\t0\n3/2\t3\t3\n"},
    {"conifold_pair:3,2", "1,1", 1, "-1/2:1/2", "-1/2\t-1/10\t1\n-1/10\t1/2\t0\n"},
    {"conifold_pair:3,2", "1,1", 2, "-1/2:1/2", "-1/2\t-1/4\t-1\n-1/4\t-1/5\t-2\n-1/5\t1/2\t0\n"},
    {"conifold_pair:3,2", "1,1", -1, "-1/2:1/2", "-1/2\t1/10\t0\n1/10\t1/2\t1\n"},
    {"conifold_pair:3,2", "1,1", -2, "-1/2:1/2", "-1/2\t1/5\t0\n1/5\t1/4\t-2\n1/4\t1/2\t-1\n"},
    {"conifold_double:1", "2", 3, "-2:2", "-2\t-1\t-2\n-1\t2\t0\n"},
    {"conifold_double:1", "2", 4, "-2:2", "-2\t-3/2\t4\n-3/2\t-1\t1\n-1\t2\t0\n"},
    {"conifold_double:1", "2", -3, "-2:2", "-2\t1\t0\n1\t2\t-2\n"},
    {"conifold_double:1", "2", -4, "-2:2", "-2\t1\t0\n1\t3/2\t1\n3/2\t2\t4\n"},
};

inline constexpr CrossingGolden kCrossings[] = {
    {"conifold_pair:3,2", "1,1", 2, "-1/4", "(0,1),1 | (1,0),1=1\n", "-2"},
    {"conifold_double:1", "2", 4, "-1", "(1),2 | (1),2=0\n(2),4 | (0),0=1\n", "0"},
    {"conifold_double:1", "2", 3, "-3/2", "", "-2"},
};

}  // namespace limitstab::goldens
