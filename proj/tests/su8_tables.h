#pragma once
#include <vector>

namespace qap::testing {

struct Row {
    const char *w, *w_hat, *b;
};

struct Table {
    const char *label;
    const char *fixture;
    const char *center;
    std::vector<Row> rows;
};

// su(8) reference tables as (W, W-hat, B) rows in "zeta_alpha" form.
// Table 2 row 5 B, table 4 row 1 W-hat and rows 6/7 B are corrected entries.
inline const std::vector<Table> kTables = {
    {"C_[000]",
     "intrinsic",
     "000_000 001_000 010_000 011_000 100_000 101_000 110_000 111_000",
     {
         {"000_001 010_001 100_001 110_001", "001_001 011_001 101_001 111_001",
          "000_000 010_000 100_000 110_000"},
         {"000_010 001_010 100_010 101_010", "010_010 011_010 110_010 111_010",
          "000_000 001_000 100_000 101_000"},
         {"000_011 011_011 100_011 111_011", "001_011 010_011 101_011 110_011",
          "000_000 011_000 100_000 111_000"},
         {"000_100 001_100 010_100 011_100", "100_100 101_100 110_100 111_100",
          "000_000 001_000 010_000 011_000"},
         {"000_101 010_101 101_101 111_101", "001_101 011_101 100_101 110_101",
          "000_000 010_000 101_000 111_000"},
         {"000_110 001_110 110_110 111_110", "010_110 011_110 100_110 101_110",
          "000_000 001_000 110_000 111_000"},
         {"000_111 011_111 101_111 110_111", "001_111 010_111 100_111 111_111",
          "000_000 011_000 101_000 110_000"},
     }},
    {"C^{0}_{[100]}",
     "kind1",
     "000_000 001_000 010_000 011_000 000_100 001_100 010_100 011_100",
     {
         {"100_000 101_000 110_000 111_000", "100_100 101_100 110_100 111_100",
          "000_000 001_000 010_000 011_000"},
         {"000_001 010_001 000_101 010_101", "001_001 011_001 001_101 011_101",
          "000_000 010_000 000_100 010_100"},
         {"100_001 110_001 101_101 111_101", "101_001 111_001 100_101 110_101",
          "000_000 010_000 001_100 011_100"},
         {"000_010 001_010 000_110 001_110", "010_010 011_010 010_110 011_110",
          "000_000 001_000 000_100 001_100"},
         {"100_010 101_010 110_110 111_110", "110_010 111_010 100_110 101_110",
          "000_000 001_000 010_100 011_100"},
         {"000_011 011_011 000_111 011_111", "001_011 010_011 001_111 010_111",
          "000_000 011_000 000_100 011_100"},
         {"100_011 111_011 101_111 110_111", "101_011 110_011 100_111 111_111",
          "000_000 011_000 001_100 010_100"},
     }},
    {"C^{110}_{[001,100]}",
     "kind2",
     "000_000 010_000 101_001 111_001 001_100 011_100 100_101 110_101",
     {
         {"100_000 110_000 001_001 011_001", "101_100 111_100 000_101 010_101",
          "000_000 010_000 101_001 111_001"},
         {"001_000 011_000 000_100 010_100", "100_001 110_001 101_101 111_101",
          "000_000 010_000 001_100 011_100"},
         {"101_000 111_000 001_101 011_101", "000_001 010_001 100_100 110_100",
          "000_000 010_000 100_101 110_101"},
         {"000_010 101_011 001_110 100_111", "010_010 111_011 011_110 110_111",
          "000_000 101_001 001_100 100_101"},
         {"100_010 001_011 111_110 010_111", "110_010 011_011 101_110 000_111",
          "000_000 101_001 011_100 110_101"},
         {"001_010 110_011 000_110 111_111", "011_010 100_011 010_110 101_111",
          "000_000 111_001 001_100 110_101"},
         {"101_010 010_011 110_110 001_111", "111_010 000_011 100_110 011_111",
          "000_000 111_001 011_100 100_101"},
     }},
    {"C^{101000}_{[001,010,100]}",
     "kind3",
     "000_000 101_001 000_010 101_011 001_100 100_101 001_110 100_111",
     {
         {"001_000 001_010 000_100 000_110", "100_001 100_011 101_101 101_111",
          "000_000 000_010 001_100 001_110"},
         {"010_000 111_001 011_100 110_101", "010_010 111_011 011_110 110_111",
          "000_000 101_001 001_100 100_101"},
         {"011_000 110_011 010_100 111_111", "110_001 011_010 111_101 010_110",
          "000_000 101_011 001_100 100_111"},
         {"100_000 001_001 100_010 001_011", "101_100 000_101 101_110 000_111",
          "000_000 101_001 000_010 101_011"},
         {"101_000 101_010 001_101 001_111", "000_001 000_011 100_100 100_110",
          "000_000 000_010 100_101 100_111"},
         {"110_000 011_001 111_110 010_111", "110_010 011_011 111_100 010_101",
          "000_000 101_001 001_110 100_111"},
         {"111_000 010_011 011_101 110_110", "010_001 111_010 110_100 011_111",
          "000_000 101_011 100_101 001_110"},
     }},
};

}  // namespace qap::testing
