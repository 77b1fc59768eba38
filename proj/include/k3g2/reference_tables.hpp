#pragma once

// Published reference values for the classification and the Betti tables.
// Everything here is checked against the engine by `verify-paper` and the
// acceptance tests; nothing in the engine reads these as inputs.

#include <array>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace k3g2::reference {

// The 38 six-tuples (r1,a1 | r2,a2 | r3,a3) of the rho' pair classes.
inline const std::set<std::array<int, 6>>& prime_tuples() {
  static const std::set<std::array<int, 6>> t = {
      {1, 1, 1, 1, 4, 2}, {1, 1, 4, 2, 1, 1}, {4, 2, 1, 1, 1, 1},
      {1, 1, 2, 0, 3, 1}, {1, 1, 3, 1, 2, 0}, {2, 0, 1, 1, 3, 1},
      {2, 0, 3, 1, 1, 1}, {3, 1, 1, 1, 2, 0}, {3, 1, 2, 0, 1, 1},
      {1, 1, 2, 2, 3, 1}, {1, 1, 3, 1, 2, 2}, {2, 2, 1, 1, 3, 1},
      {2, 2, 3, 1, 1, 1}, {3, 1, 1, 1, 2, 2}, {3, 1, 2, 2, 1, 1},
      {1, 1, 2, 2, 3, 3}, {1, 1, 3, 3, 2, 2}, {2, 2, 1, 1, 3, 3},
      {2, 2, 3, 3, 1, 1}, {3, 3, 1, 1, 2, 2}, {3, 3, 2, 2, 1, 1},
      {2, 0, 2, 0, 2, 0},
      {2, 0, 2, 2, 2, 2}, {2, 2, 2, 0, 2, 2}, {2, 2, 2, 2, 2, 0},
      {2, 0, 3, 3, 3, 3}, {3, 3, 2, 0, 3, 3}, {3, 3, 3, 3, 2, 0},
      {2, 2, 2, 2, 2, 2},
      {2, 2, 2, 2, 4, 2}, {2, 2, 4, 2, 2, 2}, {4, 2, 2, 2, 2, 2},
      {2, 2, 3, 3, 3, 3}, {3, 3, 2, 2, 3, 3}, {3, 3, 3, 3, 2, 2},
      {3, 3, 3, 3, 4, 2}, {3, 3, 4, 2, 3, 3}, {4, 2, 3, 3, 3, 3},
  };
  return t;
}

// The 9 six-tuples of the rho'' pair classes.
inline const std::set<std::array<int, 6>>& double_prime_tuples() {
  static const std::set<std::array<int, 6>> t = {
      {0, 0, 0, 0, 16, 0}, {0, 0, 16, 0, 0, 0}, {16, 0, 0, 0, 0, 0},
      {0, 0, 8, 0, 8, 0},  {8, 0, 0, 0, 8, 0},  {8, 0, 8, 0, 0, 0},
      {0, 0, 8, 8, 8, 8},  {8, 8, 0, 0, 8, 8},  {8, 8, 8, 8, 0, 0},
  };
  return t;
}

// The 9 rho'' index pairs that survive the conjugacy reduction.
inline const std::vector<std::pair<int, int>>& double_prime_pairs() {
  static const std::vector<std::pair<int, int>> p = {
      {1, 4}, {2, 3}, {2, 4}, {4, 1}, {4, 2}, {4, 4}, {4, 5}, {5, 4}, {5, 6}};
  return p;
}

// First construction: b^3 values grouped by b^2.
inline const std::map<int, std::set<int>>& case1_table() {
  static const std::map<int, std::set<int>> t = {
      {2, {25, 29, 33, 37, 41, 45, 49, 53, 57, 61, 65}},
      {4, {27, 31, 35, 39, 43, 47, 51, 55, 59, 63, 67}},
      {6, {37, 41, 45, 49, 53, 57}},
      {8, {39, 43, 47, 51, 55}},
      {10, {41, 45, 49, 53, 57}},
      {12, {43, 47, 51, 55, 59}},
      {14, {45, 49}},
      {16, {47}},
      {18, {41, 45, 49}},
      {20, {43, 47, 51}},
  };
  return t;
}

// Pairs from the classification that fail the twisted-connected-sum
// matching criterion with the best possible partner (r=1, a=1).
inline const std::set<std::pair<int, int>>& case1_non_matching_pairs() {
  static const std::set<std::pair<int, int>> p = {
      {11, 9}, {11, 11}, {12, 10}, {18, 2}, {19, 1}, {19, 3}, {20, 2}};
  return p;
}

// Second construction: the 29 new rows (b2, b3, r1+r2, a1+a2).
inline const std::vector<std::array<int, 4>>& case2_rows() {
  static const std::vector<std::array<int, 4>> rows = {
      {4, 27, 22, 22},  {4, 31, 21, 21},  {4, 35, 20, 20},  {4, 39, 19, 19},
      {4, 43, 18, 18},  {4, 59, 14, 14},  {4, 63, 13, 13},  {4, 67, 12, 12},
      {6, 29, 23, 21},  {6, 33, 22, 20},  {6, 37, 21, 19},  {6, 41, 20, 18},
      {6, 45, 19, 17},  {6, 61, 15, 13},  {6, 65, 14, 12},  {6, 69, 13, 11},
      {6, 73, 12, 10},  {8, 43, 21, 17},  {8, 47, 20, 16},  {8, 75, 13, 9},
      {20, 75, 22, 6},  {20, 79, 21, 5},  {20, 83, 20, 4},  {20, 87, 19, 3},
      {22, 77, 23, 5},  {22, 81, 22, 4},  {22, 85, 21, 3},  {22, 89, 20, 2},
      {24, 91, 21, 1},
  };
  return rows;
}

// Values of (b2, b3) from the second construction that already occur in
// the twisted-connected-sum and torus-quotient literature.
struct LiteratureEntry {
  int b2, b3;
  const char* source;
};

inline const std::vector<LiteratureEntry>& case2_literature() {
  static const std::vector<LiteratureEntry> l = {
      {4, 59, "Kovalev-Lee Table 1"},  {4, 63, "Kovalev-Lee Table 1"},
      {4, 67, "Kovalev-Lee Table 1"},  {6, 61, "Kovalev-Lee Table 1"},
      {6, 65, "Kovalev-Lee Table 1"},  {6, 69, "Kovalev-Lee Table 1"},
      {6, 73, "Kovalev-Lee Table 1"},  {8, 75, "Kovalev-Lee Table 1"},
      {20, 75, "Kovalev-Lee Table 1"}, {20, 79, "Kovalev-Lee Table 1"},
      {20, 83, "Kovalev-Lee Table 1"}, {20, 87, "Kovalev-Lee Table 1"},
      {4, 35, "Kovalev-Lee Section 6.1"},  {6, 41, "Kovalev-Lee Section 6.1"},
      {8, 47, "Kovalev-Lee Section 6.1"},  {22, 89, "Kovalev-Lee Section 6.1"},
      {4, 43, "Kovalev-Lee Section 6.3"},
      {4, 27, "Joyce Section 12.4"}, {6, 33, "Joyce Section 12.4"},
      {4, 39, "Joyce Section 12.5"}, {6, 45, "Joyce Section 12.5"},
      {8, 43, "Joyce Section 12.7"},
  };
  return l;
}

// The 7 pairs of the second construction that are new.
inline const std::set<std::pair<int, int>>& case2_new_pairs() {
  static const std::set<std::pair<int, int>> p = {
      {4, 31}, {6, 29}, {6, 37}, {22, 77}, {22, 81}, {22, 85}, {24, 91}};
  return p;
}

// Dihedral construction: b^3 values grouped by b^2 (95 pairs).
inline const std::map<int, std::set<int>>& d4_table() {
  static const std::map<int, std::set<int>> t = {
      {8, {31, 39, 47, 55, 63, 95, 103, 111, 119, 127, 135, 143, 151, 159, 167,
           175, 183, 191}},
      {12, {35, 43, 51, 59, 67, 99, 107, 115, 123, 131, 139, 147, 155, 163, 171,
            179, 187, 195}},
      {16, {63, 71, 127, 135, 143, 151, 159, 167, 175, 183, 191, 199}},
      {20, {139, 147, 155, 163, 171, 179}},
      {24, {79, 87, 95, 103, 111, 143, 151, 159, 167, 175}},
      {28, {83, 91, 99, 107, 115, 147, 155, 163, 171, 179}},
      {32, {111, 119, 151, 159, 167, 175, 183}},
      {36, {155, 163}},
      {40, {127, 135, 143, 151, 159}},
      {44, {131, 139, 147, 155, 163}},
      {48, {159, 167}},
  };
  return t;
}

inline const std::vector<LiteratureEntry>& d4_literature() {
  static const std::vector<LiteratureEntry> l = {
      {8, 47, "Kovalev-Lee"},   {8, 63, "Kovalev-Lee"},   {8, 95, "Kovalev-Lee"},
      {8, 103, "Kovalev-Lee"},  {8, 111, "Kovalev-Lee"},  {8, 119, "Kovalev-Lee"},
      {8, 151, "Kovalev-Lee"},  {8, 159, "Kovalev-Lee"},  {12, 59, "Kovalev-Lee"},
      {12, 67, "Kovalev-Lee"},  {12, 99, "Kovalev-Lee"},  {12, 107, "Kovalev-Lee"},
      {12, 115, "Kovalev-Lee"}, {12, 123, "Kovalev-Lee"}, {12, 155, "Kovalev-Lee"},
      {12, 163, "Kovalev-Lee"}, {16, 71, "Kovalev-Lee"},  {20, 155, "Kovalev-Lee"},
      {24, 95, "Kovalev-Lee"},
      {8, 31, "Joyce"},   {8, 39, "Joyce"},   {8, 55, "Joyce"},
      {8, 127, "Joyce"},  {8, 135, "Joyce"},  {12, 43, "Joyce"},
      {12, 51, "Joyce"},  {12, 131, "Joyce"}, {16, 135, "Joyce"},
  };
  return l;
}

}  // namespace k3g2::reference
