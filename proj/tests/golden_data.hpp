#ifndef BRICKBASIS_TESTS_GOLDEN_DATA_HPP
#define BRICKBASIS_TESTS_GOLDEN_DATA_HPP

#include <cstddef>

// Reference data for the zero-roots instances: the labeled trees for
// n = 3 and n = 4, the 6-brick 3D construction at x = (3,3,3), and the
// 24-brick projected construction of the n = 4 instance at x = (4,4,4,4).

namespace golden {

struct tree_row {
  long long left; // -1 when absent
  long long right;
  long long phi;
  long long r;
  long long h;
};

inline constexpr tree_row tree_n3[15] = {
    {2, 3, 1, 0, 0},    {4, 5, 1, 0, 1},    {6, 7, 0, 1, 1},
    {8, 9, 1, -1, 2},   {10, 11, 1, 1, 2},  {12, 13, 2, 0, 2},
    {14, 15, 0, 2, 2},  {-1, -1, 1, -2, 3}, {-1, -1, 2, 1, 3},
    {-1, -1, 2, -1, 3}, {-1, -1, 1, 2, 3},  {-1, -1, 1, -2, 3},
    {-1, -1, 2, 1, 3},  {-1, -1, 3, 0, 3},  {-1, -1, 0, 3, 3},
};

inline constexpr tree_row tree_n4[31] = {
    {2, 3, 1, 0, 0},    {4, 5, 1, 0, 1},    {6, 7, 0, 1, 1},
    {8, 9, 1, -1, 2},   {10, 11, 1, 1, 2},  {12, 13, 2, 0, 2},
    {14, 15, 0, 2, 2},  {16, 17, 1, -2, 3}, {18, 19, 2, 1, 3},
    {20, 21, 2, -1, 3}, {22, 23, 1, 2, 3},  {24, 25, 1, -2, 3},
    {26, 27, 2, 1, 3},  {28, 29, 3, 0, 3},  {30, 31, 0, 3, 3},
    {-1, -1, 1, -3, 4}, {-1, -1, 3, 1, 4},  {-1, -1, 2, -2, 4},
    {-1, -1, 2, 2, 4},  {-1, -1, 2, -2, 4}, {-1, -1, 2, 2, 4},
    {-1, -1, 3, -1, 4}, {-1, -1, 1, 3, 4},  {-1, -1, 1, -3, 4},
    {-1, -1, 3, 1, 4},  {-1, -1, 2, -2, 4}, {-1, -1, 2, 2, 4},
    {-1, -1, 1, -3, 4}, {-1, -1, 3, 1, 4},  {-1, -1, 4, 0, 4},
    {-1, -1, 0, 4, 4},
};

struct brick_row {
  const char *origin[3];
  const char *extent[3];
  std::size_t leaf;
  std::size_t rep;
};

// build from the root of the n = 3 zero-roots tree at x = (3,3,3);
// target extent (3, 3, 3), brick volumes 1+4+4+4+4+10 = 27.
inline constexpr brick_row scene_3d[6] = {
    {{"0", "0", "0"}, {"1/3", "1", "3"}, 8, 1},
    {{"1/3", "0", "0"}, {"4/3", "1", "3"}, 9, 1},
    {{"5/3", "0", "0"}, {"4/3", "1", "3"}, 9, 2},
    {{"0", "1", "0"}, {"2/3", "2", "3"}, 10, 1},
    {{"2/3", "1", "0"}, {"2/3", "2", "3"}, 10, 2},
    {{"4/3", "1", "0"}, {"5/3", "2", "3"}, 11, 1},
};

inline constexpr const char *scene_3d_target_extent[3] = {"3", "3", "3"};

// build from node 2 of the n = 4 zero-roots tree at x = (4,4,4,4);
// target extent (16/3, 6, 8), brick volumes summing to 256.
inline constexpr brick_row scene_4d[24] = {
    {{"0", "0", "0"}, {"1/3", "1", "3"}, 16, 1},
    {{"1/3", "0", "0"}, {"5/3", "1", "3"}, 17, 1},
    {{"2", "0", "0"}, {"5/3", "1", "3"}, 17, 2},
    {{"11/3", "0", "0"}, {"5/3", "1", "3"}, 17, 3},
    {{"0", "1", "0"}, {"2/3", "5/2", "3"}, 18, 1},
    {{"2/3", "1", "0"}, {"2/3", "5/2", "3"}, 18, 2},
    {{"4/3", "1", "0"}, {"2", "5/2", "3"}, 19, 1},
    {{"10/3", "1", "0"}, {"2", "5/2", "3"}, 19, 2},
    {{"0", "7/2", "0"}, {"2/3", "5/2", "3"}, 18, 1},
    {{"2/3", "7/2", "0"}, {"2/3", "5/2", "3"}, 18, 2},
    {{"4/3", "7/2", "0"}, {"2", "5/2", "3"}, 19, 1},
    {{"10/3", "7/2", "0"}, {"2", "5/2", "3"}, 19, 2},
    {{"0", "0", "3"}, {"2/3", "3/2", "5"}, 20, 1},
    {{"2/3", "0", "3"}, {"2/3", "3/2", "5"}, 20, 2},
    {{"4/3", "0", "3"}, {"2", "3/2", "5"}, 21, 1},
    {{"10/3", "0", "3"}, {"2", "3/2", "5"}, 21, 2},
    {{"0", "3/2", "3"}, {"2/3", "3/2", "5"}, 20, 1},
    {{"2/3", "3/2", "3"}, {"2/3", "3/2", "5"}, 20, 2},
    {{"4/3", "3/2", "3"}, {"2", "3/2", "5"}, 21, 1},
    {{"10/3", "3/2", "3"}, {"2", "3/2", "5"}, 21, 2},
    {{"0", "3", "3"}, {"1", "3", "5"}, 22, 1},
    {{"1", "3", "3"}, {"1", "3", "5"}, 22, 2},
    {{"2", "3", "3"}, {"1", "3", "5"}, 22, 3},
    {{"3", "3", "3"}, {"7/3", "3", "5"}, 23, 1},
};

inline constexpr const char *scene_4d_target_extent[3] = {"16/3", "6", "8"};

// n = 2 basis data, in ascending bitstring order (00, 01, 10, 11):
// roots per element, and the coefficient as a polynomial in (s1, s2).
inline constexpr long long roots_n2[4][2] = {{1, 2}, {1, 0}, {0, 1}, {0, -1}};

inline long long coef_n2(std::size_t element, long long s1, long long s2) {
  switch (element) {
  case 0: return s1 * s2;
  case 1: return 2 * s1 - s1 * s2;
  case 2: return 1 - s1 + s2 - s1 * s2;
  default: return 1 - s1 - s2 + s1 * s2;
  }
}

} // namespace golden

#endif // BRICKBASIS_TESTS_GOLDEN_DATA_HPP
