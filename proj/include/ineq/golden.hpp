#pragma once

// Values as printed in the source note, embedded verbatim (typos included)
// so that checks compare against the printed text rather than recomputing it.
// Each printed value known to disagree with the definitions is listed in
// kErrata together with the computed value.

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>

namespace ineq::golden {

struct ExerciseColumn {
  std::int64_t n;
  std::int64_t x;
  std::int64_t c_minus_m;
  std::int64_t y;
};

inline constexpr std::array<ExerciseColumn, 16> kExerciseTable{{
    {1, -1, 3, 7},
    {2, -3, 2, 2},
    {3, -5, 4, 13},
    {4, -4, 4, 12},
    {5, -9, 3, -17},
    {6, -9, 5, -4},
    {7, -8, 5, -17},
    {8, -11, 4, -496},
    {9, -15, 6, -665},
    {10, -14, 6, -936},
    {11, -13, 6, -1267},
    {12, -13, 8, -1472},
    {13, -17, 7, -28433},
    {14, -16, 7, -38288},
    {15, -21, 9, -50113},  // x printed as -21; definitions give -16
    {16, -20, 9, -65024},  // x printed as -20; definitions give -15
}};

struct IntervalRow {
  std::int64_t index;
  std::int64_t lo;
  std::int64_t hi;
  std::int64_t r;
  std::int64_t m;
  std::int64_t x_lo;
  std::int64_t x_hi;
};

inline constexpr std::array<IntervalRow, 41> kIntervalTable{{
    {1, 1, 1, 0, 1, -1, -1},
    {2, 2, 2, 1, 2, -3, -3},
    {3, 3, 4, 2, 2, -5, -4},
    {4, 5, 7, 3, 3, -9, -8},
    {5, 8, 8, 3, 4, -11, -11},
    {6, 9, 12, 4, 4, -15, -13},
    {7, 13, 16, 4, 5, -17, -15},
    {8, 17, 17, 5, 5, -19, -19},
    {9, 18, 24, 5, 6, -25, -21},
    {10, 25, 31, 5, 7, -26, -22},
    {11, 32, 32, 5, 8, -27, -27},
    {12, 33, 40, 6, 8, -35, -30},
    {13, 41, 49, 6, 9, -36, -31},
    {14, 50, 60, 6, 10, -37, -31},
    {15, 61, 64, 6, 11, -37, -35},
    {16, 65, 71, 7, 11, -45, -41},
    {17, 72, 84, 7, 12, -49, -41},
    {18, 85, 97, 7, 13, -48, -40},
    {19, 98, 112, 7, 14, -47, -38},
    {20, 113, 127, 7, 15, -45, -36},
    {21, 128, 128, 7, 16, -43, -43},
    {22, 129, 144, 8, 16, -59, -49},
    {23, 145, 161, 8, 17, -57, -46},
    {24, 162, 180, 8, 18, -55, -43},
    {25, 181, 199, 8, 19, -51, -39},
    {26, 200, 220, 8, 20, -47, -34},
    {27, 221, 241, 8, 21, -42, -29},
    {28, 242, 256, 8, 22, -37, -28},
    {29, 257, 264, 9, 22, -49, -45},
    {30, 265, 287, 9, 23, -54, -39},
    {31, 288, 312, 9, 24, -49, -33},
    {32, 313, 337, 9, 25, -42, -26},
    {33, 338, 364, 9, 26, -35, -18},
    {34, 365, 391, 9, 27, -27, -10},
    {35, 392, 420, 9, 28, -19, -1},
    {36, 421, 449, 9, 29, -10, 9},
    {37, 450, 480, 9, 30, -1, 19},
    {38, 481, 511, 9, 31, 10, 30},
    {39, 512, 512, 9, 32, 21, 21},
    {40, 513, 544, 10, 32, -11, 10},
    {41, 545, 577, 10, 32, 0, 21},  // m printed as 32; isqrt(1090) = 33
}};

struct Run {
  std::int64_t lo;
  std::int64_t hi;  // kUnbounded for "and every larger n"
};
inline constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

// Sign classification of x(n).
inline constexpr std::array<Run, 3> kXNegative{{{1, 435}, {450, 450}, {513, 528}}};
inline constexpr std::array<std::int64_t, 5> kXZero{436, 451, 529, 545, 546};

// Sign classification of y(n); the zero set is empty.
inline constexpr std::array<Run, 3> kYNegative{{{5, 335}, {338, 350}, {365, 368}}};
inline constexpr std::array<Run, 4> kYPositive{{{1, 4}, {336, 337}, {351, 364}, {369, kUnbounded}}};

// y(n) > 0 from here on.
inline constexpr std::int64_t kYPositiveFrom = 404;

/// Root brackets as printed for the four bounding functions.
struct PrintedBracket {
  std::string_view name;
  double lo;
  double hi;
};
inline constexpr std::array<PrintedBracket, 4> kRootBrackets{{
    {"x_lower", 560, 561},
    {"x_upper", 384, 385},
    {"Y_lower", 379, 389},  // printed (379,389); h(379) < 0 < h(380) puts the root in (379,380)
    {"Y_upper", 324, 325},
}};

/// Printed decimal approximations of Y(n), d(n) and the step of d.
struct PrintedApprox {
  std::string_view name;
  std::int64_t n;
  double value;
  double tolerance;
};
inline constexpr std::array<PrintedApprox, 8> kApproximations{{
    {"Y", 325, -5.26, 0.02},
    {"Y", 337, 1.48, 0.02},
    {"Y", 338, -8.02, 0.02},
    {"Y", 353, 0.41, 0.02},
    {"d", 364, -238.7, 0.1},
    {"Y", 365, -2.4, 0.02},  // computed -2.3056
    {"Y", 371, 1.08, 0.02},
    {"Delta_d", 371, -0.3, 0.05},
}};

/// Documented typos and misprints.
struct Erratum {
  std::string_view id;
  std::string_view location;
  std::string_view printed;
  std::string_view reading;
  bool reported;  // surfaced as a KNOWN_ERRATUM report by `verify`
};

inline constexpr std::array<Erratum, 10> kErrata{{
    {"exercise_1_1.x15", "table of small values, column n=15", "x(15) = -21", "x(15) = -16 (z=9, r=4, m=5)", true},
    {"exercise_1_1.x16", "table of small values, column n=16", "x(16) = -20", "x(16) = -15 (z=10, r=4, m=5)", true},
    {"construction_2_2.item41.m", "interval list, item 41", "m(n) = 32 on 545..577", "m(n) = 33 = isqrt(1090)",
     true},
    {"lemma_3_4.bracket", "root of the lower Y bound", "k in (379,389) from h(379)<0, f(380)>0",
     "k in (379,380); f(380) reads h(380)", true},
    {"remark_final.Y365", "case (vi) approximation", "Y(365) ~ -2.4", "Y(365) = -2.3056", true},
    {"definition_e", "definition of y", "2^(...) -. n^(m-1)", "plain subtraction", false},
    {"lemma_3_4.h", "lower Y bound", "sqrt(2n) inside a function of x", "sqrt(2x)", false},
    {"lemma_3_5.f", "upper Y bound", "f(324)<0, f(325)>0", "k(324)<0, k(325)>0", false},
    {"theorem_2_8.step_vii", "proof step (vii)", "y(n)>0 for 338<=n<=350",
     "y(n)<0 there, as the theorem statement says", false},
    {"lemma_3_3.f", "proof of the upper x bound", "f(n) = (2/3)n - ... > x(n)", "g(n)", false},
}};

}  // namespace ineq::golden
