#include "ineq/intervals.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>

namespace {

using ineq::Bounds;

TEST(Intervals, BoundsExamples) {
  EXPECT_EQ(ineq::d_bounds(13), (Bounds{13, 17}));
  EXPECT_EQ(ineq::d_bounds(1), (Bounds{1, 1}));
  EXPECT_EQ(ineq::d_bounds(520), (Bounds{512, 544}));
  EXPECT_EQ(ineq::e_bounds(1), (Bounds{1, 1}));
  EXPECT_EQ(ineq::e_bounds(17), (Bounds{17, 32}));
  EXPECT_EQ(ineq::e_bounds(16), (Bounds{9, 16}));
  EXPECT_EQ(ineq::f_bounds(1), (Bounds{1, 1}));
  EXPECT_EQ(ineq::f_bounds(13), (Bounds{13, 16}));
  for (int k = 1; k < 40; k += 2) {
    const std::int64_t p = std::int64_t{1} << k;
    EXPECT_EQ(ineq::f_bounds(p), (Bounds{p, p})) << k;
  }
  for (int k = 0; k < 40; ++k) {
    const std::int64_t p = std::int64_t{1} << k;
    EXPECT_EQ(ineq::f_bounds(p).hi, p) << k;
  }
}

TEST(Intervals, BoundsAreTheExtremes) {
  for (std::int64_t n = 1; n <= 5000; ++n) {
    const auto d = ineq::d_bounds(n);
    const auto e = ineq::e_bounds(n);
    ASSERT_EQ(ineq::m(d.lo), ineq::m(n));
    ASSERT_EQ(ineq::m(d.hi), ineq::m(n));
    ASSERT_TRUE(d.lo == 1 || ineq::m(d.lo - 1) != ineq::m(n));
    ASSERT_NE(ineq::m(d.hi + 1), ineq::m(n));
    ASSERT_EQ(d.hi - d.lo, ineq::m(n) % 2 == 0 ? ineq::m(n) : ineq::m(n) - 1);
    ASSERT_EQ(ineq::r(e.lo), ineq::r(n));
    ASSERT_EQ(ineq::r(e.hi), ineq::r(n));
    ASSERT_TRUE(e.lo == 1 || ineq::r(e.lo - 1) != ineq::r(n));
    ASSERT_NE(ineq::r(e.hi + 1), ineq::r(n));
    const auto f = ineq::f_bounds(n);
    ASSERT_TRUE(f.lo <= n && n <= f.hi);
  }
}

TEST(Intervals, TableExamples) {
  const auto t = ineq::interval_table(8);
  ASSERT_EQ(t.size(), 5u);
  const std::int64_t expect[5][2] = {{1, 1}, {2, 2}, {3, 4}, {5, 7}, {8, 8}};
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(t[i].lo, expect[i][0]);
    EXPECT_EQ(t[i].hi, expect[i][1]);
    EXPECT_EQ(t[i].index, i + 1);
  }
  const auto big = ineq::interval_table(600);
  EXPECT_EQ(big[35], (ineq::IntervalRecord{36, 421, 449, 9, 29, -10, 9}));
  EXPECT_EQ(big[40], (ineq::IntervalRecord{41, 545, 577, 10, 33, 0, 21}));
}

TEST(Intervals, LastRecordNotClipped) {
  const auto t = ineq::interval_table(550);
  EXPECT_EQ(t.back().lo, 545);
  EXPECT_EQ(t.back().hi, 577);
}

TEST(Intervals, RecordsAreMaximalConstancyRuns) {
  const auto t = ineq::interval_table(5000);
  ASSERT_EQ(t.front().lo, 1);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& rec = t[i];
    if (i + 1 < t.size()) {
      ASSERT_EQ(rec.hi + 1, t[i + 1].lo);
    }
    std::int64_t xmin = INT64_MAX, xmax = INT64_MIN;
    for (std::int64_t n = rec.lo; n <= rec.hi; ++n) {
      ASSERT_EQ(ineq::m(n), rec.m_const) << n;
      ASSERT_EQ(ineq::r(n), rec.r_const) << n;
      ASSERT_EQ(ineq::x(n), rec.x_lo + ineq::z(n) - ineq::z(rec.lo)) << n;
      xmin = std::min(xmin, ineq::x(n));
      xmax = std::max(xmax, ineq::x(n));
    }
    ASSERT_EQ(rec.x_lo, xmin);
    ASSERT_EQ(rec.x_hi, xmax);
    ASSERT_TRUE(ineq::m(rec.hi + 1) != rec.m_const || ineq::r(rec.hi + 1) != rec.r_const);
  }
  EXPECT_GE(t.back().hi, 5000);
}

TEST(Intervals, EndpointEquivalences) {
  for (std::int64_t a = 1; a <= 600; ++a) {
    const auto fa = ineq::f_bounds(a);
    for (std::int64_t b = 1; b <= 600; ++b) {
      const auto fb = ineq::f_bounds(b);
      const bool same = ineq::m(a) == ineq::m(b) && ineq::r(a) == ineq::r(b);
      ASSERT_EQ(fa.lo == fb.lo, same);
      ASSERT_EQ(fa.hi == fb.hi, same);
    }
  }
}

}  // namespace
