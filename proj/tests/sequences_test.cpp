#include "ineq/sequences.hpp"

#include <gtest/gtest.h>

#include <cstdint>

namespace {

using ineq::Integer;
using ineq::Natural;

// Oracles straight from the defining inequalities.
std::int64_t z_brute(std::int64_t n) {
  std::int64_t v = 0;
  while (3 * (v + 1) < 2 * n) ++v;
  return v;
}
std::int64_t m_brute(std::int64_t n) {
  std::int64_t v = 1;
  while ((v + 1) * (v + 1) <= 2 * n) ++v;
  return v;
}
std::int64_t r_brute(std::int64_t n) {
  std::int64_t v = 0;
  while ((std::int64_t{1} << v) < n) ++v;
  return v;
}

TEST(Sequences, Examples) {
  EXPECT_EQ(ineq::z(1), 0);
  EXPECT_EQ(ineq::z(5), 3);
  EXPECT_EQ(ineq::z(451), 300);
  EXPECT_EQ(ineq::m(8), 4);
  EXPECT_EQ(ineq::m(1), 1);
  EXPECT_EQ(ineq::m(545), 33);
  EXPECT_EQ(ineq::r(1), 0);
  EXPECT_EQ(ineq::r(17), 5);
  EXPECT_EQ(ineq::r(16), 4);
  EXPECT_EQ(ineq::c(1), 4);
  EXPECT_EQ(ineq::c(5), 6);
  EXPECT_EQ(ineq::c(9), 10);  // 2k + 4 with k = 3
  EXPECT_EQ(ineq::x(1), -1);
  EXPECT_EQ(ineq::x(436), 0);
  EXPECT_EQ(ineq::x(15), -16);
  EXPECT_EQ(ineq::y_sign(4), 1);
  EXPECT_EQ(ineq::y_sign(5), -1);
  EXPECT_EQ(ineq::y_sign(337), 1);
  EXPECT_EQ(ineq::y_value(10), Integer{-936});
  EXPECT_EQ(ineq::y_value(2), Integer{2});
  EXPECT_EQ(ineq::y_value(16), Integer{-65024});
  EXPECT_EQ(ineq::y_value(60).to_string(), "-10077678820130816");
  EXPECT_EQ(ineq::b(15), Natural{50625});
}

TEST(Sequences, RowExamples) {
  EXPECT_EQ(ineq::row(2), (ineq::SequenceRow{2, 1, 2, 1, 4, -3, 2, 1}));
  EXPECT_EQ(ineq::row(1), (ineq::SequenceRow{1, 0, 1, 0, 4, -1, 3, 1}));
  EXPECT_EQ(ineq::row(404).y_sign, 1);
}

TEST(Sequences, DomainChecked) {
  EXPECT_THROW(ineq::z(0), std::out_of_range);
  EXPECT_THROW(ineq::m(-3), std::out_of_range);
  EXPECT_THROW(ineq::r(ineq::kMaxN + 1), std::out_of_range);
  EXPECT_NO_THROW(ineq::x(ineq::kMaxN));
  EXPECT_GT(ineq::x(ineq::kMaxN), 0);
}

TEST(Sequences, MatchBruteForce) {
  for (std::int64_t n = 1; n <= 5000; ++n) {
    ASSERT_EQ(ineq::z(n), z_brute(n)) << n;
    ASSERT_EQ(ineq::m(n), m_brute(n)) << n;
    ASSERT_EQ(ineq::r(n), r_brute(n)) << n;
  }
}

TEST(Sequences, DefiningInequalitiesAndRowInvariants) {
  for (std::int64_t n = 1; n <= 1'000'000; ++n) {
    const auto zz = ineq::z(n), mm = ineq::m(n), rr = ineq::r(n);
    ASSERT_TRUE(3 * zz < 2 * n && 2 * n <= 3 * (zz + 1)) << n;
    ASSERT_TRUE(mm * mm <= 2 * n && 2 * n < (mm + 1) * (mm + 1)) << n;
    ASSERT_TRUE(n <= (std::int64_t{1} << rr) && (rr == 0 || n > (std::int64_t{1} << (rr - 1)))) << n;
    ASSERT_EQ(ineq::c(n), 2 * n - 2 * zz + 2);
    ASSERT_EQ(ineq::x(n), zz - (rr + 1) * mm);
  }
}

TEST(Sequences, MonotoneAndPeriodic) {
  for (std::int64_t n = 1; n + 3 <= 1'000'000; ++n) {
    ASSERT_LE(ineq::z(n), ineq::z(n + 1));
    ASSERT_LE(ineq::m(n), ineq::m(n + 1));
    ASSERT_LE(ineq::r(n), ineq::r(n + 1));
    ASSERT_LE(ineq::c(n), ineq::c(n + 1));
    ASSERT_EQ(ineq::c(n + 3), ineq::c(n) + 2) << n;
  }
  for (std::int64_t k = 2; k < 1000; ++k) {
    ASSERT_EQ(ineq::c(3 * k), 2 * k + 4);
    ASSERT_EQ(ineq::c(3 * k + 1), 2 * k + 4);
    ASSERT_EQ(ineq::c(3 * k + 2), 2 * k + 4);
  }
  EXPECT_EQ(ineq::c(2), 4);
}

TEST(Sequences, BStrictlyIncreasing) {
  Natural prev = ineq::b(1);
  for (std::int64_t n = 2; n <= 800; ++n) {
    Natural cur = ineq::b(n);
    ASSERT_LT(prev, cur) << n;
    prev = std::move(cur);
  }
}

TEST(Sequences, CMinusMGap) {
  for (std::int64_t n = 1; n <= 1'000'000; ++n) {
    const auto gap = ineq::c(n) - ineq::m(n);
    ASSERT_GE(gap, 2);
    if (gap == 2) {
      ASSERT_EQ(n, 2);
    }
    if (n >= 10) {
      ASSERT_GE(gap, 5) << n;
    }
  }
}

TEST(Sequences, SignOfExactValueMatchesComparator) {
  for (std::int64_t n = 1; n <= 5000; ++n) {
    ASSERT_EQ(ineq::y_value(n).sign(), ineq::y_sign(n)) << n;
    ASSERT_EQ(ineq::y_sign(n, true), ineq::y_sign(n, false)) << n;
  }
}

TEST(Sequences, YIsDifferenceOfTerms) {
  for (std::int64_t n = 1; n <= 300; ++n)
    ASSERT_EQ(ineq::y_value(n), Integer::difference(ineq::a(n), ineq::b(n)));
}

}  // namespace
