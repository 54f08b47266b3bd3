#pragma once

// Maximal intervals on which m(n) and r(n) are both constant.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "sequences.hpp"

namespace ineq {

struct Bounds {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Least and greatest n' with m(n') = m(n): ceil(m^2/2) and floor(m^2/2) + m.
inline Bounds d_bounds(std::int64_t n) {
  const std::int64_t t = m(n);
  return {(t * t + 1) / 2, t * t / 2 + t};
}

/// Least and greatest n' with r(n') = r(n).
inline Bounds e_bounds(std::int64_t n) {
  const std::int64_t s = r(n);
  if (s == 0) return {1, 1};
  return {(std::int64_t{1} << (s - 1)) + 1, std::int64_t{1} << s};
}

/// Least and greatest n' sharing both m and r with n.
inline Bounds f_bounds(std::int64_t n) {
  const Bounds d = d_bounds(n);
  const Bounds e = e_bounds(n);
  return {std::max(d.lo, e.lo), std::min(d.hi, e.hi)};
}

struct IntervalRecord {
  std::int64_t index = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t r_const = 0;
  std::int64_t m_const = 0;
  std::int64_t x_lo = 0;
  std::int64_t x_hi = 0;

  friend bool operator==(const IntervalRecord&, const IntervalRecord&) = default;
};

inline IntervalRecord interval_at(std::int64_t index, std::int64_t lo) {
  const std::int64_t hi = f_bounds(lo).hi;
  return {index, lo, hi, r(lo), m(lo), x(lo), x(hi)};
}

/// Intervals [g(i), g(i+1) - 1] with g(1) = 1, g(i+1) = f2(g(i)) + 1, for
/// every i with g(i) <= n_max. The last record is not clipped to n_max.
inline std::vector<IntervalRecord> interval_table(std::int64_t n_max) {
  std::vector<IntervalRecord> out;
  for (std::int64_t lo = 1, i = 1; lo <= n_max; ++i) {
    out.push_back(interval_at(i, lo));
    lo = out.back().hi + 1;
  }
  return out;
}

}  // namespace ineq
