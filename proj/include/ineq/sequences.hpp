#pragma once

// The integer sequences z, m, r, c, x, a, b, y as total functions of n >= 1.

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "natural.hpp"

namespace ineq {

/// Largest n accepted by the sequence functions. Every non-big value
/// (2n, (r+1)m, c, x) stays far inside int64 up to here.
inline constexpr std::int64_t kMaxN = 100'000'000'000'000'000;

namespace detail {
inline void require_domain(std::int64_t n) {
  if (n < 1 || n > kMaxN)
    throw std::out_of_range("sequence argument must satisfy 1 <= n <= 1e17, got " + std::to_string(n));
}
}  // namespace detail

/// Largest z with 3z < 2n.
inline std::int64_t z(std::int64_t n) {
  detail::require_domain(n);
  return (2 * n - 1) / 3;
}

/// Largest m with m^2 <= 2n.
inline std::int64_t m(std::int64_t n) {
  detail::require_domain(n);
  return static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(2 * n)));
}

/// Least r >= 0 with n <= 2^r.
inline std::int64_t r(std::int64_t n) {
  detail::require_domain(n);
  return static_cast<std::int64_t>(std::bit_width(static_cast<std::uint64_t>(n - 1)));
}

inline std::int64_t c(std::int64_t n) { return 2 * n - 2 * z(n) + 2; }

inline std::int64_t x(std::int64_t n) { return z(n) - (r(n) + 1) * m(n); }

/// a(n) = 2^(c(n) - m(n)).
inline Natural a(std::int64_t n) { return Natural::pow2(static_cast<std::uint64_t>(c(n) - m(n))); }

/// b(n) = n^(m(n) - 1).
inline Natural b(std::int64_t n) {
  return nat_pow(Natural{static_cast<std::uint64_t>(n)}, static_cast<std::uint64_t>(m(n) - 1));
}

/// Sign of y(n) = a(n) - b(n), decided without forming the difference.
inline int y_sign(std::int64_t n, bool fast_path = true) {
  const auto ord = cmp_pow2_vs_pow(static_cast<std::uint64_t>(c(n) - m(n)), static_cast<std::uint64_t>(n),
                                   static_cast<std::uint64_t>(m(n) - 1), fast_path);
  return ord < 0 ? -1 : (ord > 0 ? 1 : 0);
}

/// Exact y(n). The magnitude has roughly m(n)*log2(n) bits; prefer y_sign for scans.
inline Integer y_value(std::int64_t n) { return Integer::difference(a(n), b(n)); }

struct SequenceRow {
  std::int64_t n = 0;
  std::int64_t z = 0;
  std::int64_t m = 0;
  std::int64_t r = 0;
  std::int64_t c = 0;
  std::int64_t x = 0;
  std::int64_t c_minus_m = 0;
  int y_sign = 0;

  friend bool operator==(const SequenceRow&, const SequenceRow&) = default;
};

inline SequenceRow row(std::int64_t n) {
  SequenceRow out;
  out.n = n;
  out.z = ineq::z(n);
  out.m = ineq::m(n);
  out.r = ineq::r(n);
  out.c = 2 * n - 2 * out.z + 2;
  out.x = out.z - (out.r + 1) * out.m;
  out.c_minus_m = out.c - out.m;
  out.y_sign = ineq::y_sign(n);
  return out;
}

}  // namespace ineq
