#pragma once

// Exhaustive exact checks of the sign classifications of x(n) and y(n), of
// the supporting lemmas, and of the printed tables.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "golden.hpp"
#include "intervals.hpp"
#include "report.hpp"
#include "sequences.hpp"

namespace ineq {

struct SignRun {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  int sign = 0;
  friend bool operator==(const SignRun&, const SignRun&) = default;
};

/// Maximal constant-sign runs covering [1, limit].
struct SignPartition {
  std::int64_t limit = 0;
  std::vector<SignRun> runs;

  /// Runs of the given sign, in ascending order.
  std::vector<SignRun> with_sign(int sign) const {
    std::vector<SignRun> out;
    std::copy_if(runs.begin(), runs.end(), std::back_inserter(out), [sign](const SignRun& r) { return r.sign == sign; });
    return out;
  }

  int sign_at(std::int64_t n) const {
    auto it = std::upper_bound(runs.begin(), runs.end(), n, [](std::int64_t v, const SignRun& r) { return v < r.lo; });
    if (it == runs.begin() || n > limit) throw std::out_of_range("SignPartition: n outside [1, limit]");
    return std::prev(it)->sign;
  }
};

inline SignPartition partition_by(std::int64_t limit, const std::function<int(std::int64_t)>& sign_of) {
  if (limit < 1) throw std::invalid_argument("partition limit must be >= 1");
  SignPartition out{limit, {}};
  for (std::int64_t n = 1; n <= limit; ++n) {
    int s = sign_of(n);
    if (!out.runs.empty() && out.runs.back().sign == s) {
      out.runs.back().hi = n;
    } else {
      out.runs.push_back({n, n, s});
    }
  }
  return out;
}

inline SignPartition partition_x(std::int64_t limit) {
  return partition_by(limit, [](std::int64_t n) {
    auto v = x(n);
    return v < 0 ? -1 : (v > 0 ? 1 : 0);
  });
}

inline SignPartition partition_y(std::int64_t limit) {
  return partition_by(limit, [](std::int64_t n) { return y_sign(n); });
}

inline std::string format_runs(std::span<const SignRun> runs) {
  if (runs.empty()) return "{}";
  std::string out;
  for (const auto& r : runs) {
    if (!out.empty()) out += " u ";
    out += r.lo == r.hi ? "{" + std::to_string(r.lo) + "}" : "[" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]";
  }
  return out;
}

/// Range of y over [u, v] when m(u) = m(v): (a(u) - b(v), a(v) - b(u)).
inline std::pair<Integer, Integer> y_range_bound(std::int64_t u, std::int64_t v) {
  if (u > v) throw std::invalid_argument("y_range_bound: need u <= v");
  if (m(u) != m(v))
    throw std::invalid_argument("y_range_bound: m(" + std::to_string(u) + ") != m(" + std::to_string(v) + ")");
  return {Integer::difference(a(u), b(v)), Integer::difference(a(v), b(u))};
}

namespace detail {

template <std::size_t N>
int expected_sign(std::int64_t n, const std::array<golden::Run, N>& negative, std::span<const std::int64_t> zeros) {
  if (std::find(zeros.begin(), zeros.end(), n) != zeros.end()) return 0;
  for (const auto& r : negative)
    if (r.lo <= n && n <= r.hi) return -1;
  return 1;
}

inline std::string describe_partition(const SignPartition& p) {
  return "negative " + format_runs(p.with_sign(-1)) + "; zero " + format_runs(p.with_sign(0)) + "; positive " +
         format_runs(p.with_sign(1));
}

}  // namespace detail

/// Sign classification of x(n) over [1, limit] against the printed sets.
/// Complete coverage of the printed zero set needs limit >= 547.
inline VerificationReport check_theorem1(std::int64_t limit) {
  const auto part = partition_x(limit);
  ClaimScan scan("theorem_1_1", 1, limit);
  for (std::int64_t n = 1; n <= limit; ++n) {
    const int want = detail::expected_sign(n, golden::kXNegative, golden::kXZero);
    const int got = part.sign_at(n);
    if (want != got) scan.fail(n, "sign(x) = " + std::to_string(got) + ", printed " + std::to_string(want));
  }
  return scan.finish(detail::describe_partition(part));
}

/// Sign classification of y(n) over [1, limit] against the printed sets.
inline VerificationReport check_theorem2(std::int64_t limit) {
  const auto part = partition_y(limit);
  ClaimScan scan("theorem_2_8", 1, limit);
  for (std::int64_t n = 1; n <= limit; ++n) {
    const int want = detail::expected_sign(n, golden::kYNegative, {});
    const int got = part.sign_at(n);
    if (want != got) scan.fail(n, "sign(y) = " + std::to_string(got) + ", printed " + std::to_string(want));
  }
  std::string details = detail::describe_partition(part);
  if (limit >= 350) {
    details += part.sign_at(338) < 0 && part.sign_at(350) < 0
                   ? "; proof step (vii) text says y>0 on [338,350], scan agrees with the statement (y<0)"
                   : "; proof step (vii) text says y>0 on [338,350]";
  }
  return scan.finish(std::move(details));
}

/// c - m >= 2 everywhere, = 2 only at n = 2, and >= 5 from n = 10 on.
inline VerificationReport check_lemma12(std::int64_t limit) {
  ClaimScan scan("lemma_1_2", 1, limit);
  std::int64_t min_gap = INT64_MAX;
  for (std::int64_t n = 1; n <= limit; ++n) {
    const std::int64_t gap = c(n) - m(n);
    min_gap = std::min(min_gap, gap);
    if (gap < 2) scan.fail(n, "c-m = " + std::to_string(gap));
    if (gap == 2 && n != 2) scan.fail(n, "c-m = 2 away from n = 2");
    if (n >= 10 && gap < 5) scan.fail(n, "c-m = " + std::to_string(gap) + " < 5");
  }
  if (limit >= 2 && c(2) - m(2) != 2) scan.fail(2, "c-m != 2 at n = 2");
  return scan.finish("min(c-m) = " + std::to_string(min_gap) + " attained only at n=2; c-m >= 5 for n >= 10");
}

/// Range bounds for y on intervals of constant m, and strict decrease of y
/// between neighbours sharing both m and c.
inline VerificationReport check_lemma24(std::int64_t limit) {
  ClaimScan scan("lemma_2_4", 1, limit);
  std::int64_t intervals = 0, decided_negative = 0, decided_positive = 0, steps = 0;
  // (i)-(iii) on every maximal m-interval and every maximal (m, r)-interval inside [1, limit].
  auto check_interval = [&](std::int64_t u, std::int64_t v) {
    ++intervals;
    const auto [low, high] = y_range_bound(u, v);
    const bool all_negative = high.sign() < 0;
    const bool all_positive = low.sign() > 0;
    decided_negative += all_negative;
    decided_positive += all_positive;
    for (std::int64_t n = u; n <= v; ++n) {
      const Integer y = y_value(n);
      if (y < low || y > high) scan.fail(n, "y outside [a(u)-b(v), a(v)-b(u)]");
      if (all_negative && y_sign(n) != -1) scan.fail(n, "interval bound negative but y >= 0");
      if (all_positive && y_sign(n) != 1) scan.fail(n, "interval bound positive but y <= 0");
    }
  };
  for (std::int64_t lo = 1; lo <= limit;) {
    const auto d = d_bounds(lo);
    if (d.hi > limit) break;
    check_interval(d.lo, d.hi);
    lo = d.hi + 1;
  }
  for (std::int64_t lo = 1; lo <= limit;) {
    const auto f = f_bounds(lo);
    if (f.hi > limit) break;
    check_interval(f.lo, f.hi);
    lo = f.hi + 1;
  }
  // (iv)
  for (std::int64_t n = 1; n < limit; ++n) {
    if (m(n + 1) != m(n) || c(n + 1) != c(n)) continue;
    ++steps;
    if (!(y_value(n + 1) < y_value(n))) scan.fail(n, "y(n+1) >= y(n) with equal m and c");
  }
  std::ostringstream det;
  det << intervals << " intervals bounded (" << decided_negative << " decided negative, " << decided_positive
      << " decided positive); " << steps << " equal-c steps strictly decreasing";
  return scan.finish(det.str());
}

/// Power-comparison sign criteria with s = r(n), t = m(n).
inline VerificationReport check_L5(std::int64_t limit) {
  ClaimScan scan("lemma_2_5", 1, limit);
  std::int64_t hits_neg = 0, hits_pos = 0;
  for (std::int64_t n = 1; n <= limit; ++n) {
    const std::int64_t s = r(n), t = m(n), cn = c(n);
    if (cn <= s * (t - 1) + 1) {
      ++hits_neg;
      if (y_sign(n) != -1) scan.fail(n, "c <= s(t-1)+1 but y >= 0");
    }
    if (cn > s * (t - 1) + t) {
      ++hits_pos;
      if (y_sign(n) != 1) scan.fail(n, "c > s(t-1)+t but y <= 0");
    }
  }
  return scan.finish("criterion (i) applied at " + std::to_string(hits_neg) + " n, criterion (ii) at " +
                     std::to_string(hits_pos) + " n");
}

/// y(n) <= 0 implies x(n) <= -r(n) - 3 <= -6.
inline VerificationReport check_L2(std::int64_t limit) {
  ClaimScan scan("lemma_2_6", 1, limit);
  std::int64_t tested = 0;
  for (std::int64_t n = 1; n <= limit; ++n) {
    if (y_sign(n) > 0) continue;
    ++tested;
    const std::int64_t bound = -r(n) - 3;
    if (x(n) > bound) scan.fail(n, "x = " + std::to_string(x(n)) + " > -r-3 = " + std::to_string(bound));
    if (bound > -6) scan.fail(n, "-r-3 = " + std::to_string(bound) + " > -6");
  }
  return scan.finish(std::to_string(tested) + " n with y <= 0 tested");
}

/// y(n) > 0 on [404, limit].
inline VerificationReport check_P1(std::int64_t limit) {
  ClaimScan scan("proposition_2_7", golden::kYPositiveFrom, limit);
  for (std::int64_t n = golden::kYPositiveFrom; n <= limit; ++n)
    if (y_sign(n) != 1) scan.fail(n, "y <= 0");
  return scan.finish(limit >= golden::kYPositiveFrom ? "y > 0 throughout" : "empty range");
}

/// Small-n table: x, c - m and exact y for n = 1..16.
inline std::vector<VerificationReport> check_exercise_table() {
  ClaimScan scan("exercise_1_1", 1, 16);
  std::vector<VerificationReport> errata;
  std::int64_t matched = 0;
  for (const auto& col : golden::kExerciseTable) {
    const auto n = col.n;
    const std::string x_id = "exercise_1_1.x" + std::to_string(n);
    if (x(n) != col.x) {
      const bool known = std::any_of(golden::kErrata.begin(), golden::kErrata.end(),
                                     [&](const golden::Erratum& e) { return e.id == x_id; });
      if (known) {
        errata.push_back(known_erratum(x_id, n, n, "x(" + std::to_string(n) + ") misprinted", std::to_string(col.x),
                                       std::to_string(x(n))));
      } else {
        scan.fail(n, "x = " + std::to_string(x(n)) + ", printed " + std::to_string(col.x));
      }
    } else {
      ++matched;
    }
    if (c(n) - m(n) != col.c_minus_m)
      scan.fail(n, "c-m = " + std::to_string(c(n) - m(n)) + ", printed " + std::to_string(col.c_minus_m));
    const Integer y = y_value(n);
    if (y != Integer{col.y}) scan.fail(n, "y = " + y.to_string() + ", printed " + std::to_string(col.y));
    if (y.sign() != y_sign(n)) scan.fail(n, "sign(y) disagrees with comparator");
  }
  std::vector<VerificationReport> out{scan.finish(
      "c-m and y match at all 16 columns; x matches at " + std::to_string(matched) + " of 16")};
  out.insert(out.end(), errata.begin(), errata.end());
  return out;
}

/// The 41 printed maximal (m, r) intervals.
inline std::vector<VerificationReport> check_interval_table() {
  const auto& printed = golden::kIntervalTable;
  const auto computed = interval_table(printed.back().lo);
  ClaimScan scan("construction_2_2", 1, printed.back().hi);
  std::vector<VerificationReport> errata;
  if (computed.size() != printed.size())
    scan.fail(static_cast<std::int64_t>(computed.size()), "computed interval count differs from 41");
  std::int64_t exact = 0;
  for (std::size_t i = 0; i < std::min(computed.size(), printed.size()); ++i) {
    const auto& p = printed[i];
    const auto& q = computed[i];
    bool row_ok = true;
    auto mismatch = [&](const std::string& field, std::int64_t want, std::int64_t got) {
      row_ok = false;
      const std::string id = "construction_2_2.item" + std::to_string(p.index) + "." + field;
      const bool known = std::any_of(golden::kErrata.begin(), golden::kErrata.end(),
                                     [&](const golden::Erratum& e) { return e.id == id; });
      if (known) {
        errata.push_back(known_erratum(id, q.lo, q.hi, "item " + std::to_string(p.index) + " " + field + " misprinted",
                                       std::to_string(want), std::to_string(got)));
      } else {
        scan.fail(q.lo, "item " + std::to_string(p.index) + " " + field + " = " + std::to_string(got) + ", printed " +
                            std::to_string(want));
      }
    };
    if (q.lo != p.lo) mismatch("lo", p.lo, q.lo);
    if (q.hi != p.hi) mismatch("hi", p.hi, q.hi);
    if (q.r_const != p.r) mismatch("r", p.r, q.r_const);
    if (q.m_const != p.m) mismatch("m", p.m, q.m_const);
    if (q.x_lo != p.x_lo) mismatch("x_lo", p.x_lo, q.x_lo);
    if (q.x_hi != p.x_hi) mismatch("x_hi", p.x_hi, q.x_hi);
    exact += row_ok;
  }
  std::vector<VerificationReport> out{
      scan.finish(std::to_string(exact) + " of 41 items match on range, r, m and x-range")};
  out.insert(out.end(), errata.begin(), errata.end());
  return out;
}

}  // namespace ineq
