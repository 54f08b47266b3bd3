#pragma once

// Exact integer kernel: arbitrary-precision naturals, integer square root,
// powers, and the exact 2^e versus n^k comparator.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ineq {

/// Unsigned arbitrary-precision integer, base 2^32, little-endian limbs.
/// Zero is the empty limb vector; the top limb is never zero.
class Natural {
 public:
  using limb_t = std::uint32_t;

  Natural() = default;

  Natural(std::uint64_t v) {  // NOLINT(google-explicit-constructor)
    while (v != 0) {
      limbs_.push_back(static_cast<limb_t>(v));
      v >>= 32;
    }
  }

  /// Parses a non-empty string of decimal digits.
  static Natural from_string(std::string_view digits) {
    if (digits.empty()) throw std::invalid_argument("Natural: empty string");
    Natural out;
    for (char ch : digits) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("Natural: invalid digit in '" + std::string(digits) + "'");
      out.mul_small(10);
      out.add_small(static_cast<limb_t>(ch - '0'));
    }
    return out;
  }

  /// 2^e.
  static Natural pow2(std::uint64_t e) {
    Natural out;
    out.limbs_.assign(e / 32 + 1, 0);
    out.limbs_.back() = limb_t{1} << (e % 32);
    return out;
  }

  bool is_zero() const noexcept { return limbs_.empty(); }

  std::uint64_t bit_length() const noexcept {
    if (limbs_.empty()) return 0;
    return 32 * (limbs_.size() - 1) + std::bit_width(limbs_.back());
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    // Peel off base-10^9 chunks by short division.
    std::vector<limb_t> work = limbs_;
    std::vector<limb_t> chunks;
    constexpr std::uint64_t kChunk = 1'000'000'000;
    while (!work.empty()) {
      std::uint64_t rem = 0;
      for (auto it = work.rbegin(); it != work.rend(); ++it) {
        std::uint64_t cur = (rem << 32) | *it;
        *it = static_cast<limb_t>(cur / kChunk);
        rem = cur % kChunk;
      }
      chunks.push_back(static_cast<limb_t>(rem));
      while (!work.empty() && work.back() == 0) work.pop_back();
    }
    std::string out = std::to_string(chunks.back());
    for (auto it = chunks.rbegin() + 1; it != chunks.rend(); ++it) {
      std::string part = std::to_string(*it);
      out.append(9 - part.size(), '0');
      out += part;
    }
    return out;
  }

  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Natural& a, const Natural& b) noexcept = default;

  friend Natural operator+(const Natural& a, const Natural& b) {
    const auto& big = a.limbs_.size() >= b.limbs_.size() ? a : b;
    const auto& small = a.limbs_.size() >= b.limbs_.size() ? b : a;
    Natural out;
    out.limbs_.resize(big.limbs_.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.limbs_.size(); ++i) {
      std::uint64_t s = carry + big.limbs_[i] + (i < small.limbs_.size() ? small.limbs_[i] : 0);
      out.limbs_[i] = static_cast<limb_t>(s);
      carry = s >> 32;
    }
    out.limbs_.back() = static_cast<limb_t>(carry);
    out.trim();
    return out;
  }

  /// Throws std::domain_error when b > a.
  friend Natural operator-(const Natural& a, const Natural& b) {
    if (a < b) throw std::domain_error("Natural: subtraction would be negative");
    Natural out = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < out.limbs_.size(); ++i) {
      std::int64_t d = static_cast<std::int64_t>(out.limbs_[i]) - borrow -
                       (i < b.limbs_.size() ? static_cast<std::int64_t>(b.limbs_[i]) : 0);
      borrow = d < 0 ? 1 : 0;
      out.limbs_[i] = static_cast<limb_t>(d + (borrow << 32));
    }
    out.trim();
    return out;
  }

  friend Natural operator*(const Natural& a, const Natural& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Natural out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      const std::uint64_t ai = a.limbs_[i];
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur = ai * b.limbs_[j] + out.limbs_[i + j] + carry;
        out.limbs_[i + j] = static_cast<limb_t>(cur);
        carry = cur >> 32;
      }
      std::size_t k = i + b.limbs_.size();
      while (carry != 0) {
        std::uint64_t cur = out.limbs_[k] + carry;
        out.limbs_[k++] = static_cast<limb_t>(cur);
        carry = cur >> 32;
      }
    }
    out.trim();
    return out;
  }

  Natural& operator+=(const Natural& o) { return *this = *this + o; }
  Natural& operator-=(const Natural& o) { return *this = *this - o; }
  Natural& operator*=(const Natural& o) { return *this = *this * o; }

  friend std::ostream& operator<<(std::ostream& os, const Natural& v) { return os << v.to_string(); }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  void mul_small(limb_t f) {
    std::uint64_t carry = 0;
    for (auto& l : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(l) * f + carry;
      l = static_cast<limb_t>(cur);
      carry = cur >> 32;
    }
    if (carry != 0) limbs_.push_back(static_cast<limb_t>(carry));
    trim();
  }

  void add_small(limb_t v) {
    std::uint64_t carry = v;
    for (std::size_t i = 0; carry != 0; ++i) {
      if (i == limbs_.size()) limbs_.push_back(0);
      std::uint64_t cur = limbs_[i] + carry;
      limbs_[i] = static_cast<limb_t>(cur);
      carry = cur >> 32;
    }
  }

  std::vector<limb_t> limbs_;
};

/// Signed exact integer: a sign and a Natural magnitude. Zero has sign 0.
class Integer {
 public:
  Integer() = default;
  Integer(int sign, Natural magnitude) : sign_(magnitude.is_zero() ? 0 : sign), mag_(std::move(magnitude)) {
    if (sign_ != 0 && sign_ != 1 && sign_ != -1) throw std::invalid_argument("Integer: sign must be -1, 0 or 1");
  }
  Integer(std::int64_t v)  // NOLINT(google-explicit-constructor)
      : sign_(v > 0 ? 1 : (v < 0 ? -1 : 0)),
        mag_(v < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v)) {}

  /// Exact a - b.
  static Integer difference(const Natural& a, const Natural& b) {
    auto ord = a <=> b;
    if (ord == 0) return {};
    if (ord > 0) return {1, a - b};
    return {-1, b - a};
  }

  int sign() const noexcept { return sign_; }
  const Natural& magnitude() const noexcept { return mag_; }

  std::string to_string() const { return (sign_ < 0 ? "-" : "") + mag_.to_string(); }

  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    if (a.sign_ >= 0) return a.mag_ <=> b.mag_;
    return b.mag_ <=> a.mag_;
  }
  friend bool operator==(const Integer& a, const Integer& b) noexcept = default;

  friend std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

 private:
  int sign_ = 0;
  Natural mag_;
};

/// floor(sqrt(v)) by integer Newton iteration from a bit-length guess.
constexpr std::uint64_t isqrt(std::uint64_t v) noexcept {
  if (v < 2) return v;
  // 2^ceil(bits/2) is always >= sqrt(v), so the iteration decreases monotonically.
  std::uint64_t x = std::uint64_t{1} << ((std::bit_width(v) + 1) / 2);
  while (true) {
    std::uint64_t next = (x + v / x) / 2;
    if (next >= x) return x;
    x = next;
  }
}

/// Exact base^exp by square-and-multiply; 0^0 = 1.
inline Natural nat_pow(Natural base, std::uint64_t exp) {
  Natural result{1};
  while (exp != 0) {
    if (exp & 1) result *= base;
    exp >>= 1;
    if (exp != 0) base *= base;
  }
  return result;
}

/// Exact ordering of 2^e against n^k.
///
/// With fast_path set, bit lengths decide whenever they can: for
/// L = bit_width(n) we have 2^((L-1)k) <= n^k < 2^(Lk), with equality on the
/// left only when n is a power of two. Everything else falls through to the
/// big-integer comparison.
inline std::strong_ordering cmp_pow2_vs_pow(std::uint64_t e, std::uint64_t n, std::uint64_t k,
                                            bool fast_path = true) {
  if (fast_path) {
    if (k == 0) return e == 0 ? std::strong_ordering::equal : std::strong_ordering::greater;
    if (n == 0) return std::strong_ordering::greater;
    const std::uint64_t bits = std::bit_width(n);
    if (std::has_single_bit(n)) return e <=> (bits - 1) * k;
    if (e >= bits * k) return std::strong_ordering::greater;
    if (e <= (bits - 1) * k) return std::strong_ordering::less;
  }
  return Natural::pow2(e) <=> nat_pow(Natural{n}, k);
}

}  // namespace ineq
