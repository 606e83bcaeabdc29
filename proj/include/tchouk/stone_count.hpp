// Copyright 2026 The Tchouk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TCHOUK_STONE_COUNT_HPP
#define TCHOUK_STONE_COUNT_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tchouk {

/// Raised whenever an exact computation would leave the 128-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Raised when a configured resource cap (moves, scan length, search size)
/// would be exceeded.
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

__extension__ using uint128_t = unsigned __int128;

/// Non-negative 128-bit integer whose arithmetic throws OverflowError
/// instead of wrapping. Subtraction below zero is also an overflow.
class StoneCount {
 public:
  constexpr StoneCount() = default;
  constexpr StoneCount(std::uint64_t v) : value_(v) {}  // NOLINT: implicit widening is lossless
  static constexpr StoneCount from_raw(uint128_t v) {
    StoneCount s;
    s.value_ = v;
    return s;
  }
  static constexpr StoneCount max() {
    return from_raw(std::numeric_limits<uint128_t>::max());
  }

  [[nodiscard]] constexpr uint128_t raw() const { return value_; }
  [[nodiscard]] constexpr bool is_zero() const { return value_ == 0; }
  [[nodiscard]] constexpr bool fits_u64() const {
    return value_ <= std::numeric_limits<std::uint64_t>::max();
  }
  [[nodiscard]] std::uint64_t to_u64() const {
    if (!fits_u64()) throw OverflowError("stone count " + to_string() + " does not fit in 64 bits");
    return static_cast<std::uint64_t>(value_);
  }
  [[nodiscard]] double to_double() const { return static_cast<double>(value_); }

  friend constexpr bool operator==(StoneCount, StoneCount) = default;
  friend constexpr std::strong_ordering operator<=>(StoneCount a, StoneCount b) {
    return a.value_ <=> b.value_;
  }

  friend StoneCount operator+(StoneCount a, StoneCount b) {
    uint128_t r;
    if (__builtin_add_overflow(a.value_, b.value_, &r)) {
      throw OverflowError("128-bit overflow in " + a.to_string() + " + " + b.to_string());
    }
    return from_raw(r);
  }
  friend StoneCount operator-(StoneCount a, StoneCount b) {
    if (b.value_ > a.value_) {
      throw OverflowError("negative result in " + a.to_string() + " - " + b.to_string());
    }
    return from_raw(a.value_ - b.value_);
  }
  friend StoneCount operator*(StoneCount a, StoneCount b) {
    uint128_t r;
    if (__builtin_mul_overflow(a.value_, b.value_, &r)) {
      throw OverflowError("128-bit overflow in " + a.to_string() + " * " + b.to_string());
    }
    return from_raw(r);
  }
  friend StoneCount operator/(StoneCount a, StoneCount b) {
    if (b.value_ == 0) throw std::domain_error("division by zero");
    return from_raw(a.value_ / b.value_);
  }
  friend StoneCount operator%(StoneCount a, StoneCount b) {
    if (b.value_ == 0) throw std::domain_error("modulo by zero");
    return from_raw(a.value_ % b.value_);
  }
  StoneCount& operator+=(StoneCount o) { return *this = *this + o; }
  StoneCount& operator-=(StoneCount o) { return *this = *this - o; }
  StoneCount& operator*=(StoneCount o) { return *this = *this * o; }

  [[nodiscard]] std::string to_string() const {
    if (value_ == 0) return "0";
    std::string out;
    for (uint128_t v = value_; v != 0; v /= 10) out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    std::reverse(out.begin(), out.end());
    return out;
  }

  /// Parses a non-empty string of decimal digits. Throws std::invalid_argument
  /// on malformed text and OverflowError past 2^128 - 1.
  static StoneCount parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    uint128_t v = 0;
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
      if (__builtin_mul_overflow(v, uint128_t{10}, &v) ||
          __builtin_add_overflow(v, static_cast<uint128_t>(c - '0'), &v)) {
        throw OverflowError("number exceeds 128 bits: " + std::string(text));
      }
    }
    return from_raw(v);
  }

  friend std::ostream& operator<<(std::ostream& os, StoneCount s) { return os << s.to_string(); }

 private:
  uint128_t value_ = 0;
};

inline StoneCount gcd(StoneCount a, StoneCount b) {
  uint128_t x = a.raw(), y = b.raw();
  while (y != 0) {
    uint128_t t = x % y;
    x = y;
    y = t;
  }
  return StoneCount::from_raw(x);
}

inline StoneCount lcm(StoneCount a, StoneCount b) {
  if (a.is_zero() || b.is_zero()) return StoneCount{};
  return a / gcd(a, b) * b;
}

/// Smallest multiple of `k` that is >= `x` (k > 0).
inline StoneCount round_up_to_multiple(StoneCount x, StoneCount k) {
  StoneCount r = x % k;
  return r.is_zero() ? x : x + (k - r);
}

/// lcm(2, 3, ..., upper); 1 when upper < 2.
inline StoneCount lcm_range(std::uint64_t upper) {
  StoneCount acc{1};
  for (std::uint64_t i = 2; i <= upper; ++i) {
    try {
      acc = lcm(acc, StoneCount{i});
    } catch (const OverflowError&) {
      throw OverflowError("lcm(2.." + std::to_string(upper) + ") exceeds 128 bits; the largest representable is lcm(2.." +
                          std::to_string(i - 1) + ")");
    }
  }
  return acc;
}

}  // namespace tchouk

#endif  // TCHOUK_STONE_COUNT_HPP
