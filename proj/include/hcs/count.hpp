#pragma once

// Exact counters. Search kernels accumulate into a 128-bit fast path and
// spill into an unbounded integer when an addition would wrap.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hcs {

using BigCount = boost::multiprecision::cpp_int;
using u128 = unsigned __int128;

class CountOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool checked_add(u128& acc, u128 v) { return !__builtin_add_overflow(acc, v, &acc); }
inline bool checked_mul(u128& acc, u128 v) { return !__builtin_mul_overflow(acc, v, &acc); }
inline bool checked_add(BigCount& acc, const BigCount& v) {
  acc += v;
  return true;
}
inline bool checked_mul(BigCount& acc, const BigCount& v) {
  acc *= v;
  return true;
}

inline BigCount to_big(u128 v) {
  BigCount r = static_cast<std::uint64_t>(v >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(v);
  return r;
}

std::string to_decimal(const BigCount& v);
std::string to_decimal(u128 v);
// Throws std::invalid_argument on anything but [0-9]+.
BigCount parse_decimal(const std::string& text);

/// Upper limit on the bit width of any reported count. Zero means unbounded.
/// A nonzero limit models a fixed-width counter; exceeding it is a hard error
/// instead of a silent wrap.
class CountLimit {
 public:
  CountLimit() = default;
  explicit CountLimit(unsigned bits) : bits_(bits) {
    if (bits_ != 0 && bits_ < 128) fast_max_ = (u128(1) << bits_) - 1;
  }
  unsigned bits() const { return bits_; }
  bool unbounded() const { return bits_ == 0; }
  void check(u128 v) const {
    if (bits_ != 0 && bits_ < 128 && v > fast_max_) fail();
  }
  void check(const BigCount& v) const {
    if (bits_ != 0 && boost::multiprecision::msb(v) + 1 > bits_ && v != 0) fail();
  }

 private:
  [[noreturn]] void fail() const {
    throw CountOverflow("count exceeds the " + std::to_string(bits_) + "-bit counter limit");
  }
  unsigned bits_ = 0;
  u128 fast_max_ = std::numeric_limits<u128>::max();
};

class Tally {
 public:
  void add(u128 v) {
    if (!checked_add(fast_, v)) {
      // fast_ holds the wrapped sum; carry the lost 2^128 into spill_.
      spill_ += BigCount(1) << 128;
      spilled_ = true;
    }
  }
  void add(const BigCount& v) {
    if (v <= kFastMax) {
      add(static_cast<u128>(v));
    } else {
      spill_ += v;
      spilled_ = true;
    }
  }
  void add(const Tally& other) {
    add(other.fast_);
    if (other.spilled_) {
      spill_ += other.spill_;
      spilled_ = true;
    }
  }
  BigCount value() const { return spilled_ ? spill_ + to_big(fast_) : to_big(fast_); }
  bool is_zero() const { return fast_ == 0 && (!spilled_ || spill_ == 0); }

 private:
  static inline const BigCount kFastMax = to_big(std::numeric_limits<u128>::max());
  u128 fast_ = 0;
  bool spilled_ = false;
  BigCount spill_;
};

/// Dense array of counters (one per vertex or edge) with a sparse overflow map.
class TallyArray {
 public:
  TallyArray() = default;
  explicit TallyArray(std::size_t n) : fast_(n, 0) {}

  std::size_t size() const { return fast_.size(); }
  void add(std::size_t i, u128 v) {
    if (!checked_add(fast_[i], v)) spill_[i] += BigCount(1) << 128;
  }
  void add(std::size_t i, const BigCount& v) {
    static const BigCount kFastMax = to_big(std::numeric_limits<u128>::max());
    if (v <= kFastMax) {
      add(i, static_cast<u128>(v));
    } else {
      spill_[i] += v;
    }
  }
  BigCount value(std::size_t i) const {
    BigCount r = to_big(fast_[i]);
    if (auto it = spill_.find(i); it != spill_.end()) r += it->second;
    return r;
  }
  void merge(const TallyArray& other) {
    for (std::size_t i = 0; i < fast_.size(); ++i) {
      if (other.fast_[i] != 0) add(i, other.fast_[i]);
    }
    for (const auto& [i, v] : other.spill_) spill_[i] += v;
  }
  std::vector<BigCount> values() const {
    std::vector<BigCount> out(fast_.size());
    for (std::size_t i = 0; i < fast_.size(); ++i) out[i] = value(i);
    return out;
  }

 private:
  std::vector<u128> fast_;
  std::unordered_map<std::size_t, BigCount> spill_;
};

}  // namespace hcs
