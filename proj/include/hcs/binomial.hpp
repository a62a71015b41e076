#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "hcs/count.hpp"

namespace hcs {

/// Pascal table of C(n, k), grown on demand. Each entry is kept as an
/// unbounded integer plus a 128-bit copy when it fits.
class BinomialTable {
 public:
  explicit BinomialTable(int max_n = 64, int max_k = 16) { grow(max_n, max_k); }

  /// C(n, k); zero when k < 0 or k > n.
  BigCount big(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    ensure(n, k);
    return big_[index(n, k)];
  }
  /// False when C(n, k) does not fit in 128 bits.
  bool fast(int n, int k, u128& out) {
    if (k < 0 || n < 0 || k > n) {
      out = 0;
      return true;
    }
    ensure(n, k);
    const auto i = index(n, k);
    out = fast_[i];
    return fits_[i] != 0;
  }
  void ensure(int n, int k) {
    if (n > max_n_ || k > max_k_) grow(std::max(n, max_n_ * 2), std::max(k, max_k_));
  }
  int max_n() const { return max_n_; }
  int max_k() const { return max_k_; }

 private:
  std::size_t index(int n, int k) const {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(max_k_ + 1) + static_cast<std::size_t>(k);
  }
  void grow(int max_n, int max_k);

  int max_n_ = -1;
  int max_k_ = -1;
  std::vector<BigCount> big_;
  std::vector<u128> fast_;
  std::vector<char> fits_;
};

/// Counts k-subsets of a multiset of items whose weights sum to at most a
/// budget. Items are grouped by weight: classes[w] is the number of items of
/// weight w (w = 0..classes.size()-1). This is the 0-1 knapsack counting DP
/// over (items taken, weight used), processed one weight class at a time.
class SubsetCounter {
 public:
  explicit SubsetCounter(BinomialTable& table) : table_(table) {}

  BigCount count(std::span<const int> classes, int budget, int k);
  /// 128-bit path; false if any intermediate would overflow.
  bool count_fast(std::span<const int> classes, int budget, int k, u128& out);

  BinomialTable& table() { return table_; }

 private:
  template <class Num>
  bool run(std::span<const int> classes, int budget, int k, Num& out, std::vector<Num>& dp,
           std::vector<Num>& next);

  BinomialTable& table_;
  std::vector<u128> dp_fast_, next_fast_;
  std::vector<BigCount> dp_big_, next_big_;
};

/// Number of k-subsets H of the items with Σ weights(H) <= budget.
BigCount count_budgeted_subsets(std::span<const int> weights, int budget, int k);

/// Groups weights into classes 0..budget; heavier items are dropped since
/// they can never be chosen.
std::vector<int> weight_classes(std::span<const int> weights, int budget);

}  // namespace hcs
