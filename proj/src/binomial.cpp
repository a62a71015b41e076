#include "hcs/binomial.hpp"

namespace hcs {

void BinomialTable::grow(int max_n, int max_k) {
  max_n_ = max_n;
  max_k_ = max_k;
  const std::size_t rows = static_cast<std::size_t>(max_n_) + 1;
  const std::size_t cols = static_cast<std::size_t>(max_k_) + 1;
  big_.assign(rows * cols, BigCount(0));
  fast_.assign(rows * cols, 0);
  fits_.assign(rows * cols, 1);
  for (int n = 0; n <= max_n_; ++n) {
    big_[index(n, 0)] = 1;
    fast_[index(n, 0)] = 1;
    for (int k = 1; k <= std::min(n, max_k_); ++k) {
      const auto i = index(n, k);
      big_[i] = big_[index(n - 1, k - 1)] + big_[index(n - 1, k)];
      const auto a = index(n - 1, k - 1), b = index(n - 1, k);
      u128 v = fast_[a];
      const bool ok = fits_[a] && fits_[b] && checked_add(v, fast_[b]);
      fits_[i] = ok;
      fast_[i] = ok ? v : 0;
    }
  }
}

namespace {

template <class Num>
bool binom(BinomialTable& t, int n, int k, Num& out);

template <>
bool binom<u128>(BinomialTable& t, int n, int k, u128& out) {
  return t.fast(n, k, out);
}

template <>
bool binom<BigCount>(BinomialTable& t, int n, int k, BigCount& out) {
  out = t.big(n, k);
  return true;
}

}  // namespace

template <class Num>
bool SubsetCounter::run(std::span<const int> classes, int budget, int k, Num& out, std::vector<Num>& dp,
                        std::vector<Num>& next) {
  out = 0;
  if (k < 0 || budget < 0) return true;
  const int heaviest = std::min<int>(budget, static_cast<int>(classes.size()) - 1);
  const std::size_t cols = static_cast<std::size_t>(budget) + 1;
  const std::size_t cells = static_cast<std::size_t>(k + 1) * cols;
  dp.assign(cells, Num(0));
  dp[0] = 1;
  auto at = [cols](int j, int b) { return static_cast<std::size_t>(j) * cols + static_cast<std::size_t>(b); };

  for (int w = 1; w <= heaviest; ++w) {
    const int c = classes[static_cast<std::size_t>(w)];
    if (c == 0) continue;
    next.assign(cells, Num(0));
    for (int j = 0; j <= k; ++j) {
      for (int b = 0; b <= budget; ++b) {
        const Num& base = dp[at(j, b)];
        if (base == 0) continue;
        const int t_max = std::min({c, k - j, (budget - b) / w});
        for (int t = 0; t <= t_max; ++t) {
          Num term;
          if (!binom(table_, c, t, term)) return false;
          if (!checked_mul(term, base)) return false;
          if (!checked_add(next[at(j + t, b + t * w)], term)) return false;
        }
      }
    }
    dp.swap(next);
  }

  const int zero_class = classes.empty() ? 0 : classes[0];
  for (int j = 0; j <= k; ++j) {
    for (int b = 0; b <= budget; ++b) {
      const Num& base = dp[at(j, b)];
      if (base == 0) continue;
      Num term;
      if (!binom(table_, zero_class, k - j, term)) return false;
      if (!checked_mul(term, base)) return false;
      if (!checked_add(out, term)) return false;
    }
  }
  return true;
}

bool SubsetCounter::count_fast(std::span<const int> classes, int budget, int k, u128& out) {
  return run(classes, budget, k, out, dp_fast_, next_fast_);
}

BigCount SubsetCounter::count(std::span<const int> classes, int budget, int k) {
  u128 fast = 0;
  if (count_fast(classes, budget, k, fast)) return to_big(fast);
  BigCount out;
  run(classes, budget, k, out, dp_big_, next_big_);
  return out;
}

std::vector<int> weight_classes(std::span<const int> weights, int budget) {
  std::vector<int> classes(static_cast<std::size_t>(std::max(budget, 0)) + 1, 0);
  for (int w : weights) {
    if (w >= 0 && w <= budget) ++classes[static_cast<std::size_t>(w)];
  }
  return classes;
}

BigCount count_budgeted_subsets(std::span<const int> weights, int budget, int k) {
  if (budget < 0 || k < 0) return 0;
  BinomialTable table(static_cast<int>(weights.size()) + 1, k + 1);
  SubsetCounter counter(table);
  auto classes = weight_classes(weights, budget);
  return counter.count(classes, budget, k);
}

}  // namespace hcs
