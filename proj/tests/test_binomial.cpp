#include <doctest.h>

#include <random>

#include "hcs/binomial.hpp"

using namespace hcs;

namespace {

BigCount enumerate(const std::vector<int>& w, int budget, int k) {
  BigCount n = 0;
  for (unsigned mask = 0; mask < (1u << w.size()); ++mask) {
    if (std::popcount(mask) != k) continue;
    int sum = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (mask >> i & 1u) sum += w[i];
    }
    n += sum <= budget;
  }
  return n;
}

}  // namespace

TEST_CASE("pascal table") {
  BinomialTable t(10, 5);
  CHECK(t.big(5, 2) == 10);
  CHECK(t.big(3, 5) == 0);
  CHECK(t.big(3, -1) == 0);
  CHECK(t.big(200, 100) == t.big(199, 99) + t.big(199, 100));
  for (int n = 0; n < 40; ++n) {
    CHECK(t.big(n, 0) == 1);
    CHECK(t.big(n, n) == 1);
  }
  u128 out = 0;
  CHECK(t.fast(60, 30, out));
  CHECK(to_big(out) == t.big(60, 30));
  CHECK(!t.fast(200, 100, out));
}

TEST_CASE("knapsack: worked example") {
  CHECK(count_budgeted_subsets(std::vector<int>{0, 0, 1, 1}, 1, 3) == 2);
}

TEST_CASE("knapsack: zero weights reduce to binomials") {
  BinomialTable t;
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      CHECK(count_budgeted_subsets(std::vector<int>(static_cast<std::size_t>(n), 0), 3, k) == t.big(n, k));
    }
  }
}

TEST_CASE("knapsack: 1000 random instances vs subset enumeration") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const int n = static_cast<int>(rng() % 13);
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int& x : w) x = static_cast<int>(rng() % 4);
    const int budget = static_cast<int>(rng() % 6);
    const int k = static_cast<int>(rng() % 14);
    CHECK(count_budgeted_subsets(w, budget, k) == enumerate(w, budget, k));
  }
}

TEST_CASE("knapsack: 128-bit path falls back to exact") {
  BinomialTable t;
  SubsetCounter c(t);
  std::vector<int> classes{300, 0, 10};
  u128 fast = 0;
  CHECK(!c.count_fast(classes, 2, 150, fast));
  CHECK(c.count(classes, 2, 150) == t.big(300, 150) + BigCount(10) * t.big(300, 149));
}
