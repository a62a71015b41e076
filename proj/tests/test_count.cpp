#include <doctest.h>

#include <limits>

#include "hcs/count.hpp"

using namespace hcs;

TEST_CASE("decimal round trip") {
  const BigCount big = BigCount(1) << 200;
  CHECK(parse_decimal(to_decimal(big)) == big);
  CHECK(to_decimal(BigCount(0)) == "0");
  const u128 max = std::numeric_limits<u128>::max();
  CHECK(to_decimal(max) == "340282366920938463463374607431768211455");
  CHECK(parse_decimal("340282366920938463463374607431768211455") == to_big(max));
  CHECK_THROWS_AS(parse_decimal("12a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("-5"), std::invalid_argument);
}

TEST_CASE("tally spills past 128 bits") {
  const u128 max = std::numeric_limits<u128>::max();
  Tally t;
  t.add(max);
  t.add(max);
  t.add(u128{2});
  CHECK(t.value() == to_big(max) * 2 + 2);
  Tally other;
  other.add(BigCount(1) << 300);
  t.add(other);
  CHECK(t.value() == to_big(max) * 2 + 2 + (BigCount(1) << 300));
  CHECK(Tally{}.is_zero());
}

TEST_CASE("tally array spills and merges") {
  const u128 max = std::numeric_limits<u128>::max();
  TallyArray a(3), b(3);
  a.add(1, max);
  b.add(1, max);
  b.add(2, BigCount(1) << 140);
  a.merge(b);
  CHECK(a.value(1) == to_big(max) * 2);
  CHECK(a.value(2) == (BigCount(1) << 140));
  CHECK(a.value(0) == 0);
}

TEST_CASE("count limit") {
  CountLimit unbounded;
  CHECK_NOTHROW(unbounded.check(BigCount(1) << 500));
  CountLimit l64(64);
  CHECK_NOTHROW(l64.check(to_big(std::numeric_limits<std::uint64_t>::max())));
  CHECK_THROWS_AS(l64.check(BigCount(1) << 64), CountOverflow);
  CHECK_THROWS_AS(l64.check(u128{1} << 64), CountOverflow);
  CHECK_NOTHROW(l64.check(u128{12345}));
}
