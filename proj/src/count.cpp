#include "hcs/count.hpp"

#include <algorithm>

namespace hcs {

std::string to_decimal(const BigCount& v) { return v.str(); }

std::string to_decimal(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

BigCount parse_decimal(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a decimal count: '" + text + "'");
  }
  return BigCount(text);
}

}  // namespace hcs
