#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "hcs/graph.hpp"

namespace hcs {

using LocalId = std::uint32_t;

/// Small dense graph on local ids 0..size-1 stored as a bit matrix. Every
/// search runs on one of these, so adjacency tests are a single bit probe.
class LocalGraph {
 public:
  LocalGraph() = default;
  explicit LocalGraph(std::size_t size) { reset(size); }

  void reset(std::size_t size) {
    size_ = size;
    words_ = (size + 63) / 64;
    bits_.assign(size_ * words_, 0);
  }

  std::size_t size() const { return size_; }
  std::size_t words() const { return words_; }

  void add_edge(LocalId a, LocalId b) {
    bits_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
    bits_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
  }
  bool adjacent(LocalId a, LocalId b) const {
    return (bits_[a * words_ + b / 64] >> (b % 64)) & 1u;
  }
  std::span<const std::uint64_t> row(LocalId a) const {
    return {bits_.data() + a * words_, words_};
  }
  std::size_t degree(LocalId a) const {
    std::size_t d = 0;
    for (std::uint64_t w : row(a)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }
  /// |N(a) ∩ set| where set is a bit row of the same width.
  std::size_t degree_within(LocalId a, std::span<const std::uint64_t> set) const {
    std::size_t d = 0;
    const std::uint64_t* r = bits_.data() + a * words_;
    for (std::size_t i = 0; i < words_; ++i) d += static_cast<std::size_t>(std::popcount(r[i] & set[i]));
    return d;
  }

  /// Subgraph induced by `keep` (local ids, ascending), relabelled densely.
  LocalGraph induced(std::span<const LocalId> keep) const;

  bool operator==(const LocalGraph&) const = default;

 private:
  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Bit set over local ids, sized to match a LocalGraph row.
class LocalSet {
 public:
  explicit LocalSet(std::size_t words = 0) : bits_(words, 0) {}
  void resize(std::size_t words) { bits_.assign(words, 0); }
  void insert(LocalId v) { bits_[v / 64] |= std::uint64_t{1} << (v % 64); }
  void erase(LocalId v) { bits_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
  bool contains(LocalId v) const { return (bits_[v / 64] >> (v % 64)) & 1u; }
  void assign(std::span<const LocalId> members) {
    std::fill(bits_.begin(), bits_.end(), 0);
    for (LocalId v : members) insert(v);
  }
  void clear(std::span<const LocalId> members) {
    for (LocalId v : members) erase(v);
  }
  std::span<const std::uint64_t> bits() const { return bits_; }

 private:
  std::vector<std::uint64_t> bits_;
};

}  // namespace hcs
