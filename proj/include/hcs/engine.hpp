#pragma once

// Types shared by the listing and pivot counters.

#include <cstdint>
#include <vector>

#include "hcs/count.hpp"
#include "hcs/motif.hpp"

namespace hcs {

struct EngineOptions {
  /// Candidate reduction plus branch bounds. Off is for A/B checks.
  bool prune = true;
  /// 1 runs the serial driver (canonical recursion order). 0 means all
  /// available threads.
  int threads = 1;
  /// Added to every branch bound before comparing with q. Nonzero values
  /// exist only for fault-injection tests.
  int bound_bias = 0;
  CountLimit limit;
};

struct SearchStats {
  std::uint64_t roots = 0;
  std::uint64_t nodes = 0;
  std::uint64_t branches = 0;         // recursive branches considered
  std::uint64_t pruned_branches = 0;  // of which cut by γ_d / γ_p
  std::uint64_t pivots = 0;           // nodes that found a pivot vertex
  std::uint64_t pivot_fallbacks = 0;  // plex nodes without a qualifying pivot
  std::uint64_t leaves = 0;           // C = ∅ leaves
  std::uint64_t closures = 0;         // |R| = q-1 cut-offs
  std::uint64_t candidates_before = 0;  // Σ |N⃗(v) ∪ N⃗₂(v)|
  std::uint64_t candidates_after = 0;   // Σ reduced candidate counts

  /// (c_pre - c_now) / c_pre, or 0 when there were no candidates.
  double reduction_rate() const {
    return candidates_before == 0 ? 0.0
                                  : static_cast<double>(candidates_before - candidates_after) /
                                        static_cast<double>(candidates_before);
  }
  void merge(const SearchStats& o);
};

/// Exact counts for every size in [q_low, q_high].
struct SizeCounts {
  int q_low = 0;
  int q_high = -1;
  std::vector<BigCount> by_size;

  SizeCounts() = default;
  SizeCounts(int lo, int hi) : q_low(lo), q_high(hi), by_size(static_cast<std::size_t>(hi - lo + 1)) {}
  const BigCount& at(int q) const { return by_size.at(static_cast<std::size_t>(q - q_low)); }
  BigCount& at(int q) { return by_size.at(static_cast<std::size_t>(q - q_low)); }
  BigCount total() const;
  bool operator==(const SizeCounts&) const = default;
};

inline int effective_s(const MotifSpec& spec) { return spec.family == Family::clique ? 0 : spec.s; }

}  // namespace hcs
