#pragma once

// Brute-force ground truth. Uses nothing from the engines: only Graph and
// the definitional is_hcs test.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "hcs/count.hpp"
#include "hcs/graph.hpp"
#include "hcs/motif.hpp"

namespace hcs {

class OracleInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  enum class Mode {
    /// Grows sets in ascending id order, extending only sets that are
    /// already valid. Complete because every family here is hereditary.
    hereditary,
    /// Tests every q-subset of V.
    exhaustive,
  };
  Mode mode = Mode::hereditary;
  bool local = true;
  bool collect_sets = false;
  /// Refuse when the number of is_hcs calls would exceed this.
  std::uint64_t max_checks = 200'000'000;
};

struct OracleResult {
  int q_low = 0;
  int q_high = -1;
  std::vector<BigCount> totals;                  // [q - q_low]
  std::vector<std::vector<BigCount>> vertex;     // [q - q_low][v]
  std::vector<std::vector<BigCount>> edge;       // [q - q_low][EdgeId]
  std::vector<std::vector<VertexId>> sets;       // ascending ids, all sizes in range
  std::uint64_t checks = 0;

  const BigCount& total(int q) const { return totals.at(static_cast<std::size_t>(q - q_low)); }
};

OracleResult brute_force_count(const Graph& g, Family family, int s, int q_low, int q_high,
                               const OracleOptions& opts = {});
OracleResult brute_force_count(const Graph& g, const MotifSpec& spec, const OracleOptions& opts = {});

/// Pivot property checked by enumeration: u is a pivot for (R, C1) iff for every
/// H ⊆ C1 with R ∪ H valid, R ∪ H ∪ {u} is valid too.
bool brute_force_pivot_check(const Graph& g, Family family, int s, std::span<const VertexId> r,
                             std::span<const VertexId> c1, VertexId u);

}  // namespace hcs
