#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hcs/engine.hpp"
#include "hcs/graph.hpp"

namespace hcs {

struct RunInfo {
  std::string input;
  LoadStats load;
  std::size_t n = 0;
  std::size_t m = 0;
  int degeneracy = 0;
  MotifSpec spec;
  std::string method;
  bool prune = true;
  int threads = 1;
  double seconds = 0;
};

/// Counts are decimal strings; nothing numeric that could lose precision.
nlohmann::json run_report(const RunInfo& info, const SizeCounts& counts, const SearchStats& stats,
                          std::optional<double> combinatorial_fraction);

/// num/den as a decimal with `digits` fractional digits, rounded half up.
/// nullopt when den is zero.
std::optional<std::string> ratio_decimal(const BigCount& num, const BigCount& den, int digits = 18);
/// num/den in lowest terms, e.g. "3/7".
std::string ratio_exact(const BigCount& num, const BigCount& den);

/// Per-size clique/HCS ratio. Both count vectors must cover the same range.
nlohmann::json hgp_profile(const MotifSpec& spec, const SizeCounts& hcs, const SizeCounts& cliques);

/// `original_id<TAB>count`, ascending original id.
void write_vertex_tsv(std::ostream& out, const Graph& g, const std::vector<BigCount>& counts);
/// `u<TAB>v<TAB>count` with u < v in original ids, sorted by (u, v).
void write_edge_tsv(std::ostream& out, const Graph& g, const std::vector<BigCount>& counts);

/// Peak resident set size of this process in KiB (0 if unavailable).
long peak_rss_kib();

}  // namespace hcs
