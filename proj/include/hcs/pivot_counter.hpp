#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcs/engine.hpp"
#include "hcs/graph.hpp"
#include "hcs/local_graph.hpp"
#include "hcs/ordering.hpp"

namespace hcs {

/// Split of a candidate set. With a pivot, C1 = N(pivot) ∩ C and C2 excludes
/// the pivot; without one (plex only), C1 = N(branch) ∩ C and C2 = C \ C1.
struct PivotDecision {
  std::optional<LocalId> pivot;
  LocalId branch = 0;  // max-degree vertex of G(C); equals *pivot when present
  std::vector<LocalId> c1;
  std::vector<LocalId> c2;
};

struct PivotScratch {
  LocalSet members;
  std::vector<std::size_t> degree;
  std::vector<int> outside;  // m̄(w, R ∪ C) for w ∈ R
};

/// Max-degree vertex of G(C) (smallest id on ties) is always a pivot.
PivotDecision select_pivot_dclique(const DcliqueState& st, std::span<const LocalId> c, PivotScratch& scratch);
PivotDecision select_pivot_dclique(const DcliqueState& st, std::span<const LocalId> c);

/// u qualifies iff every w ∈ R \ N(u) has m̄(w, R ∪ C) <= s - 1. The pivot
/// is the max-degree qualifier; if none qualifies there is no pivot.
PivotDecision select_pivot_plex(const PlexState& st, std::span<const LocalId> c, PivotScratch& scratch);
PivotDecision select_pivot_plex(const PlexState& st, std::span<const LocalId> c);
/// All qualifiers, ascending.
std::vector<LocalId> plex_pivot_qualifiers(const PlexState& st, std::span<const LocalId> c);

struct PivotRun {
  SizeCounts counts;
  SearchStats stats;
  BigCount combinatorial;  // credited at C = ∅ leaves
  BigCount closed;         // credited at |R| = q_high - 1 cut-offs

  /// Share of results counted in combination rather than by closure.
  double combinatorial_fraction() const;
};

/// One traversal counts every size in [q_low, q_high].
PivotRun count_by_pivot(const Graph& g, const DegeneracyOrder& ord, const MotifSpec& spec,
                        const EngineOptions& opts = {});

enum class Granularity { vertex, edge };

Granularity parse_granularity(const std::string& name);
std::string to_string(Granularity g);

/// c_u (indexed by dense vertex id) or c_e (indexed by EdgeId) for each q.
struct LocalCounts {
  Granularity granularity = Granularity::vertex;
  SizeCounts totals;
  std::vector<std::vector<BigCount>> by_size;
  SearchStats stats;

  const std::vector<BigCount>& at(int q) const {
    return by_size.at(static_cast<std::size_t>(q - totals.q_low));
  }
};

LocalCounts count_local(const Graph& g, const DegeneracyOrder& ord, const MotifSpec& spec,
                        Granularity granularity, const EngineOptions& opts = {});

/// Test facility: expands every credit into explicit sets. `path` records
/// the branch kinds taken from the root ('1' = L1, '2' = L2, '3' = L3, then
/// 'c' for a cut-off or 'l' for a leaf). Serial; also asserts that D is a
/// clique in every dclique node.
using PathSink = std::function<void(std::span<const VertexId> set, const std::string& path)>;
PivotRun enumerate_by_pivot(const Graph& g, const DegeneracyOrder& ord, const MotifSpec& spec,
                            const PathSink& sink, const EngineOptions& opts = {});

}  // namespace hcs
