#pragma once

#include <functional>
#include <span>

#include "hcs/engine.hpp"
#include "hcs/graph.hpp"
#include "hcs/ordering.hpp"

namespace hcs {

/// Outcome of a listing run for a single size q.
struct ListRun {
  MotifSpec spec;
  bool prune = true;
  BigCount count;
  SearchStats stats;
};

/// Backtracking count: every HCS is grown from its lowest-rank vertex and
/// counted once. At |R| = q-1 the remaining candidates are added in bulk.
/// Requires spec.q_low == spec.q_high.
ListRun count_by_listing(const Graph& g, const DegeneracyOrder& ord, const MotifSpec& spec,
                         const EngineOptions& opts = {});

/// Receives each result as ascending dense vertex ids.
using SetSink = std::function<void(std::span<const VertexId>)>;

/// Same recursion as count_by_listing, emitting every size-q HCS. Serial.
ListRun enumerate_by_listing(const Graph& g, const DegeneracyOrder& ord, const MotifSpec& spec,
                             const SetSink& sink, const EngineOptions& opts = {});

}  // namespace hcs
