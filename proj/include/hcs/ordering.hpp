#pragma once

#include <cstdint>
#include <vector>

#include "hcs/graph.hpp"

namespace hcs {

/// Degeneracy ordering from min-degree peeling. order[i] is the i-th vertex
/// removed; rank is the inverse permutation.
struct DegeneracyOrder {
  std::vector<VertexId> order;
  std::vector<std::uint32_t> rank;
  std::vector<std::uint32_t> core_numbers;
  std::uint32_t degeneracy = 0;

  bool precedes(VertexId a, VertexId b) const { return rank[a] < rank[b]; }
  /// |N(v) ∩ {higher-rank vertices}|
  std::size_t out_degree(const Graph& g, VertexId v) const;
};

/// Bucket peeling; among minimum-degree vertices the smallest id goes first.
DegeneracyOrder degeneracy_order(const Graph& g);

}  // namespace hcs
