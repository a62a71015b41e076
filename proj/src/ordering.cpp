#include "hcs/ordering.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace hcs {

std::size_t DegeneracyOrder::out_degree(const Graph& g, VertexId v) const {
  std::size_t d = 0;
  for (VertexId w : g.neighbors(v)) d += rank[w] > rank[v];
  return d;
}

DegeneracyOrder degeneracy_order(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DegeneracyOrder out;
  out.order.reserve(n);
  out.rank.assign(n, 0);
  out.core_numbers.assign(n, 0);
  if (n == 0) return out;

  std::vector<std::uint32_t> deg(n);
  std::uint32_t max_deg = 0;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.degree(v));
    max_deg = std::max(max_deg, deg[v]);
  }

  // One min-heap of ids per degree value. Entries go stale when a vertex's
  // degree drops; they are skipped on pop.
  using MinHeap = std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>>;
  std::vector<MinHeap> buckets(max_deg + 1);
  for (VertexId v = 0; v < n; ++v) buckets[deg[v]].push(v);

  std::vector<char> removed(n, 0);
  std::uint32_t current = 0;
  std::uint32_t core = 0;
  for (std::size_t i = 0; i < n; ++i) {
    VertexId v = kNoVertex;
    while (v == kNoVertex) {
      while (buckets[current].empty()) ++current;
      VertexId cand = buckets[current].top();
      buckets[current].pop();
      if (!removed[cand] && deg[cand] == current) v = cand;
    }
    removed[v] = 1;
    core = std::max(core, current);
    out.core_numbers[v] = core;
    out.rank[v] = static_cast<std::uint32_t>(i);
    out.order.push_back(v);
    for (VertexId w : g.neighbors(v)) {
      if (removed[w]) continue;
      --deg[w];
      buckets[deg[w]].push(w);
      if (deg[w] < current) current = deg[w];
    }
  }
  out.degeneracy = core;
  return out;
}

}  // namespace hcs
