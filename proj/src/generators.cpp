#include "hcs/generators.hpp"

#include <random>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hcs {

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph cocktail_party(std::size_t k) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  const auto n = static_cast<VertexId>(2 * k);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (u / 2 != v / 2) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph preferential_attachment(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> ends;
  const std::size_t start = std::min(n, m + 1);
  for (VertexId u = 0; u < start; ++u) {
    for (VertexId v = u + 1; v < start; ++v) {
      edges.emplace_back(u, v);
      ends.push_back(u);
      ends.push_back(v);
    }
  }
  std::unordered_set<VertexId> picked;
  for (auto u = static_cast<VertexId>(start); u < n; ++u) {
    picked.clear();
    std::uniform_int_distribution<std::size_t> pick(0, ends.size() - 1);
    while (picked.size() < m) picked.insert(ends[pick(rng)]);
    for (VertexId v : picked) {
      edges.emplace_back(v, u);
      ends.push_back(v);
      ends.push_back(u);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace hcs
