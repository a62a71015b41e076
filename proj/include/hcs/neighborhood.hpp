#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hcs/graph.hpp"
#include "hcs/local_graph.hpp"
#include "hcs/ordering.hpp"

namespace hcs {

/// The candidate universe of one root: out-going 1-hop and 2-hop neighbors,
/// with the induced adjacency relabelled to local ids. Local id 0 is the root;
/// candidates follow in ascending global id.
struct RootNeighborhood {
  VertexId root = kNoVertex;
  std::vector<VertexId> vertices;   // local -> global
  std::vector<std::uint8_t> hop;    // 0 for the root, else 1 or 2
  LocalGraph adjacency;

  std::size_t num_candidates() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  std::vector<VertexId> candidates() const { return {vertices.begin() + 1, vertices.end()}; }
  std::vector<LocalId> candidate_locals() const;
};

/// Candidate reduction applied while the neighborhood is built.
/// core_k > 0: 1-hop candidates are peeled to the core_k-core of their induced
/// subgraph. two_hop_min > 0: a 2-hop candidate survives only with at least
/// that many neighbors among the surviving 1-hop candidates.
struct CandidateFilter {
  int core_k = 0;
  int two_hop_min = 0;
  bool include_two_hop = true;

  bool is_identity() const { return core_k <= 0 && two_hop_min <= 0 && include_two_hop; }
};

/// k-core of the graph given as adjacency lists over 0..n-1; returns a keep
/// mask. Peels to a fixed point.
std::vector<char> peel_to_core(std::span<const std::vector<LocalId>> adjacency, int k);

/// Per-worker builder holding O(n) scratch that is reset after every root.
class NeighborhoodBuilder {
 public:
  NeighborhoodBuilder(const Graph& g, const DegeneracyOrder& ord);

  /// `unreduced_size`, when given, receives |N⃗(root) ∪ N⃗₂(root)| before any
  /// reduction.
  void build(VertexId root, const CandidateFilter& filter, RootNeighborhood& out,
             std::size_t* unreduced_size = nullptr);

 private:
  std::size_t count_full(VertexId root);
  void assemble(VertexId root, RootNeighborhood& out);

  const Graph& g_;
  const DegeneracyOrder& ord_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> tally_;
  std::vector<LocalId> local_of_;
  std::vector<VertexId> one_hop_;
  std::vector<VertexId> two_hop_;
  std::vector<VertexId> touched_;
  std::vector<std::vector<LocalId>> sub_adj_;
  std::vector<std::pair<VertexId, std::uint8_t>> members_;
};

/// Unreduced neighborhood: N⃗(root) ∪ N⃗₂(root). N⃗₂ admits a higher-rank w
/// not adjacent to root when any common neighbor exists, whatever its rank.
RootNeighborhood build_root_neighborhood(const Graph& g, const DegeneracyOrder& ord, VertexId root);

}  // namespace hcs
