#include "hcs/pruning.hpp"

#include <algorithm>

namespace hcs {

CandidateFilter candidate_filter(const MotifSpec& spec) {
  const int q = spec.q_low;
  const int s = spec.family == Family::clique ? 0 : spec.s;
  CandidateFilter f;
  if (spec.family == Family::plex) {
    f.core_k = std::max(0, q - 2 * s - 2);
    f.two_hop_min = std::max(1, q - 2 * s);
  } else {
    f.core_k = std::max(0, q - s - 2);
    f.two_hop_min = std::max(1, q - s - 1);
  }
  f.include_two_hop = s > 0;
  return f;
}

RootNeighborhood reduce_candidates(const RootNeighborhood& rn, const CandidateFilter& filter) {
  const LocalGraph& adj = rn.adjacency;
  std::vector<LocalId> one_hop;
  for (LocalId v = 1; v < rn.vertices.size(); ++v) {
    if (rn.hop[v] == 1) one_hop.push_back(v);
  }
  std::vector<std::vector<LocalId>> sub(one_hop.size());
  for (std::size_t i = 0; i < one_hop.size(); ++i) {
    for (std::size_t j = 0; j < one_hop.size(); ++j) {
      if (i != j && adj.adjacent(one_hop[i], one_hop[j])) sub[i].push_back(static_cast<LocalId>(j));
    }
  }
  auto keep1 = peel_to_core(sub, filter.core_k);
  LocalSet core(adj.words());
  std::vector<LocalId> keep{0};
  for (std::size_t i = 0; i < one_hop.size(); ++i) {
    if (keep1[i]) core.insert(one_hop[i]);
  }
  for (LocalId v = 1; v < rn.vertices.size(); ++v) {
    if (rn.hop[v] == 1) {
      if (core.contains(v)) keep.push_back(v);
    } else if (filter.include_two_hop) {
      const auto into_core = static_cast<int>(adj.degree_within(v, core.bits()));
      if (filter.two_hop_min <= 0 || into_core >= filter.two_hop_min) keep.push_back(v);
    }
  }
  RootNeighborhood out;
  out.root = rn.root;
  for (LocalId v : keep) {
    out.vertices.push_back(rn.vertices[v]);
    out.hop.push_back(rn.hop[v]);
  }
  out.adjacency = adj.induced(keep);
  return out;
}

RootNeighborhood reduce_candidates_dclique(const RootNeighborhood& rn, int q, int s) {
  return reduce_candidates(rn, candidate_filter(MotifSpec::single(Family::dclique, s, q)));
}

RootNeighborhood reduce_candidates_plex(const RootNeighborhood& rn, int q, int s) {
  return reduce_candidates(rn, candidate_filter(MotifSpec::single(Family::plex, s, q)));
}

int greedy_take(std::span<const int> bucket, long budget) {
  int taken = 0;
  for (std::size_t w = 0; w < bucket.size(); ++w) {
    if (bucket[w] == 0) continue;
    if (w == 0) {
      taken += bucket[0];
      continue;
    }
    const long fit = std::min<long>(bucket[w], budget / static_cast<long>(w));
    taken += static_cast<int>(fit);
    budget -= fit * static_cast<long>(w);
    if (fit < bucket[w]) break;
  }
  return taken;
}

namespace {

// Fills scratch.bucket from N(u) ∩ cand keyed by m̄(v, R); returns m̄(u, cand).
template <class State>
int fill_buckets(const State& st, LocalId u, std::span<const LocalId> cand, BoundScratch& scratch) {
  const LocalGraph& g = st.graph();
  scratch.bucket.assign(static_cast<std::size_t>(st.s()) + 1, 0);
  int non_adjacent = 0;
  for (LocalId v : cand) {
    if (!g.adjacent(u, v)) {
      ++non_adjacent;
      continue;
    }
    const int d = st.deficiency(v);
    if (d <= st.s()) ++scratch.bucket[d];
  }
  return non_adjacent;
}

}  // namespace

int upper_bound_dclique(const DcliqueState& st, LocalId u, std::span<const LocalId> cand,
                        BoundScratch& scratch) {
  const int non_adjacent = fill_buckets(st, u, cand, scratch);
  const int room = st.s() - (st.missing() + st.deficiency(u));
  if (room < 0) return static_cast<int>(st.size());
  const int omega = greedy_take(scratch.bucket, room);
  return static_cast<int>(st.size()) + 1 + std::min(room, non_adjacent) + omega;
}

int upper_bound_plex(const PlexState& st, LocalId u, std::span<const LocalId> cand, BoundScratch& scratch) {
  const int non_adjacent = fill_buckets(st, u, cand, scratch);
  const long r = static_cast<long>(st.size());
  // Σ_{v∈R} (s - m̄(v,R)) = s|R| - 2 m̄(R)
  const long budget = st.s() * r - 2L * st.missing();
  const int neighbors = greedy_take(scratch.bucket, budget);
  const int own_room = std::max(0, st.s() - st.deficiency(u));
  return static_cast<int>(r) + 1 + neighbors + std::min(own_room, non_adjacent);
}

}  // namespace hcs
