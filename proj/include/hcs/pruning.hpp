#pragma once

#include <span>
#include <vector>

#include "hcs/motif.hpp"
#include "hcs/neighborhood.hpp"

namespace hcs {

/// Core and 2-hop thresholds that are safe for every size >= spec.q_low.
///   dclique: 1-hop core q-s-2, 2-hop needs q-s-1 neighbors in that core.
///   plex:    1-hop core q-2s-2, 2-hop needs q-2s neighbors in that core.
/// With s = 0 no vertex outside N(root) can join, so 2-hop is skipped.
CandidateFilter candidate_filter(const MotifSpec& spec);

/// Applies candidate_filter() to an already built, unreduced neighborhood.
RootNeighborhood reduce_candidates_dclique(const RootNeighborhood& rn, int q, int s);
RootNeighborhood reduce_candidates_plex(const RootNeighborhood& rn, int q, int s);
RootNeighborhood reduce_candidates(const RootNeighborhood& rn, const CandidateFilter& filter);

/// Per-worker scratch for the branch bounds. bucket[i] counts the neighbors
/// of u in C that miss exactly i vertices of R.
struct BoundScratch {
  std::vector<int> bucket;
};

/// Largest count of items taken greedily from `bucket` (weight i per item in
/// bucket i, lightest first) whose total weight stays within `budget`.
int greedy_take(std::span<const int> bucket, long budget);

/// γ_d(u, R, C): upper bound on the size of any s-dclique reachable by adding
/// u to R and then only vertices of `cand` (u already removed from it).
int upper_bound_dclique(const DcliqueState& st, LocalId u, std::span<const LocalId> cand,
                        BoundScratch& scratch);

/// γ_p(u, R, C) for s-plexes. The neighbor budget sums s - m̄(v, R) over R
/// itself, not R ∪ {u}.
int upper_bound_plex(const PlexState& st, LocalId u, std::span<const LocalId> cand, BoundScratch& scratch);

}  // namespace hcs
