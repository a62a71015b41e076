#include "hcs/neighborhood.hpp"

#include <algorithm>

namespace hcs {

namespace {
constexpr LocalId kNoLocal = static_cast<LocalId>(-1);
}

std::vector<LocalId> RootNeighborhood::candidate_locals() const {
  std::vector<LocalId> out(num_candidates());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<LocalId>(i + 1);
  return out;
}

std::vector<char> peel_to_core(std::span<const std::vector<LocalId>> adjacency, int k) {
  const std::size_t n = adjacency.size();
  std::vector<char> keep(n, 1);
  if (k <= 0) return keep;
  std::vector<int> deg(n);
  std::vector<LocalId> queue;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adjacency[v].size());
    if (deg[v] < k) {
      keep[v] = 0;
      queue.push_back(static_cast<LocalId>(v));
    }
  }
  while (!queue.empty()) {
    LocalId v = queue.back();
    queue.pop_back();
    for (LocalId w : adjacency[v]) {
      if (keep[w] && --deg[w] < k) {
        keep[w] = 0;
        queue.push_back(w);
      }
    }
  }
  return keep;
}

NeighborhoodBuilder::NeighborhoodBuilder(const Graph& g, const DegeneracyOrder& ord)
    : g_(g),
      ord_(ord),
      stamp_(g.num_vertices(), 0),
      tally_(g.num_vertices(), 0),
      local_of_(g.num_vertices(), kNoLocal) {}

std::size_t NeighborhoodBuilder::count_full(VertexId root) {
  const auto root_rank = ord_.rank[root];
  touched_.clear();
  for (VertexId x : g_.neighbors(root)) {
    for (VertexId w : g_.neighbors(x)) {
      if (ord_.rank[w] > root_rank && stamp_[w] != epoch_ && tally_[w]++ == 0) touched_.push_back(w);
    }
  }
  return touched_.size();
}

void NeighborhoodBuilder::build(VertexId root, const CandidateFilter& filter, RootNeighborhood& out,
                                std::size_t* unreduced_size) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  const auto root_rank = ord_.rank[root];
  stamp_[root] = epoch_;
  one_hop_.clear();
  for (VertexId x : g_.neighbors(root)) {
    stamp_[x] = epoch_;
    if (ord_.rank[x] > root_rank) one_hop_.push_back(x);
  }

  if (unreduced_size != nullptr) {
    *unreduced_size = one_hop_.size() + count_full(root);
    for (VertexId w : touched_) tally_[w] = 0;
  }

  if (filter.core_k > 0 && !one_hop_.empty()) {
    for (std::size_t i = 0; i < one_hop_.size(); ++i) local_of_[one_hop_[i]] = static_cast<LocalId>(i);
    if (sub_adj_.size() < one_hop_.size()) sub_adj_.resize(one_hop_.size());
    for (std::size_t i = 0; i < one_hop_.size(); ++i) {
      auto& lst = sub_adj_[i];
      lst.clear();
      for (VertexId y : g_.neighbors(one_hop_[i])) {
        if (local_of_[y] != kNoLocal) lst.push_back(local_of_[y]);
      }
    }
    auto keep = peel_to_core(std::span(sub_adj_.data(), one_hop_.size()), filter.core_k);
    for (VertexId x : one_hop_) local_of_[x] = kNoLocal;
    std::size_t w = 0;
    for (std::size_t i = 0; i < one_hop_.size(); ++i) {
      if (keep[i]) one_hop_[w++] = one_hop_[i];
    }
    one_hop_.resize(w);
  }

  two_hop_.clear();
  if (filter.include_two_hop) {
    if (filter.two_hop_min > 0) {
      touched_.clear();
      for (VertexId x : one_hop_) {
        for (VertexId w : g_.neighbors(x)) {
          if (ord_.rank[w] > root_rank && stamp_[w] != epoch_ && tally_[w]++ == 0) touched_.push_back(w);
        }
      }
      for (VertexId w : touched_) {
        if (static_cast<int>(tally_[w]) >= filter.two_hop_min) two_hop_.push_back(w);
        tally_[w] = 0;
      }
    } else {
      count_full(root);
      for (VertexId w : touched_) tally_[w] = 0;
      two_hop_ = touched_;
    }
    std::sort(two_hop_.begin(), two_hop_.end());
  }

  members_.clear();
  members_.reserve(one_hop_.size() + two_hop_.size());
  for (VertexId x : one_hop_) members_.emplace_back(x, 1);
  for (VertexId x : two_hop_) members_.emplace_back(x, 2);
  std::inplace_merge(members_.begin(), members_.begin() + static_cast<std::ptrdiff_t>(one_hop_.size()),
                     members_.end());
  assemble(root, out);
}

void NeighborhoodBuilder::assemble(VertexId root, RootNeighborhood& out) {
  out.root = root;
  out.vertices.clear();
  out.hop.clear();
  out.vertices.push_back(root);
  out.hop.push_back(0);
  for (auto [v, h] : members_) {
    out.vertices.push_back(v);
    out.hop.push_back(h);
  }
  const std::size_t size = out.vertices.size();
  for (std::size_t a = 0; a < size; ++a) local_of_[out.vertices[a]] = static_cast<LocalId>(a);
  out.adjacency.reset(size);
  for (std::size_t a = 0; a < size; ++a) {
    for (VertexId w : g_.neighbors(out.vertices[a])) {
      LocalId b = local_of_[w];
      if (b != kNoLocal && b > a) out.adjacency.add_edge(static_cast<LocalId>(a), b);
    }
  }
  for (VertexId v : out.vertices) local_of_[v] = kNoLocal;
}

RootNeighborhood build_root_neighborhood(const Graph& g, const DegeneracyOrder& ord, VertexId root) {
  NeighborhoodBuilder builder(g, ord);
  RootNeighborhood rn;
  builder.build(root, CandidateFilter{}, rn);
  return rn;
}

}  // namespace hcs
