#include "hcs/motif.hpp"

#include <algorithm>

namespace hcs {

std::string to_string(Family f) {
  switch (f) {
    case Family::dclique: return "dclique";
    case Family::plex: return "plex";
    case Family::clique: return "clique";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "dclique") return Family::dclique;
  if (name == "plex") return Family::plex;
  if (name == "clique") return Family::clique;
  throw std::invalid_argument("unknown motif family '" + name + "'");
}

void validate(const MotifSpec& spec) {
  if (spec.s < 0) throw SpecError("s >= 0", "s must be non-negative");
  if (spec.q_low < 1 || spec.q_high < spec.q_low) {
    throw SpecError("1 <= q_low <= q_high", "size range [" + std::to_string(spec.q_low) + ", " +
                                                std::to_string(spec.q_high) + "] is empty or below 1");
  }
  switch (spec.family) {
    case Family::clique:
      if (spec.s != 0) throw SpecError("clique has s = 0", "clique spec with s = " + std::to_string(spec.s));
      break;
    case Family::dclique:
      if (spec.q_low - 2 < spec.s) {
        throw SpecError("dclique diameter condition q - 2 >= s",
                        "(" + std::to_string(spec.q_low) + "," + std::to_string(spec.s) +
                            ")-dclique violates q - 2 >= s; the 2-hop candidate universe would miss results");
      }
      break;
    case Family::plex:
      if (spec.q_low < 2 * spec.s + 1) {
        throw SpecError("plex diameter condition q >= 2s + 1",
                        "(" + std::to_string(spec.q_low) + "," + std::to_string(spec.s) +
                            ")-plex violates q >= 2s + 1; the 2-hop candidate universe would miss results");
      }
      break;
  }
}

std::size_t missing_edges(const Graph& g, std::span<const VertexId> q) {
  std::size_t missing = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j < q.size(); ++j) missing += !g.has_edge(q[i], q[j]);
  }
  return missing;
}

std::size_t missing_edges_of(const Graph& g, VertexId u, std::span<const VertexId> q) {
  std::size_t others = 0, adjacent = 0;
  for (VertexId v : q) {
    if (v == u) continue;
    ++others;
    adjacent += g.has_edge(u, v);
  }
  return others - adjacent;
}

bool is_hcs(Family family, int s, const Graph& g, std::span<const VertexId> q) {
  const auto budget = static_cast<std::size_t>(family == Family::clique ? 0 : s);
  if (family == Family::plex) {
    return std::all_of(q.begin(), q.end(), [&](VertexId u) { return missing_edges_of(g, u, q) <= budget; });
  }
  return missing_edges(g, q) <= budget;
}

bool is_hcs(const MotifSpec& spec, const Graph& g, std::span<const VertexId> q) {
  return is_hcs(spec.family, spec.s, g, q);
}

// ---------------------------------------------------------------------------

void DcliqueState::reset(const LocalGraph& g, int s) {
  g_ = &g;
  s_ = s;
  members_.clear();
  missing_ = 0;
  deficiency_.assign(g.size(), 0);
}

void DcliqueState::push(LocalId u, std::span<const LocalId> live) {
  missing_ += deficiency_[u];
  members_.push_back(u);
  for (LocalId v : live) deficiency_[v] += !g_->adjacent(u, v);
}

void DcliqueState::pop(LocalId u, std::span<const LocalId> live) {
  for (LocalId v : live) deficiency_[v] -= !g_->adjacent(u, v);
  members_.pop_back();
  missing_ -= deficiency_[u];
}

void DcliqueState::filter(std::span<const LocalId> live, std::vector<LocalId>& out) const {
  out.clear();
  const int room = s_ - missing_;
  for (LocalId v : live) {
    if (deficiency_[v] <= room) out.push_back(v);
  }
}

// ---------------------------------------------------------------------------

void PlexState::reset(const LocalGraph& g, int s) {
  g_ = &g;
  s_ = s;
  stride_ = static_cast<std::size_t>(s) + 1;
  members_.clear();
  missing_ = 0;
  count_.assign(g.size(), 0);
  slots_.assign(g.size() * stride_, 0);
}

void PlexState::push(LocalId u, std::span<const LocalId> live) {
  missing_ += count_[u];
  for (LocalId w : non_neighbors(u)) append(w, u);
  for (LocalId v : live) {
    if (!g_->adjacent(u, v)) append(v, u);
  }
  members_.push_back(u);
}

void PlexState::pop(LocalId u, std::span<const LocalId> live) {
  members_.pop_back();
  for (LocalId v : live) count_[v] -= !g_->adjacent(u, v);
  for (LocalId w : non_neighbors(u)) --count_[w];
  missing_ -= count_[u];
}

void PlexState::filter(std::span<const LocalId> live, std::vector<LocalId>& out) const {
  out.clear();
  for (LocalId v : live) {
    if (count_[v] <= s_) out.push_back(v);
  }
  const LocalId u = members_.back();
  auto drop_non_neighbors_of = [&](LocalId w) {
    std::erase_if(out, [&](LocalId v) { return !g_->adjacent(w, v); });
  };
  if (count_[u] == s_) drop_non_neighbors_of(u);
  for (LocalId w : non_neighbors(u)) {
    if (count_[w] == s_) drop_non_neighbors_of(w);
  }
}

bool PlexState::admits(LocalId v) const {
  if (count_[v] > s_) return false;
  for (LocalId w : non_neighbors(v)) {
    if (count_[w] >= s_) return false;
  }
  return true;
}

bool PlexState::operator==(const PlexState& o) const {
  if (s_ != o.s_ || members_ != o.members_ || missing_ != o.missing_ || count_ != o.count_) return false;
  for (std::size_t v = 0; v < count_.size(); ++v) {
    auto a = non_neighbors(static_cast<LocalId>(v));
    auto b = o.non_neighbors(static_cast<LocalId>(v));
    if (!std::equal(a.begin(), a.end(), b.begin(), b.end())) return false;
  }
  return true;
}

}  // namespace hcs
