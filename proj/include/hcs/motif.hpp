#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcs/graph.hpp"
#include "hcs/local_graph.hpp"

namespace hcs {

enum class Family { dclique, plex, clique };

std::string to_string(Family f);
Family parse_family(const std::string& name);

/// Rejected (family, s, q) combination. rule() names the violated condition.
class SpecError : public std::invalid_argument {
 public:
  SpecError(std::string rule, const std::string& what)
      : std::invalid_argument(what), rule_(std::move(rule)) {}
  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

struct MotifSpec {
  Family family = Family::clique;
  int s = 0;
  int q_low = 3;
  int q_high = 3;

  static MotifSpec single(Family f, int s, int q) { return {f, f == Family::clique ? 0 : s, q, q}; }
  static MotifSpec range(Family f, int s, int lo, int hi) { return {f, f == Family::clique ? 0 : s, lo, hi}; }

  /// Cliques run through the s-defective machinery with s = 0.
  bool plex_like() const { return family == Family::plex; }
  bool single_size() const { return q_low == q_high; }
  bool operator==(const MotifSpec&) const = default;
};

/// Throws SpecError unless every size in [q_low, q_high] has diameter <= 2:
/// dclique needs q - 2 >= s, plex needs q >= 2s + 1.
void validate(const MotifSpec& spec);

/// Definitional membership test on an explicit vertex set.
bool is_hcs(Family family, int s, const Graph& g, std::span<const VertexId> q);
bool is_hcs(const MotifSpec& spec, const Graph& g, std::span<const VertexId> q);

/// m̄(Q): missing edges inside Q.
std::size_t missing_edges(const Graph& g, std::span<const VertexId> q);
/// m̄(u, Q) = |Q \ {u}| - |N(u) ∩ Q|.
std::size_t missing_edges_of(const Graph& g, VertexId u, std::span<const VertexId> q);

/// Search state for s-defective cliques over a LocalGraph: the partial
/// result R, its missing-edge total and A[v] = m̄(v, R) for live vertices.
class DcliqueState {
 public:
  DcliqueState() = default;
  DcliqueState(const LocalGraph& g, int s) { reset(g, s); }

  void reset(const LocalGraph& g, int s);

  int s() const { return s_; }
  std::span<const LocalId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  int missing() const { return missing_; }
  int deficiency(LocalId v) const { return deficiency_[v]; }
  const LocalGraph& graph() const { return *g_; }

  /// Adds u to R. `live` are the candidates that stay in play (u excluded);
  /// their deficiencies are updated. Requires m̄(R ∪ {u}) <= s.
  void push(LocalId u, std::span<const LocalId> live);
  /// Exact inverse of push(u, live) with the same live set.
  void pop(LocalId u, std::span<const LocalId> live);
  /// After push(u): keeps v in `live` iff R ∪ {v} is still an s-dclique.
  void filter(std::span<const LocalId> live, std::vector<LocalId>& out) const;
  /// Can R ∪ {v} be an s-dclique (v not yet pushed)?
  bool admits(LocalId v) const { return missing_ + deficiency_[v] <= s_; }

  bool operator==(const DcliqueState& o) const {
    return s_ == o.s_ && members_ == o.members_ && missing_ == o.missing_ && deficiency_ == o.deficiency_;
  }

 private:
  const LocalGraph* g_ = nullptr;
  int s_ = 0;
  std::vector<LocalId> members_;
  int missing_ = 0;
  std::vector<int> deficiency_;
};

/// Search state for s-plexes: As[v] = R \ N(v), kept for members of R and
/// for live candidates, inline with capacity s + 1 per vertex.
class PlexState {
 public:
  PlexState() = default;
  PlexState(const LocalGraph& g, int s) { reset(g, s); }

  void reset(const LocalGraph& g, int s);

  int s() const { return s_; }
  std::span<const LocalId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  /// Missing edges inside R.
  int missing() const { return missing_; }
  /// m̄(v, R) = |As[v]|.
  int deficiency(LocalId v) const { return count_[v]; }
  std::span<const LocalId> non_neighbors(LocalId v) const {
    return {slots_.data() + static_cast<std::size_t>(v) * stride_, static_cast<std::size_t>(count_[v])};
  }
  const LocalGraph& graph() const { return *g_; }

  /// Adds u to R; requires R ∪ {u} to be an s-plex.
  void push(LocalId u, std::span<const LocalId> live);
  void pop(LocalId u, std::span<const LocalId> live);
  /// After push(u): keeps v iff R ∪ {v} is an s-plex. Only vertices of R
  /// that are saturated (exactly s non-neighbors) and not adjacent to the
  /// last pushed vertex, plus that vertex itself, can reject a candidate.
  void filter(std::span<const LocalId> live, std::vector<LocalId>& out) const;
  /// Can R ∪ {v} be an s-plex (v not yet pushed)?
  bool admits(LocalId v) const;

  bool operator==(const PlexState& o) const;

 private:
  void append(LocalId v, LocalId x) { slots_[static_cast<std::size_t>(v) * stride_ + count_[v]++] = x; }

  const LocalGraph* g_ = nullptr;
  int s_ = 0;
  std::size_t stride_ = 1;
  std::vector<LocalId> members_;
  int missing_ = 0;
  std::vector<int> count_;
  std::vector<LocalId> slots_;
};

}  // namespace hcs
