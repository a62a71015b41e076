#include "hcs/list_counter.hpp"

#include <algorithm>
#include <stdexcept>

#include "hcs/neighborhood.hpp"
#include "hcs/parallel.hpp"
#include "hcs/pruning.hpp"

namespace hcs {

namespace {

int bound(const DcliqueState& st, LocalId u, std::span<const LocalId> cand, BoundScratch& sc) {
  return upper_bound_dclique(st, u, cand, sc);
}
int bound(const PlexState& st, LocalId u, std::span<const LocalId> cand, BoundScratch& sc) {
  return upper_bound_plex(st, u, cand, sc);
}

template <class State>
class ListSearch {
 public:
  ListSearch(const Graph& g, const DegeneracyOrder& ord, const MotifSpec& spec, const EngineOptions& opts,
             const SetSink* sink)
      : builder_(g, ord), spec_(spec), opts_(opts), sink_(sink), q_(spec.q_low), s_(effective_s(spec)) {
    filter_ = opts.prune ? candidate_filter(spec) : CandidateFilter{};
  }

  void run(VertexId root) {
    ++stats.roots;
    std::size_t before = 0;
    builder_.build(root, filter_, rn_, &before);
    stats.candidates_before += before;
    stats.candidates_after += rn_.num_candidates();
    if (q_ == 1) {
      count.add(u128{1});
      if (sink_) emit_with(kNone);
      return;
    }
    st_.reset(rn_.adjacency, s_);
    if (level_.size() < static_cast<std::size_t>(q_) + 2) level_.resize(static_cast<std::size_t>(q_) + 2);
    const auto all = rn_.candidate_locals();
    st_.push(0, all);
    st_.filter(all, level_[0]);
    recurse(0);
    st_.pop(0, all);
  }

  Tally count;
  SearchStats stats;

 private:
  static constexpr LocalId kNone = static_cast<LocalId>(-1);

  void recurse(std::size_t depth) {
    ++stats.nodes;
    const std::vector<LocalId>& cand = level_[depth];
    if (st_.size() + 1 == static_cast<std::size_t>(q_)) {
      ++stats.closures;
      count.add(static_cast<u128>(cand.size()));
      if (!opts_.limit.unbounded()) opts_.limit.check(count.value());
      if (sink_) {
        for (LocalId c : cand) emit_with(c);
      }
      return;
    }
    std::vector<LocalId>& next = level_[depth + 1];
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const LocalId u = cand[i];
      const std::span<const LocalId> live(cand.data() + i + 1, cand.size() - i - 1);
      if (st_.size() + 1 + live.size() < static_cast<std::size_t>(q_)) break;
      ++stats.branches;
      if (opts_.prune && bound(st_, u, live, scratch_) + opts_.bound_bias < q_) {
        ++stats.pruned_branches;
        continue;
      }
      st_.push(u, live);
      st_.filter(live, next);
      recurse(depth + 1);
      st_.pop(u, live);
    }
  }

  void emit_with(LocalId extra) {
    out_.clear();
    for (LocalId m : st_.members()) out_.push_back(rn_.vertices[m]);
    if (q_ == 1) out_.assign(1, rn_.root);
    if (extra != kNone) out_.push_back(rn_.vertices[extra]);
    std::sort(out_.begin(), out_.end());
    (*sink_)(out_);
  }

  NeighborhoodBuilder builder_;
  MotifSpec spec_;
  EngineOptions opts_;
  const SetSink* sink_;
  int q_;
  int s_;
  CandidateFilter filter_;
  RootNeighborhood rn_;
  State st_;
  BoundScratch scratch_;
  std::vector<std::vector<LocalId>> level_;
  std::vector<VertexId> out_;
};

template <class State>
ListRun drive(const Graph& g, const DegeneracyOrder& ord, const MotifSpec& spec, const EngineOptions& opts,
              const SetSink* sink) {
  using Search = ListSearch<State>;
  auto make = [&] { return Search(g, ord, spec, opts, sink); };
  auto body = [](Search& w, VertexId root) { w.run(root); };
  std::vector<Search> workers = sink ? run_roots_serial<Search>(ord, make, body)
                                     : run_roots<Search>(ord, opts.threads, make, body);
  ListRun out{spec, opts.prune, 0, {}};
  Tally total;
  for (auto& w : workers) {
    total.add(w.count);
    out.stats.merge(w.stats);
  }
  out.count = total.value();
  opts.limit.check(out.count);
  return out;
}

ListRun dispatch(const Graph& g, const DegeneracyOrder& ord, const MotifSpec& spec, const EngineOptions& opts,
                 const SetSink* sink) {
  validate(spec);
  if (!spec.single_size()) throw std::invalid_argument("listing counts a single size q");
  if (spec.family == Family::plex) return drive<PlexState>(g, ord, spec, opts, sink);
  return drive<DcliqueState>(g, ord, spec, opts, sink);
}

}  // namespace

ListRun count_by_listing(const Graph& g, const DegeneracyOrder& ord, const MotifSpec& spec,
                         const EngineOptions& opts) {
  return dispatch(g, ord, spec, opts, nullptr);
}

ListRun enumerate_by_listing(const Graph& g, const DegeneracyOrder& ord, const MotifSpec& spec,
                             const SetSink& sink, const EngineOptions& opts) {
  return dispatch(g, ord, spec, opts, &sink);
}

}  // namespace hcs
