#include "hcs/pivot_counter.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "hcs/binomial.hpp"
#include "hcs/neighborhood.hpp"
#include "hcs/parallel.hpp"
#include "hcs/pruning.hpp"

namespace hcs {

namespace {

template <class State>
void fill_degrees(const State& st, std::span<const LocalId> c, PivotScratch& sc) {
  const LocalGraph& g = st.graph();
  sc.members.resize(g.words());
  sc.members.assign(c);
  if (sc.degree.size() < g.size()) sc.degree.resize(g.size());
  for (LocalId v : c) sc.degree[v] = g.degree_within(v, sc.members.bits());
}

template <class State>
void split(const State& st, std::span<const LocalId> c, LocalId by, bool keep_by_in_c2, PivotDecision& out) {
  const LocalGraph& g = st.graph();
  out.branch = by;
  out.c1.clear();
  out.c2.clear();
  for (LocalId v : c) {
    if (v == by) {
      if (keep_by_in_c2) out.c2.push_back(v);
    } else if (g.adjacent(by, v)) {
      out.c1.push_back(v);
    } else {
      out.c2.push_back(v);
    }
  }
}

LocalId max_degree(std::span<const LocalId> c, const PivotScratch& sc) {
  LocalId best = c.front();
  for (LocalId v : c) {
    if (sc.degree[v] > sc.degree[best]) best = v;
  }
  return best;
}

void fill_outside(const PlexState& st, std::span<const LocalId> c, PivotScratch& sc) {
  const LocalGraph& g = st.graph();
  if (sc.outside.size() < g.size()) sc.outside.resize(g.size());
  for (LocalId w : st.members()) {
    const auto in_c = static_cast<int>(g.degree_within(w, sc.members.bits()));
    sc.outside[w] = st.deficiency(w) + static_cast<int>(c.size()) - in_c;
  }
}

bool qualifies(const PlexState& st, LocalId u, const PivotScratch& sc) {
  for (LocalId w : st.non_neighbors(u)) {
    if (sc.outside[w] > st.s() - 1) return false;
  }
  return true;
}

}  // namespace

PivotDecision select_pivot_dclique(const DcliqueState& st, std::span<const LocalId> c, PivotScratch& sc) {
  PivotDecision d;
  fill_degrees(st, c, sc);
  const LocalId p = max_degree(c, sc);
  d.pivot = p;
  split(st, c, p, false, d);
  return d;
}

PivotDecision select_pivot_dclique(const DcliqueState& st, std::span<const LocalId> c) {
  PivotScratch sc;
  return select_pivot_dclique(st, c, sc);
}

PivotDecision select_pivot_plex(const PlexState& st, std::span<const LocalId> c, PivotScratch& sc) {
  PivotDecision d;
  fill_degrees(st, c, sc);
  fill_outside(st, c, sc);
  std::optional<LocalId> best;
  for (LocalId v : c) {
    if (!qualifies(st, v, sc)) continue;
    if (!best || sc.degree[v] > sc.degree[*best]) best = v;
  }
  if (best) {
    d.pivot = best;
    split(st, c, *best, false, d);
  } else {
    split(st, c, max_degree(c, sc), true, d);
  }
  return d;
}

PivotDecision select_pivot_plex(const PlexState& st, std::span<const LocalId> c) {
  PivotScratch sc;
  return select_pivot_plex(st, c, sc);
}

std::vector<LocalId> plex_pivot_qualifiers(const PlexState& st, std::span<const LocalId> c) {
  PivotScratch sc;
  fill_degrees(st, c, sc);
  fill_outside(st, c, sc);
  std::vector<LocalId> out;
  for (LocalId v : c) {
    if (qualifies(st, v, sc)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double PivotRun::combinatorial_fraction() const {
  const BigCount all = combinatorial + closed;
  if (all == 0) return 0.0;
  return static_cast<double>(combinatorial) / static_cast<double>(all);
}

Granularity parse_granularity(const std::string& name) {
  if (name == "vertex") return Granularity::vertex;
  if (name == "edge") return Granularity::edge;
  throw std::invalid_argument("unknown granularity '" + name + "' (expected vertex|edge)");
}

std::string to_string(Granularity g) { return g == Granularity::vertex ? "vertex" : "edge"; }

namespace {

int bound(const DcliqueState& st, LocalId u, std::span<const LocalId> cand, BoundScratch& sc) {
  return upper_bound_dclique(st, u, cand, sc);
}
int bound(const PlexState& st, LocalId u, std::span<const LocalId> cand, BoundScratch& sc) {
  return upper_bound_plex(st, u, cand, sc);
}
PivotDecision decide(const DcliqueState& st, std::span<const LocalId> c, PivotScratch& sc) {
  return select_pivot_dclique(st, c, sc);
}
PivotDecision decide(const PlexState& st, std::span<const LocalId> c, PivotScratch& sc) {
  return select_pivot_plex(st, c, sc);
}

struct Frame {
  PivotDecision split;
  std::vector<LocalId> d_next;
  std::vector<char> removed;
  std::vector<LocalId> live_c;
  std::vector<LocalId> live_all;
  std::vector<LocalId> next;
};

struct LocalMode {
  Granularity granularity;
};

template <class State>
class PivotSearch {
 public:
  PivotSearch(const Graph& g, const DegeneracyOrder& ord, const MotifSpec& spec, const EngineOptions& opts,
              const LocalMode* local, const PathSink* sink)
      : g_(g),
        builder_(g, ord),
        opts_(opts),
        local_(local),
        sink_(sink),
        q_low_(spec.q_low),
        q_high_(spec.q_high),
        s_(effective_s(spec)),
        plex_(spec.family == Family::plex),
        counter_(table_),
        by_size_(static_cast<std::size_t>(q_high_ - q_low_ + 1)) {
    filter_ = opts.prune ? candidate_filter(spec) : CandidateFilter{};
    if (local_) {
      const std::size_t width = local_->granularity == Granularity::vertex ? g.num_vertices() : g.num_edges();
      local_counts_.assign(by_size_.size(), TallyArray(width));
    }
  }

  void run(VertexId root) {
    ++stats.roots;
    std::size_t before = 0;
    builder_.build(root, filter_, rn_, &before);
    stats.candidates_before += before;
    stats.candidates_after += rn_.num_candidates();
    if (q_high_ == 1) {
      credit_size(1, u128{1}, closed);
      if (local_ && local_->granularity == Granularity::vertex) local_counts_[0].add(root, u128{1});
      if (sink_) emit({}, "c");
      return;
    }
    st_.reset(rn_.adjacency, s_);
    const auto all = rn_.candidate_locals();
    st_.push(0, all);
    std::vector<LocalId> c0;
    st_.filter(all, c0);
    path_.clear();
    node(0, c0, {});
    st_.pop(0, all);
  }

  const std::vector<Tally>& sizes() const { return by_size_; }
  std::vector<TallyArray>& local_counts() { return local_counts_; }

  SearchStats stats;
  Tally combinatorial;
  Tally closed;

 private:
  Frame& frame(std::size_t depth) {
    while (frames_.size() <= depth) frames_.push_back(std::make_unique<Frame>());
    return *frames_[depth];
  }

  bool single_ok(LocalId d) const {
    if (plex_) return true;
    return st_.missing() + st_.deficiency(d) <= s_;
  }

  void check_d_clique(std::span<const LocalId> d) const {
    const LocalGraph& g = st_.graph();
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        if (!g.adjacent(d[i], d[j])) throw std::logic_error("pivot set D is not a clique");
      }
    }
  }

  void node(std::size_t depth, std::span<const LocalId> c, std::span<const LocalId> d) {
    ++stats.nodes;
    if (sink_ && !plex_) check_d_clique(d);
    const std::size_t r = st_.size();
    if (opts_.prune && static_cast<long>(r + c.size() + d.size()) < q_low_) return;
    if (r + 1 == static_cast<std::size_t>(q_high_)) {
      close(c, d);
      return;
    }
    if (c.empty()) {
      leaf(d);
      return;
    }

    Frame& f = frame(depth);
    f.split = decide(st_, c, pivot_scratch_);
    if (f.split.pivot) {
      ++stats.pivots;
      f.d_next.assign(d.begin(), d.end());
      f.d_next.push_back(*f.split.pivot);
      path_.push_back('1');
      node(depth + 1, f.split.c1, f.d_next);
      path_.pop_back();
    } else {
      ++stats.pivot_fallbacks;
      path_.push_back('2');
      node(depth + 1, f.split.c1, d);
      path_.pop_back();
    }

    if (f.split.c2.empty()) return;
    const LocalGraph& g = st_.graph();
    if (f.removed.size() < g.size()) f.removed.resize(g.size());
    for (LocalId v : c) f.removed[v] = 0;
    for (LocalId u : f.split.c2) {
      f.removed[u] = 1;
      f.live_c.clear();
      for (LocalId v : c) {
        if (!f.removed[v]) f.live_c.push_back(v);
      }
      ++stats.branches;
      if (opts_.prune &&
          bound(st_, u, f.live_c, bound_scratch_) + static_cast<int>(d.size()) + opts_.bound_bias < q_low_) {
        ++stats.pruned_branches;
        continue;
      }
      f.live_all.assign(f.live_c.begin(), f.live_c.end());
      f.live_all.insert(f.live_all.end(), d.begin(), d.end());
      st_.push(u, f.live_all);
      st_.filter(f.live_c, f.next);
      path_.push_back('3');
      node(depth + 1, f.next, d);
      path_.pop_back();
      st_.pop(u, f.live_all);
    }
  }

  // |R| = q_high - 1: R plus any one vertex of C or D closes a result of
  // size q_high; R alone is a result of size q_high - 1.
  void close(std::span<const LocalId> c, std::span<const LocalId> d) {
    ++stats.closures;
    std::size_t ones = c.size();
    for (LocalId x : d) ones += single_ok(x) ? 1 : 0;
    credit_size(q_high_, static_cast<u128>(ones), closed);
    const bool self = q_high_ - 1 >= q_low_;
    if (self) credit_size(q_high_ - 1, u128{1}, closed);

    const auto members = st_.members();
    if (local_) {
      const std::size_t top = static_cast<std::size_t>(q_high_ - q_low_);
      auto credit_extra = [&](LocalId x) {
        if (local_->granularity == Granularity::vertex) {
          local_counts_[top].add(rn_.vertices[x], u128{1});
        } else {
          for (LocalId m : members) credit_edge(top, m, x, u128{1});
        }
      };
      for (LocalId x : c) credit_extra(x);
      for (LocalId x : d) {
        if (single_ok(x)) credit_extra(x);
      }
      credit_members(top, static_cast<u128>(ones));
      if (self) credit_members(top - 1, u128{1});
    }
    if (sink_) {
      for (LocalId x : c) emit_with({&x, 1}, "c");
      for (LocalId x : d) {
        if (single_ok(x)) emit_with({&x, 1}, "c");
      }
      if (self) emit_with({}, "c");
    }
  }

  // C = ∅: every admissible k-subset of D joins R. D is a clique, so for
  // s-dcliques the admissible subsets are those whose weights m̄(d, R) fit
  // the remaining budget. For s-plexes every subset is admissible.
  void leaf(std::span<const LocalId> d) {
    ++stats.leaves;
    const int r = static_cast<int>(st_.size());
    int budget = 0;
    weights_.clear();
    if (plex_) {
      classes_.assign(1, static_cast<int>(d.size()));
    } else {
      budget = s_ - st_.missing();
      for (LocalId x : d) weights_.push_back(st_.deficiency(x));
      classes_ = weight_classes(weights_, budget);
    }
    for (int q = std::max(q_low_, r); q <= q_high_; ++q) {
      const int k = q - r;
      if (k > static_cast<int>(d.size())) break;
      const auto qi = static_cast<std::size_t>(q - q_low_);
      const bool any = count_into(classes_, budget, k, [&](const auto& n) { credit_size(q, n, combinatorial); });
      if (!any) continue;
      if (local_) local_leaf(qi, d, budget, k);
      if (sink_) expand_leaf(d, budget, k);
    }
  }

  void local_leaf(std::size_t qi, std::span<const LocalId> d, int budget, int k) {
    const bool vertex = local_->granularity == Granularity::vertex;
    count_into(classes_, budget, k, [&](const auto& n) { credit_members(qi, n); });
    if (k >= 1) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        const int wi = plex_ ? 0 : weights_[i];
        if (wi > budget) continue;
        forced_ = classes_;
        --forced_[static_cast<std::size_t>(wi)];
        count_into(forced_, budget - wi, k - 1, [&](const auto& n) {
          if (vertex) {
            local_counts_[qi].add(rn_.vertices[d[i]], n);
          } else {
            for (LocalId m : st_.members()) credit_edge(qi, m, d[i], n);
          }
        });
      }
    }
    if (!vertex && k >= 2) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        const int wi = plex_ ? 0 : weights_[i];
        if (wi > budget) continue;
        for (std::size_t j = i + 1; j < d.size(); ++j) {
          const int wj = plex_ ? 0 : weights_[j];
          if (wi + wj > budget) continue;
          forced_ = classes_;
          --forced_[static_cast<std::size_t>(wi)];
          --forced_[static_cast<std::size_t>(wj)];
          if (forced_[static_cast<std::size_t>(wi)] < 0 || forced_[static_cast<std::size_t>(wj)] < 0) continue;
          count_into(forced_, budget - wi - wj, k - 2,
                     [&](const auto& n) { credit_edge(qi, d[i], d[j], n); });
        }
      }
    }
  }

  void expand_leaf(std::span<const LocalId> d, int budget, int k) {
    pick_.clear();
    expand_rec(d, 0, budget, k);
  }

  void expand_rec(std::span<const LocalId> d, std::size_t from, int budget, int k) {
    if (k == 0) {
      emit_with(pick_, "l");
      return;
    }
    for (std::size_t i = from; i < d.size(); ++i) {
      const int w = plex_ ? 0 : st_.deficiency(d[i]);
      if (w > budget) continue;
      pick_.push_back(d[i]);
      expand_rec(d, i + 1, budget - w, k - 1);
      pick_.pop_back();
    }
  }

  template <class Add>
  bool count_into(std::span<const int> classes, int budget, int k, Add&& add) {
    u128 fast = 0;
    if (counter_.count_fast(classes, budget, k, fast)) {
      if (fast == 0) return false;
      add(fast);
      return true;
    }
    const BigCount big = counter_.count(classes, budget, k);
    if (big == 0) return false;
    add(big);
    return true;
  }

  template <class N>
  void credit_size(int q, const N& n, Tally& kind) {
    Tally& t = by_size_[static_cast<std::size_t>(q - q_low_)];
    t.add(n);
    kind.add(n);
    if (!opts_.limit.unbounded()) opts_.limit.check(t.value());
  }

  template <class N>
  void credit_members(std::size_t qi, const N& n) {
    const auto members = st_.members();
    if (local_->granularity == Granularity::vertex) {
      for (LocalId m : members) local_counts_[qi].add(rn_.vertices[m], n);
      return;
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) credit_edge(qi, members[i], members[j], n);
    }
  }

  template <class N>
  void credit_edge(std::size_t qi, LocalId a, LocalId b, const N& n) {
    if (!st_.graph().adjacent(a, b)) return;
    local_counts_[qi].add(g_.edge_id(rn_.vertices[a], rn_.vertices[b]), n);
  }

  void emit_with(std::span<const LocalId> extra, const char* tail) {
    out_.clear();
    for (LocalId m : st_.members()) out_.push_back(rn_.vertices[m]);
    for (LocalId x : extra) out_.push_back(rn_.vertices[x]);
    std::sort(out_.begin(), out_.end());
    (*sink_)(out_, path_ + tail);
  }

  void emit(std::span<const VertexId>, const char* tail) {
    out_.assign(1, rn_.root);
    (*sink_)(out_, path_ + tail);
  }

  const Graph& g_;
  NeighborhoodBuilder builder_;
  EngineOptions opts_;
  const LocalMode* local_;
  const PathSink* sink_;
  int q_low_;
  int q_high_;
  int s_;
  bool plex_;
  CandidateFilter filter_;
  RootNeighborhood rn_;
  State st_;
  BoundScratch bound_scratch_;
  PivotScratch pivot_scratch_;
  BinomialTable table_;
  SubsetCounter counter_;
  std::vector<Tally> by_size_;
  std::vector<TallyArray> local_counts_;
  std::vector<std::unique_ptr<Frame>> frames_;
  std::vector<int> weights_;
  std::vector<int> classes_;
  std::vector<int> forced_;
  std::vector<LocalId> pick_;
  std::vector<VertexId> out_;
  std::string path_;
};

struct Merged {
  PivotRun run;
  std::vector<TallyArray> local;
};

template <class State>
Merged drive(const Graph& g, const DegeneracyOrder& ord, const MotifSpec& spec, const EngineOptions& opts,
             const LocalMode* local, const PathSink* sink) {
  using Search = PivotSearch<State>;
  auto make = [&] { return std::make_unique<Search>(g, ord, spec, opts, local, sink); };
  auto body = [](std::unique_ptr<Search>& w, VertexId root) { w->run(root); };
  using Worker = std::unique_ptr<Search>;
  std::vector<Worker> workers = sink ? run_roots_serial<Worker>(ord, make, body)
                                     : run_roots<Worker>(ord, opts.threads, make, body);
  Merged m;
  m.run.counts = SizeCounts(spec.q_low, spec.q_high);
  std::vector<Tally> sizes(m.run.counts.by_size.size());
  Tally comb, closed;
  for (auto& w : workers) {
    for (std::size_t i = 0; i < sizes.size(); ++i) sizes[i].add(w->sizes()[i]);
    comb.add(w->combinatorial);
    closed.add(w->closed);
    m.run.stats.merge(w->stats);
    if (local) {
      auto& mine = w->local_counts();
      if (m.local.empty()) {
        m.local = std::move(mine);
      } else {
        for (std::size_t i = 0; i < mine.size(); ++i) m.local[i].merge(mine[i]);
      }
    }
  }
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    m.run.counts.by_size[i] = sizes[i].value();
    opts.limit.check(m.run.counts.by_size[i]);
  }
  m.run.combinatorial = comb.value();
  m.run.closed = closed.value();
  return m;
}

Merged dispatch(const Graph& g, const DegeneracyOrder& ord, const MotifSpec& spec, const EngineOptions& opts,
                const LocalMode* local, const PathSink* sink) {
  validate(spec);
  if (spec.family == Family::plex) return drive<PlexState>(g, ord, spec, opts, local, sink);
  return drive<DcliqueState>(g, ord, spec, opts, local, sink);
}

}  // namespace

PivotRun count_by_pivot(const Graph& g, const DegeneracyOrder& ord, const MotifSpec& spec,
                        const EngineOptions& opts) {
  return dispatch(g, ord, spec, opts, nullptr, nullptr).run;
}

LocalCounts count_local(const Graph& g, const DegeneracyOrder& ord, const MotifSpec& spec,
                        Granularity granularity, const EngineOptions& opts) {
  const LocalMode mode{granularity};
  Merged m = dispatch(g, ord, spec, opts, &mode, nullptr);
  LocalCounts out;
  out.granularity = granularity;
  out.totals = m.run.counts;
  out.stats = m.run.stats;
  for (auto& arr : m.local) {
    out.by_size.push_back(arr.values());
    for (const auto& v : out.by_size.back()) opts.limit.check(v);
  }
  if (out.by_size.empty()) {
    const std::size_t width = granularity == Granularity::vertex ? g.num_vertices() : g.num_edges();
    out.by_size.assign(out.totals.by_size.size(), std::vector<BigCount>(width));
  }
  return out;
}

PivotRun enumerate_by_pivot(const Graph& g, const DegeneracyOrder& ord, const MotifSpec& spec,
                            const PathSink& sink, const EngineOptions& opts) {
  return dispatch(g, ord, spec, opts, nullptr, &sink).run;
}

}  // namespace hcs
