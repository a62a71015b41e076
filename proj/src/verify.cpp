#include "hcs/verify.hpp"

#include <algorithm>
#include <random>

#include "hcs/generators.hpp"
#include "hcs/list_counter.hpp"
#include "hcs/oracle.hpp"
#include "hcs/ordering.hpp"
#include "hcs/pivot_counter.hpp"

namespace hcs {

CorpusEntry corpus_entry(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> n(15, 35);
  static constexpr double kP[] = {0.2, 0.4, 0.6};
  CorpusEntry e;
  e.seed = seed;
  e.n = n(rng);
  e.p = kP[std::uniform_int_distribution<int>(0, 2)(rng)];
  return e;
}

Graph corpus_graph(const CorpusEntry& e) { return random_gnp(e.n, e.p, e.seed * 7919 + 17); }

std::vector<MotifSpec> spec_matrix(int q_max, int s_max) {
  std::vector<MotifSpec> out;
  for (Family f : {Family::dclique, Family::plex}) {
    for (int s = 0; s <= s_max; ++s) {
      const int lo = std::max(s + 2, 2 * s + 1);
      if (lo <= q_max) out.push_back(MotifSpec::range(f, s, lo, q_max));
    }
  }
  return out;
}

std::vector<Disagreement> check_agreement(const Graph& g, const MotifSpec& spec, const AgreementOptions& opts) {
  OracleOptions oo;
  oo.local = opts.local;
  const OracleResult oracle = brute_force_count(g, spec, oo);
  const DegeneracyOrder ord = degeneracy_order(g);
  std::vector<Disagreement> bad;
  auto note = [&](int q, std::string what) { bad.push_back({spec, q, std::move(what)}); };

  const PivotRun pivot = count_by_pivot(g, ord, spec, opts.engine);
  std::optional<LocalCounts> vertex, edge;
  if (opts.local) {
    vertex = count_local(g, ord, spec, Granularity::vertex, opts.engine);
    edge = count_local(g, ord, spec, Granularity::edge, opts.engine);
  }
  for (int q = spec.q_low; q <= spec.q_high; ++q) {
    const BigCount& want = oracle.total(q);
    const auto single = MotifSpec::single(spec.family, spec.s, q);
    const BigCount listed = count_by_listing(g, ord, single, opts.engine).count;
    if (listed != want) note(q, "list " + to_decimal(listed) + " vs oracle " + to_decimal(want));
    if (pivot.counts.at(q) != want) {
      note(q, "pivot " + to_decimal(pivot.counts.at(q)) + " vs oracle " + to_decimal(want));
    }
    if (!opts.local) continue;
    const auto qi = static_cast<std::size_t>(q - spec.q_low);
    if (vertex->at(q) != oracle.vertex[qi]) note(q, "per-vertex tallies differ from oracle");
    if (edge->at(q) != oracle.edge[qi]) note(q, "per-edge tallies differ from oracle");
  }
  return bad;
}

Graph without(const Graph& g, VertexId drop, EdgeId skip) {
  std::vector<VertexId> remap(g.num_vertices(), kNoVertex);
  std::vector<std::int64_t> ids;
  VertexId next = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v == drop) continue;
    remap[v] = next++;
    ids.push_back(g.original_id(v));
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (e == skip) continue;
    auto [a, b] = g.edge(e);
    if (remap[a] == kNoVertex || remap[b] == kNoVertex) continue;
    edges.emplace_back(remap[a], remap[b]);
  }
  Graph out = Graph::from_edges(next, edges);
  out.set_original_ids(std::move(ids));
  return out;
}

Graph minimize_counterexample(const Graph& g, const std::function<bool(const Graph&)>& fails) {
  Graph cur = g;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (VertexId v = 0; v < cur.num_vertices(); ++v) {
      Graph smaller = without(cur, v, kNoEdge);
      if (fails(smaller)) {
        cur = std::move(smaller);
        shrunk = true;
        break;
      }
    }
    if (shrunk) continue;
    for (EdgeId e = 0; e < cur.num_edges(); ++e) {
      Graph smaller = without(cur, kNoVertex, e);
      if (fails(smaller)) {
        cur = std::move(smaller);
        shrunk = true;
        break;
      }
    }
  }
  return cur;
}

}  // namespace hcs
