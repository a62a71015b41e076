#include "hcs/oracle.hpp"

#include <algorithm>
#include <string>

namespace hcs {

namespace {

class Tallier {
 public:
  Tallier(const Graph& g, int q_low, int q_high, const OracleOptions& opts, OracleResult& out)
      : g_(g), lo_(q_low), hi_(q_high), opts_(opts), out_(out) {
    const auto sizes = static_cast<std::size_t>(q_high - q_low + 1);
    out_.q_low = q_low;
    out_.q_high = q_high;
    out_.totals.assign(sizes, 0);
    if (opts.local) {
      out_.vertex.assign(sizes, std::vector<BigCount>(g.num_vertices()));
      out_.edge.assign(sizes, std::vector<BigCount>(g.num_edges()));
    }
  }

  void record(std::span<const VertexId> set) {
    const int q = static_cast<int>(set.size());
    if (q < lo_ || q > hi_) return;
    const auto qi = static_cast<std::size_t>(q - lo_);
    out_.totals[qi] += 1;
    if (opts_.local) {
      for (std::size_t i = 0; i < set.size(); ++i) {
        out_.vertex[qi][set[i]] += 1;
        for (std::size_t j = i + 1; j < set.size(); ++j) {
          if (g_.has_edge(set[i], set[j])) out_.edge[qi][g_.edge_id(set[i], set[j])] += 1;
        }
      }
    }
    if (opts_.collect_sets) out_.sets.emplace_back(set.begin(), set.end());
  }

  void tick() {
    if (++out_.checks > opts_.max_checks) {
      throw OracleInfeasible("oracle exceeded " + std::to_string(opts_.max_checks) + " membership checks");
    }
  }

 private:
  const Graph& g_;
  int lo_;
  int hi_;
  const OracleOptions& opts_;
  OracleResult& out_;
};

void grow(const Graph& g, Family family, int s, int q_high, std::vector<VertexId>& set, Tallier& t) {
  t.record(set);
  if (static_cast<int>(set.size()) == q_high) return;
  const VertexId from = set.empty() ? 0 : set.back() + 1;
  for (VertexId v = from; v < g.num_vertices(); ++v) {
    set.push_back(v);
    t.tick();
    if (is_hcs(family, s, g, set)) grow(g, family, s, q_high, set, t);
    set.pop_back();
  }
}

double choose(std::size_t n, int k) {
  double r = 1;
  for (int i = 0; i < k; ++i) r = r * static_cast<double>(n - static_cast<std::size_t>(i)) / (i + 1);
  return r;
}

void subsets(const Graph& g, Family family, int s, int q, std::vector<VertexId>& set, VertexId from,
             Tallier& t) {
  if (static_cast<int>(set.size()) == q) {
    t.tick();
    if (is_hcs(family, s, g, set)) t.record(set);
    return;
  }
  const auto n = static_cast<VertexId>(g.num_vertices());
  const auto need = static_cast<VertexId>(q - static_cast<int>(set.size()));
  for (VertexId v = from; v + need <= n; ++v) {
    set.push_back(v);
    subsets(g, family, s, q, set, v + 1, t);
    set.pop_back();
  }
}

}  // namespace

OracleResult brute_force_count(const Graph& g, Family family, int s, int q_low, int q_high,
                               const OracleOptions& opts) {
  if (q_low < 1 || q_high < q_low) throw std::invalid_argument("oracle needs 1 <= q_low <= q_high");
  OracleResult out;
  Tallier t(g, q_low, q_high, opts, out);
  std::vector<VertexId> set;
  if (opts.mode == OracleOptions::Mode::hereditary) {
    grow(g, family, s, q_high, set, t);
  } else {
    double work = 0;
    for (int q = q_low; q <= q_high; ++q) work += choose(g.num_vertices(), q);
    if (work > static_cast<double>(opts.max_checks)) {
      throw OracleInfeasible("exhaustive oracle needs ~" + std::to_string(static_cast<long double>(work)) +
                             " subsets");
    }
    for (int q = q_low; q <= q_high; ++q) subsets(g, family, s, q, set, 0, t);
  }
  if (opts.collect_sets) std::sort(out.sets.begin(), out.sets.end());
  return out;
}

OracleResult brute_force_count(const Graph& g, const MotifSpec& spec, const OracleOptions& opts) {
  return brute_force_count(g, spec.family, spec.s, spec.q_low, spec.q_high, opts);
}

namespace {

bool extend_all(const Graph& g, Family family, int s, std::vector<VertexId>& cur, std::span<const VertexId> c1,
                std::size_t from, VertexId u) {
  cur.push_back(u);
  const bool ok = is_hcs(family, s, g, cur);
  cur.pop_back();
  if (!ok) return false;
  for (std::size_t i = from; i < c1.size(); ++i) {
    cur.push_back(c1[i]);
    const bool valid = is_hcs(family, s, g, cur);
    const bool fine = !valid || extend_all(g, family, s, cur, c1, i + 1, u);
    cur.pop_back();
    if (!fine) return false;
  }
  return true;
}

}  // namespace

bool brute_force_pivot_check(const Graph& g, Family family, int s, std::span<const VertexId> r,
                             std::span<const VertexId> c1, VertexId u) {
  std::vector<VertexId> cur(r.begin(), r.end());
  if (!is_hcs(family, s, g, cur)) return true;
  return extend_all(g, family, s, cur, c1, 0, u);
}

}  // namespace hcs
