#include "hcs/report.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <tuple>

namespace hcs {

nlohmann::json run_report(const RunInfo& info, const SizeCounts& counts, const SearchStats& stats,
                          std::optional<double> combinatorial_fraction) {
  nlohmann::json j;
  j["input"] = info.input;
  j["graph"] = {{"n", info.n},
                {"m", info.m},
                {"degeneracy", info.degeneracy},
                {"lines", info.load.lines},
                {"comment_lines", info.load.comment_lines},
                {"self_loops", info.load.self_loops},
                {"duplicates", info.load.duplicates}};
  j["spec"] = {{"motif", to_string(info.spec.family)},
               {"s", info.spec.s},
               {"q_low", info.spec.q_low},
               {"q_high", info.spec.q_high}};
  j["method"] = info.method;
  j["prune"] = info.prune;
  j["threads"] = info.threads;
  nlohmann::json c = nlohmann::json::object();
  for (int q = counts.q_low; q <= counts.q_high; ++q) c[std::to_string(q)] = to_decimal(counts.at(q));
  j["counts"] = c;
  j["total"] = to_decimal(counts.total());
  j["wall_seconds"] = info.seconds;
  j["peak_rss_kib"] = peak_rss_kib();
  nlohmann::json s = {{"roots", stats.roots},
                      {"nodes", stats.nodes},
                      {"branches", stats.branches},
                      {"pruned_branches", stats.pruned_branches},
                      {"pivots", stats.pivots},
                      {"pivot_fallbacks", stats.pivot_fallbacks},
                      {"leaves", stats.leaves},
                      {"closures", stats.closures},
                      {"candidates_before", stats.candidates_before},
                      {"candidates_after", stats.candidates_after},
                      {"reduction_rate", stats.reduction_rate()}};
  if (combinatorial_fraction) s["combinatorial_fraction"] = *combinatorial_fraction;
  j["stats"] = s;
  return j;
}

std::optional<std::string> ratio_decimal(const BigCount& num, const BigCount& den, int digits) {
  if (den == 0) return std::nullopt;
  BigCount scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigCount scaled = (num * scale * 2 + den) / (den * 2);
  const BigCount whole = scaled / scale;
  std::string frac = to_decimal(BigCount(scaled % scale));
  if (digits == 0) return to_decimal(whole);
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return to_decimal(whole) + "." + frac;
}

std::string ratio_exact(const BigCount& num, const BigCount& den) {
  if (den == 0) return "undefined";
  const BigCount g = boost::multiprecision::gcd(num, den);
  if (g == 0) return "0/1";
  return to_decimal(BigCount(num / g)) + "/" + to_decimal(BigCount(den / g));
}

nlohmann::json hgp_profile(const MotifSpec& spec, const SizeCounts& hcs, const SizeCounts& cliques) {
  nlohmann::json j;
  j["motif"] = to_string(spec.family);
  j["s"] = spec.s;
  j["q_low"] = hcs.q_low;
  j["q_high"] = hcs.q_high;
  nlohmann::json sizes = nlohmann::json::array();
  for (int q = hcs.q_low; q <= hcs.q_high; ++q) {
    const BigCount& h = hcs.at(q);
    const BigCount& c = cliques.at(q);
    nlohmann::json e = {{"q", q}, {"clique_count", to_decimal(c)}, {"hcs_count", to_decimal(h)}};
    if (auto r = ratio_decimal(c, h)) {
      e["ratio"] = *r;
      e["ratio_exact"] = ratio_exact(c, h);
    } else {
      e["ratio"] = nullptr;
      e["ratio_exact"] = nullptr;
    }
    sizes.push_back(e);
  }
  j["profile"] = sizes;
  return j;
}

void write_vertex_tsv(std::ostream& out, const Graph& g, const std::vector<BigCount>& counts) {
  std::vector<VertexId> order(g.num_vertices());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return g.original_id(a) < g.original_id(b); });
  for (VertexId v : order) out << g.original_id(v) << '\t' << to_decimal(counts[v]) << '\n';
}

void write_edge_tsv(std::ostream& out, const Graph& g, const std::vector<BigCount>& counts) {
  std::vector<std::tuple<std::int64_t, std::int64_t, EdgeId>> rows;
  rows.reserve(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.edge(e);
    auto oa = g.original_id(a), ob = g.original_id(b);
    if (oa > ob) std::swap(oa, ob);
    rows.emplace_back(oa, ob, e);
  }
  std::sort(rows.begin(), rows.end());
  for (const auto& [a, b, e] : rows) out << a << '\t' << b << '\t' << to_decimal(counts[e]) << '\n';
}

long peak_rss_kib() {
  rusage ru{};
  if (getrusage(RUSAGE_SELF, &ru) != 0) return 0;
  return ru.ru_maxrss;
}

}  // namespace hcs
