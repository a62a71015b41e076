#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "hcs/generators.hpp"
#include "hcs/ordering.hpp"
#include "hcs/pivot_counter.hpp"
#include "hcs/report.hpp"

using namespace hcs;

TEST_CASE("ratios") {
  CHECK(ratio_decimal(1, 3, 5) == std::optional<std::string>("0.33333"));
  CHECK(ratio_decimal(2, 3, 3) == std::optional<std::string>("0.667"));
  CHECK(ratio_decimal(7, 2, 0) == std::optional<std::string>("4"));
  CHECK(ratio_decimal(5, 0) == std::nullopt);
  CHECK(ratio_exact(6, 14) == "3/7");
  CHECK(ratio_exact(0, 5) == "0/1");
}

TEST_CASE("run report keeps counts exact") {
  RunInfo info;
  info.spec = MotifSpec::single(Family::clique, 0, 20);
  SizeCounts c(20, 20);
  c.at(20) = BigCount("535983370403809682970");
  auto j = run_report(info, c, SearchStats{}, 0.5);
  CHECK(j["counts"]["20"] == "535983370403809682970");
  CHECK(j["total"] == "535983370403809682970");
  CHECK(j["spec"]["motif"] == "clique");
  CHECK(j["stats"]["combinatorial_fraction"] == 0.5);
}

TEST_CASE("profile: complete graph has ratio 1, empty sizes are null") {
  Graph g = complete_graph(6);
  auto ord = degeneracy_order(g);
  const auto spec = MotifSpec::range(Family::plex, 1, 3, 7);
  auto h = count_by_pivot(g, ord, spec).counts;
  auto c = count_by_pivot(g, ord, MotifSpec::range(Family::clique, 0, 3, 7)).counts;
  auto j = hgp_profile(spec, h, c);
  REQUIRE(j["profile"].size() == 5);
  for (int i = 0; i < 4; ++i) {
    CHECK(j["profile"][i]["ratio_exact"] == "1/1");
    CHECK(j["profile"][i]["clique_count"] == j["profile"][i]["hcs_count"]);
  }
  CHECK(j["profile"][4]["hcs_count"] == "0");
  CHECK(j["profile"][4]["ratio"].is_null());
}

TEST_CASE("tsv writers use original ids") {
  Graph g = parse("10 30\n30 20\n");
  std::ostringstream v, e;
  std::vector<BigCount> vc(g.num_vertices());
  for (VertexId x = 0; x < g.num_vertices(); ++x) vc[x] = g.original_id(x);
  write_vertex_tsv(v, g, vc);
  CHECK(v.str() == "10\t10\n20\t20\n30\t30\n");
  std::vector<BigCount> ec(g.num_edges());
  for (EdgeId x = 0; x < g.num_edges(); ++x) ec[x] = g.original_id(g.edge(x).first) + g.original_id(g.edge(x).second);
  write_edge_tsv(e, g, ec);
  CHECK(e.str() == "10\t30\t40\n20\t30\t50\n");
}
