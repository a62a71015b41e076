#include <doctest.h>

#include <queue>

#include "helpers.hpp"
#include "hcs/generators.hpp"
#include "hcs/neighborhood.hpp"
#include "hcs/ordering.hpp"

using namespace hcs;

TEST_CASE("load: triangle, dedup, self-loops, comments") {
  Graph t = parse("0 1\n1 2\n2 0\n");
  CHECK(t.num_vertices() == 3);
  CHECK(t.num_edges() == 3);

  LoadStats st;
  Graph e = parse("# header\n0 1\n1 0\n0 0\n", &st);
  CHECK(e.num_vertices() == 2);
  CHECK(e.num_edges() == 1);
  CHECK(st.self_loops == 1);
  CHECK(st.duplicates == 1);
  CHECK(st.comment_lines == 1);

  CHECK(parse("").num_vertices() == 0);
  CHECK(parse("# only comments\n").num_edges() == 0);
}

TEST_CASE("load: ids are densified, originals kept") {
  Graph g = parse("100 7\n7 42\n");
  REQUIRE(g.num_vertices() == 3);
  CHECK(g.original_id(0) == 7);
  CHECK(g.original_id(1) == 42);
  CHECK(g.original_id(2) == 100);
  CHECK(g.has_edge(0, 2));
  CHECK(!g.has_edge(1, 2));
}

TEST_CASE("load: malformed lines report the line number") {
  try {
    parse("0 1\n\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("5\n"), ParseError);
}

TEST_CASE("csr: sorted symmetric adjacency, edge ids round-trip") {
  Graph g = random_gnp(40, 0.3, 5);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    for (VertexId w : nb) CHECK(g.has_edge(w, v));
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.edge(e);
    CHECK(a < b);
    CHECK(g.edge_id(a, b) == e);
    CHECK(g.edge_id(b, a) == e);
  }
}

namespace {

// Core numbers by repeated deletion of a minimum-degree vertex.
std::vector<std::uint32_t> cores_by_deletion(const Graph& g) {
  const auto n = g.num_vertices();
  std::vector<int> deg(n);
  std::vector<std::uint32_t> core(n);
  std::vector<char> gone(n, 0);
  for (VertexId v = 0; v < n; ++v) deg[v] = static_cast<int>(g.degree(v));
  int k = 0;
  for (std::size_t step = 0; step < n; ++step) {
    VertexId best = kNoVertex;
    for (VertexId v = 0; v < n; ++v) {
      if (!gone[v] && (best == kNoVertex || deg[v] < deg[best])) best = v;
    }
    k = std::max(k, deg[best]);
    core[best] = k;
    gone[best] = 1;
    for (VertexId w : g.neighbors(best)) deg[w] -= !gone[w];
  }
  return core;
}

}  // namespace

TEST_CASE("degeneracy: small cases") {
  auto tri = degeneracy_order(parse("0 1\n1 2\n2 0\n"));
  CHECK(tri.degeneracy == 2);
  CHECK(tri.core_numbers == std::vector<std::uint32_t>{2, 2, 2});
  CHECK(degeneracy_order(parse("0 1\n1 2\n")).degeneracy == 1);
  CHECK(degeneracy_order(Graph{}).degeneracy == 0);
}

TEST_CASE("degeneracy: matches deletion oracle, out-degree bounded") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = random_gnp(50, 0.2, seed);
    auto ord = degeneracy_order(g);
    auto want = cores_by_deletion(g);
    CHECK(ord.core_numbers == want);
    CHECK(ord.degeneracy == *std::max_element(want.begin(), want.end()));
    for (std::size_t i = 0; i < ord.order.size(); ++i) {
      const VertexId v = ord.order[i];
      CHECK(ord.rank[v] == i);
      CHECK(ord.out_degree(g, v) <= static_cast<std::size_t>(ord.degeneracy));
      // v has minimum degree among the not-yet-removed vertices.
      std::size_t dv = 0;
      for (VertexId w : g.neighbors(v)) dv += ord.rank[w] > i;
      for (std::size_t j = i + 1; j < ord.order.size(); ++j) {
        std::size_t dw = 0;
        for (VertexId x : g.neighbors(ord.order[j])) dw += ord.rank[x] >= i;
        CHECK(dv <= dw);
      }
    }
  }
}

namespace {

std::vector<VertexId> bfs_candidates(const Graph& g, const DegeneracyOrder& ord, VertexId root) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::queue<VertexId> q;
  dist[root] = 0;
  q.push(root);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    if (dist[v] == 2) continue;
    for (VertexId w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (dist[v] > 0 && ord.rank[v] > ord.rank[root]) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("root neighborhood: path and star") {
  Graph path = parse("0 1\n1 2\n");
  DegeneracyOrder ord;
  ord.order = {0, 1, 2};
  ord.rank = {0, 1, 2};
  ord.core_numbers = {1, 1, 1};
  ord.degeneracy = 1;
  auto rn = build_root_neighborhood(path, ord, 0);
  CHECK(rn.candidates() == std::vector<VertexId>{1, 2});
  CHECK(rn.hop == std::vector<std::uint8_t>{0, 1, 2});

  Graph star = parse("0 1\n0 2\n0 3\n");
  DegeneracyOrder sord;
  sord.order = {0, 1, 2, 3};
  sord.rank = {0, 1, 2, 3};
  sord.core_numbers = {1, 1, 1, 1};
  sord.degeneracy = 1;
  auto center = build_root_neighborhood(star, sord, 0);
  CHECK(center.candidates() == std::vector<VertexId>{1, 2, 3});
  CHECK(std::count(center.hop.begin(), center.hop.end(), 1) == 3);
}

TEST_CASE("root neighborhood: BFS oracle, local adjacency, edge coverage") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Graph g = random_gnp(35, 0.15, seed);
    auto ord = degeneracy_order(g);
    std::vector<int> covered(g.num_edges(), 0);
    for (VertexId root = 0; root < g.num_vertices(); ++root) {
      auto rn = build_root_neighborhood(g, ord, root);
      CHECK(rn.candidates() == bfs_candidates(g, ord, root));
      const auto& vs = rn.vertices;
      for (LocalId a = 0; a < vs.size(); ++a) {
        for (LocalId b = 0; b < vs.size(); ++b) {
          if (a != b) CHECK(rn.adjacency.adjacent(a, b) == g.has_edge(vs[a], vs[b]));
        }
        if (a > 0) CHECK(rn.hop[a] == (g.has_edge(root, vs[a]) ? 1 : 2));
      }
      for (VertexId w : g.neighbors(root)) {
        if (ord.rank[w] > ord.rank[root]) ++covered[g.edge_id(root, w)];
      }
    }
    CHECK(std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; }));
  }
}

TEST_CASE("local graph: induced subgraph relabels") {
  LocalGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 3);
  g.add_edge(3, 4);
  const std::vector<LocalId> keep{1, 3, 4};
  LocalGraph h = g.induced(keep);
  CHECK(h.size() == 3);
  CHECK(h.adjacent(0, 1));
  CHECK(h.adjacent(1, 2));
  CHECK(!h.adjacent(0, 2));
}
