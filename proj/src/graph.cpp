#include "hcs/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>

namespace hcs {

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges,
                        LoadStats* stats) {
  std::vector<std::pair<VertexId, VertexId>> canon;
  canon.reserve(edges.size());
  std::size_t loops = 0;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u == v) {
      ++loops;
      continue;
    }
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  auto last = std::unique(canon.begin(), canon.end());
  std::size_t dups = static_cast<std::size_t>(canon.end() - last);
  canon.erase(last, canon.end());
  if (stats) {
    stats->self_loops += loops;
    stats->duplicates += dups;
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : canon) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adjacency_.resize(2 * canon.size());
  g.slot_edge_.resize(2 * canon.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // canon is sorted by (u, v), so every list is filled in ascending order:
  // first the smaller neighbors (arriving as the v side), then the larger.
  for (EdgeId e = 0; e < canon.size(); ++e) {
    auto [u, v] = canon[e];
    g.adjacency_[fill[v]] = u;
    g.slot_edge_[fill[v]++] = e;
  }
  for (EdgeId e = 0; e < canon.size(); ++e) {
    auto [u, v] = canon[e];
    g.adjacency_[fill[u]] = v;
    g.slot_edge_[fill[u]++] = e;
  }
  g.edge_ends_ = std::move(canon);
  g.original_ids_.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.original_ids_[i] = static_cast<std::int64_t>(i);
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const { return edge_id(u, v) != kNoEdge; }

EdgeId Graph::edge_id(VertexId u, VertexId v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return kNoEdge;
  return slot_edge_[offsets_[u] + static_cast<std::size_t>(it - nbrs.begin())];
}

void Graph::set_original_ids(std::vector<std::int64_t> ids) {
  if (ids.size() != num_vertices()) throw std::invalid_argument("original id map has wrong size");
  original_ids_ = std::move(ids);
}

namespace {

bool parse_token(std::string_view tok, std::int64_t& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && p == tok.data() + tok.size();
}

}  // namespace

Graph load_edge_list(std::istream& in, LoadStats* stats) {
  LoadStats local;
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    auto first = sv.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    sv.remove_prefix(first);
    if (sv.front() == '#') {
      ++local.comment_lines;
      continue;
    }
    std::string_view toks[3];
    std::size_t ntok = 0;
    while (!sv.empty() && ntok < 3) {
      auto end = sv.find_first_of(" \t\r");
      toks[ntok++] = sv.substr(0, end);
      if (end == std::string_view::npos) break;
      sv.remove_prefix(end);
      auto next = sv.find_first_not_of(" \t\r");
      if (next == std::string_view::npos) break;
      sv.remove_prefix(next);
    }
    if (ntok != 2) throw ParseError(lineno, "expected two vertex ids, found " +
                                                (ntok < 2 ? std::to_string(ntok) : "more"));
    std::int64_t a = 0, b = 0;
    if (!parse_token(toks[0], a)) throw ParseError(lineno, "malformed vertex id '" + std::string(toks[0]) + "'");
    if (!parse_token(toks[1], b)) throw ParseError(lineno, "malformed vertex id '" + std::string(toks[1]) + "'");
    raw.emplace_back(a, b);
    ++local.data_lines;
  }
  local.lines = lineno;

  std::vector<std::int64_t> ids;
  ids.reserve(raw.size() * 2);
  for (auto [a, b] : raw) {
    ids.push_back(a);
    ids.push_back(b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto dense = [&](std::int64_t x) {
    return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
  };
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(raw.size());
  for (auto [a, b] : raw) edges.emplace_back(dense(a), dense(b));
  raw.clear();
  raw.shrink_to_fit();

  Graph g = Graph::from_edges(ids.size(), edges, &local);
  g.set_original_ids(std::move(ids));
  if (stats) *stats = local;
  return g;
}

Graph load_edge_list_file(const std::string& path, LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_edge_list(in, stats);
}

void write_edge_list(std::ostream& out, const Graph& g, bool original_ids) {
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    if (original_ids) {
      out << g.original_id(u) << '\t' << g.original_id(v) << '\n';
    } else {
      out << u << '\t' << v << '\n';
    }
  }
}

}  // namespace hcs
