#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hcs {

using VertexId = std::uint32_t;
using EdgeId = std::uint64_t;
inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);
inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LoadStats {
  std::size_t lines = 0;
  std::size_t comment_lines = 0;
  std::size_t data_lines = 0;
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;  // repeated pairs after symmetrization
};

/// Immutable undirected simple graph in CSR form. Vertex ids are dense
/// (0..n-1); the id each vertex had in the input is kept in original_ids().
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds from an arbitrary pair list over dense ids. Self-loops and
  /// duplicates (in either direction) are dropped and tallied in `stats`.
  static Graph from_edges(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges,
                          LoadStats* stats = nullptr);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return edge_ends_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(VertexId u, VertexId v) const;

  /// Id in 0..m-1 of the undirected edge {u,v}, or kNoEdge.
  EdgeId edge_id(VertexId u, VertexId v) const;
  /// Endpoints of an edge id, with first < second.
  std::pair<VertexId, VertexId> edge(EdgeId e) const { return edge_ends_[e]; }

  std::span<const std::int64_t> original_ids() const { return original_ids_; }
  std::int64_t original_id(VertexId v) const { return original_ids_[v]; }
  void set_original_ids(std::vector<std::int64_t> ids);

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
  // For each CSR slot, the undirected edge id it belongs to.
  std::vector<EdgeId> slot_edge_;
  std::vector<std::pair<VertexId, VertexId>> edge_ends_;
  std::vector<std::int64_t> original_ids_;
};

/// Reads a SNAP-style edge list: '#' comment lines, two integer ids per data
/// line. Directed input is symmetrized; ids are densified in order of first
/// appearance sorted ascending by original id.
Graph load_edge_list(std::istream& in, LoadStats* stats = nullptr);
Graph load_edge_list_file(const std::string& path, LoadStats* stats = nullptr);

void write_edge_list(std::ostream& out, const Graph& g, bool original_ids = true);

}  // namespace hcs
