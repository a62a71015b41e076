#pragma once

// Three-way agreement between the oracle and both engines, plus the random
// corpus and counterexample shrinking used by `hcs verify` and the tests.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hcs/engine.hpp"
#include "hcs/graph.hpp"

namespace hcs {

struct CorpusEntry {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double p = 0;
};

/// n in 15..35 and p in {0.2, 0.4, 0.6}, both drawn from the seed.
CorpusEntry corpus_entry(std::uint64_t seed);
Graph corpus_graph(const CorpusEntry& e);

/// Range specs for both motifs and s in {0, 1, 2}: [max(s+2, 2s+1), q_max].
std::vector<MotifSpec> spec_matrix(int q_max = 7, int s_max = 2);

struct AgreementOptions {
  EngineOptions engine;
  bool local = true;
};

struct Disagreement {
  MotifSpec spec;
  int q = 0;
  std::string what;
};

/// Compares oracle, listing (one run per q), pivot (one range run) and, if
/// requested, per-vertex and per-edge local counts. Empty result means full
/// agreement. Throws OracleInfeasible when the oracle refuses.
std::vector<Disagreement> check_agreement(const Graph& g, const MotifSpec& spec, const AgreementOptions& opts);

/// Deletes vertices, then edges, while `fails` keeps returning true.
Graph minimize_counterexample(const Graph& g, const std::function<bool(const Graph&)>& fails);

/// Graph with `drop` removed (kNoVertex keeps all vertices) and edge `skip`
/// removed (kNoEdge keeps all). Original ids are carried over.
Graph without(const Graph& g, VertexId drop, EdgeId skip);

}  // namespace hcs
