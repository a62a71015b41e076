#pragma once

#include <cstdint>

#include "hcs/graph.hpp"

namespace hcs {

/// Erdős–Rényi G(n, p), deterministic for a given seed.
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);
Graph complete_graph(std::size_t n);
/// K_{2k} minus a perfect matching: vertices 2i and 2i+1 are not adjacent.
Graph cocktail_party(std::size_t k);
/// Preferential attachment: every new vertex links to `m` earlier vertices
/// chosen proportionally to degree. Heavy-tailed, low degeneracy.
Graph preferential_attachment(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace hcs
