#include "hcs/local_graph.hpp"

namespace hcs {

LocalGraph LocalGraph::induced(std::span<const LocalId> keep) const {
  LocalGraph out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (adjacent(keep[i], keep[j])) out.add_edge(static_cast<LocalId>(i), static_cast<LocalId>(j));
    }
  }
  return out;
}

}  // namespace hcs
