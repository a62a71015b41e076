#include <algorithm>
#include <cstdlib>
#include <string>

#include "hcs/engine.hpp"
#include "hcs/parallel.hpp"

namespace hcs {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HCS_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t > 0) return t;
    } catch (const std::exception&) {
    }
  }
  return std::max(1, omp_get_max_threads());
}

void SearchStats::merge(const SearchStats& o) {
  roots += o.roots;
  nodes += o.nodes;
  branches += o.branches;
  pruned_branches += o.pruned_branches;
  pivots += o.pivots;
  pivot_fallbacks += o.pivot_fallbacks;
  leaves += o.leaves;
  closures += o.closures;
  candidates_before += o.candidates_before;
  candidates_after += o.candidates_after;
}

BigCount SizeCounts::total() const {
  BigCount t = 0;
  for (const auto& c : by_size) t += c;
  return t;
}

}  // namespace hcs
