#pragma once

// Root-level drivers. Each root's search is independent, so the serial
// driver and the OpenMP driver run the same per-root kernel; only the
// scheduling differs. The serial one is the reference: it visits roots in
// degeneracy order on a single worker.

#include <exception>
#include <optional>
#include <vector>

#include <omp.h>

#include "hcs/ordering.hpp"

namespace hcs {

int resolve_threads(int requested);

template <class Worker, class Make, class Body>
std::vector<Worker> run_roots_serial(const DegeneracyOrder& ord, Make&& make, Body&& body) {
  std::vector<Worker> workers;
  workers.push_back(make());
  for (VertexId root : ord.order) body(workers.front(), root);
  return workers;
}

template <class Worker, class Make, class Body>
std::vector<Worker> run_roots_parallel(const DegeneracyOrder& ord, int threads, Make&& make, Body&& body) {
  const int t = resolve_threads(threads);
  std::vector<std::optional<Worker>> slots(static_cast<std::size_t>(t));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(t));
  const auto n = static_cast<long>(ord.order.size());
#pragma omp parallel num_threads(t)
  {
    const auto me = static_cast<std::size_t>(omp_get_thread_num());
    try {
      slots[me].emplace(make());
    } catch (...) {
      errors[me] = std::current_exception();
    }
#pragma omp for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) {
      if (errors[me]) continue;
      try {
        body(*slots[me], ord.order[static_cast<std::size_t>(i)]);
      } catch (...) {
        errors[me] = std::current_exception();
      }
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Worker> workers;
  for (auto& s : slots) {
    if (s) workers.push_back(std::move(*s));
  }
  return workers;
}

template <class Worker, class Make, class Body>
std::vector<Worker> run_roots(const DegeneracyOrder& ord, int threads, Make&& make, Body&& body) {
  if (resolve_threads(threads) == 1) return run_roots_serial<Worker>(ord, make, body);
  return run_roots_parallel<Worker>(ord, threads, make, body);
}

}  // namespace hcs
