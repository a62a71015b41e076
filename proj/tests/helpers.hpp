#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hcs/graph.hpp"

#ifndef HCS_TEST_DATA
#define HCS_TEST_DATA "tests/data"
#endif

inline hcs::Graph parse(const std::string& text, hcs::LoadStats* st = nullptr) {
  std::istringstream in(text);
  return hcs::load_edge_list(in, st);
}

inline hcs::Graph example7() { return hcs::load_edge_list_file(std::string(HCS_TEST_DATA) + "/example7.txt"); }

inline hcs::Graph from_pairs(std::size_t n, std::vector<std::pair<hcs::VertexId, hcs::VertexId>> e) {
  return hcs::Graph::from_edges(n, e);
}
