#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace pdmatch {

/// Bipartite graph whose left vertices have degree cap 1 and whose right
/// vertices carry individual caps.
struct CapacitatedBipartiteGraph {
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (left, right)
  std::vector<std::size_t> right_caps;
};

struct GeneralGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Maximum-cardinality edge subset with left degrees <= 1 and right degrees
/// <= right_caps. Solved as unit-capacity max flow (Dinic). The result is
/// sorted by left vertex. Throws std::invalid_argument on malformed input.
std::vector<std::pair<std::size_t, std::size_t>> max_b_matching(const CapacitatedBipartiteGraph& g);

/// Maximum-cardinality matching in a general (non-bipartite) graph via
/// Edmonds' blossom contraction. Each returned pair has first < second;
/// pairs are sorted. Throws std::invalid_argument on self-loops, duplicate
/// edges or out-of-range endpoints.
std::vector<std::pair<std::size_t, std::size_t>> max_general_matching(const GeneralGraph& g);

}  // namespace pdmatch
