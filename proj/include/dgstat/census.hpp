#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dgstat/graph.hpp"
#include "dgstat/triangles.hpp"

namespace dgstat {

using Count128 = unsigned __int128;

/// Induced three-vertex subgraphs by edge count: g[i] triples span i edges.
struct InducedCensus {
  std::uint64_t g0 = 0, g1 = 0, g2 = 0, g3 = 0;
  friend bool operator==(const InducedCensus&, const InducedCensus&) = default;
};

/// Non-induced three-vertex subgraph counts:
/// (C(n,3), m(n-2), p2, c3).
struct NoninducedCounts {
  std::uint64_t triples = 0, one_edge = 0, two_path = 0, triangle = 0;
  friend bool operator==(const NoninducedCounts&, const NoninducedCounts&) = default;
};

/// C(d, i) in 128-bit arithmetic.
Count128 binomial(std::uint64_t d, unsigned i);

/// Degree-polynomial and path statistics that ride along with the triangle
/// counter:
///   p2         two-edge paths, sum_v C(d_v, 2)
///   stars[i]   sum_v C(d_v, i) for 1 <= i <= k_star
///   q          sum over edges xy of (d_x - 1)(d_y - 1); every simple
///              three-edge path once, every triangle three times
///   P_v        sum over neighbours w of (d_w - 1), stored for core vertices
///
/// Both edge hooks run before the graph changes, so every delta below is
/// expressed in pre-update degrees.
class CensusCounter : public GraphListener {
 public:
  static constexpr unsigned kMaxStar = 8;

  CensusCounter(const DynamicGraph& graph, const TriangleCounter& triangles,
                unsigned k_star = 4);

  void on_edge_pre_insert(VertexId u, VertexId v, double w) override;
  void on_edge_pre_delete(VertexId u, VertexId v, double w) override;
  void on_core_event(const CoreEvent& e) override;

  std::uint64_t p2() const noexcept { return p2_; }
  std::uint64_t q() const noexcept { return q_; }
  unsigned k_star() const noexcept { return k_star_; }
  Count128 star_count(unsigned i) const;
  std::uint64_t path3_count() const;
  InducedCensus induced_census() const;
  NoninducedCounts noninduced_counts() const;

  const std::unordered_map<VertexId, std::uint64_t>& endpoint_paths() const noexcept {
    return endpoint_paths_;
  }

 private:
  std::uint64_t endpoint_paths_of(VertexId v) const;
  void adjust_core_neighbors(VertexId u, VertexId v, int sign);

  const DynamicGraph& graph_;
  const TriangleCounter& triangles_;
  unsigned k_star_;
  std::uint64_t p2_ = 0;
  std::uint64_t q_ = 0;
  std::vector<Count128> stars_;  // index i holds s_i; slot 0 unused
  std::unordered_map<VertexId, std::uint64_t> endpoint_paths_;
};

}  // namespace dgstat
