#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "dgstat/census.hpp"
#include "dgstat/graph.hpp"
#include "dgstat/triangles.hpp"

namespace dgstat {

struct EngineOptions {
  bool weighted = false;
  std::uint32_t colors = 0;
  bool census = true;
  unsigned k_star = 4;
};

struct CensusStatistics {
  InducedCensus induced;
  NoninducedCounts noninduced;
  std::uint64_t p2 = 0;
  std::uint64_t q = 0;
  std::uint64_t p3 = 0;
  std::vector<Count128> stars;  // s_1 .. s_k

  friend bool operator==(const CensusStatistics&, const CensusStatistics&) = default;
};

/// A point-in-time copy of every maintained statistic.
struct Statistics {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t h = 0;
  std::size_t core_size = 0;
  std::uint64_t c3 = 0;
  std::optional<double> total_weight;
  std::optional<std::map<ColorTriple, std::uint64_t>> color_census;
  std::optional<CensusStatistics> census;

  friend bool operator==(const Statistics&, const Statistics&) = default;
};

/// A DynamicGraph wired to a TriangleCounter and, optionally, a
/// CensusCounter. All updates go through the engine.
class Engine {
 public:
  explicit Engine(EngineOptions options = {});

  void add_vertex(VertexId v, std::optional<ColorId> color = std::nullopt) {
    graph_->add_vertex(v, color);
  }
  void remove_vertex(VertexId v) { graph_->remove_vertex(v); }
  void add_edge(VertexId u, VertexId v, std::optional<double> weight = std::nullopt) {
    graph_->add_edge(u, v, weight);
  }
  void remove_edge(VertexId u, VertexId v) { graph_->remove_edge(u, v); }

  const EngineOptions& options() const noexcept { return options_; }
  const DynamicGraph& graph() const noexcept { return *graph_; }
  const TriangleCounter& triangles() const noexcept { return *triangles_; }
  bool has_census() const noexcept { return census_ != nullptr; }
  /// Throws Error(kFeatureDisabled) when the census was not enabled.
  const CensusCounter& census() const;

  Statistics statistics() const;

 private:
  EngineOptions options_;
  std::unique_ptr<DynamicGraph> graph_;
  std::unique_ptr<TriangleCounter> triangles_;
  std::unique_ptr<CensusCounter> census_;
};

}  // namespace dgstat
