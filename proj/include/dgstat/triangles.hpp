#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "dgstat/graph.hpp"
#include "dgstat/types.hpp"

namespace dgstat {

/// Two-edge paths u-w-v whose middle vertex w lies outside the core.
/// `color_counts` / `color_weights` are indexed by the middle vertex's color
/// and are only sized when the corresponding features are enabled.
struct PathCell {
  std::uint64_t count = 0;
  double weight_sum = 0.0;
  std::vector<std::uint64_t> color_counts;
  std::vector<double> color_weights;

  friend bool operator==(const PathCell&, const PathCell&) = default;
};

/// Sparse table of PathCells keyed by unordered vertex pair. Only cells with
/// a nonzero path count are stored; a cell is dropped when its count reaches
/// zero regardless of its weight.
class PathTable {
 public:
  using Map = std::unordered_map<VertexPair, PathCell, VertexPairHash>;

  PathTable(std::uint32_t colors, bool weighted)
      : colors_(colors), weighted_(weighted) {}

  void add(VertexPair key, double weight, ColorId middle_color);
  void subtract(VertexPair key, double weight, ColorId middle_color);

  const PathCell* find(VertexId u, VertexId v) const;
  std::size_t size() const noexcept { return cells_.size(); }
  const Map& cells() const noexcept { return cells_; }

  friend bool operator==(const PathTable& a, const PathTable& b) {
    return a.cells_ == b.cells_;
  }

 private:
  std::uint32_t colors_;
  bool weighted_;
  Map cells_;
};

/// Colors of a triangle's vertices, sorted ascending.
using ColorTriple = std::array<ColorId, 3>;

ColorTriple make_color_triple(ColorId a, ColorId b, ColorId c);

/// Common neighbours of an edge's endpoints, split by the caller-visible
/// features. `weight` is the sum over third vertices w of w_uw * w_wv (the
/// edge's own weight is not included); the per-color vectors are indexed by
/// the color of w.
struct EdgeTriangles {
  std::uint64_t count = 0;
  double weight = 0.0;
  std::vector<std::uint64_t> by_color;
  std::vector<double> weight_by_color;
};

struct TriangleInstrumentation {
  /// Core membership probes plus one per path-table lookup.
  std::uint64_t probes = 0;
  /// Path-table cell updates caused directly by edge insertions/deletions.
  std::uint64_t path_touches = 0;
  /// Path-table cell updates caused by core membership changes.
  std::uint64_t rebuild_touches = 0;
  /// Cell updates of the most recent edge update (excluding rebuilds).
  std::uint64_t last_edge_touches = 0;
};

/// Triangle count, total triangle weight and colored triangle census of a
/// DynamicGraph. Third vertices in the core are found by scanning the core;
/// the rest come from a single PathTable lookup, so every edge update costs
/// O(|core| + k) plus the path-table maintenance of its non-core endpoints.
class TriangleCounter : public GraphListener {
 public:
  explicit TriangleCounter(const DynamicGraph& graph);

  EdgeTriangles count_for_edge(VertexId u, VertexId v) const;

  void on_edge_pre_insert(VertexId u, VertexId v, double w) override;
  void on_edge_post_insert(VertexId u, VertexId v, double w) override;
  void on_edge_pre_delete(VertexId u, VertexId v, double w) override;
  void on_core_event(const CoreEvent& e) override;

  std::uint64_t triangle_count() const noexcept { return c3_; }
  double total_weight() const;
  const std::map<ColorTriple, std::uint64_t>& color_census() const;
  /// Total triangle weight per color triple; needs both features.
  const std::map<ColorTriple, double>& color_weight_census() const;

  const PathTable& path_table() const noexcept { return table_; }
  const TriangleInstrumentation& instrumentation() const noexcept {
    return instr_;
  }

 private:
  void apply(VertexId u, VertexId v, double w, const EdgeTriangles& found,
             int sign);
  void update_paths(VertexId u, VertexId v, double w, int sign);
  void add_color(const ColorTriple& key, std::uint64_t count, double weight,
                 int sign);

  const DynamicGraph& graph_;
  bool weighted_;
  std::uint32_t colors_;
  PathTable table_;
  std::uint64_t c3_ = 0;
  double total_weight_ = 0.0;
  std::map<ColorTriple, std::uint64_t> color_counts_;
  std::map<ColorTriple, double> color_weights_;
  mutable TriangleInstrumentation instr_;
};

}  // namespace dgstat
