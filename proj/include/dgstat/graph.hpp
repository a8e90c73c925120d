#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dgstat/gradual.hpp"
#include "dgstat/types.hpp"

namespace dgstat {

struct GraphOptions {
  bool weighted = false;
  /// Number of vertex colors; 0 disables coloring.
  std::uint32_t colors = 0;
};

struct VertexRecord {
  std::unordered_set<VertexId> neighbors;
  ColorId color = 0;

  std::size_t degree() const noexcept { return neighbors.size(); }
};

struct EdgeRecord {
  double weight = 1.0;
};

/// Receives graph updates from DynamicGraph. For an edge insertion the calls
/// arrive as: pre_insert (edge absent, old degrees), post_insert (edge
/// present, core not yet updated), then one on_core_event per core change.
/// For a deletion: core events first (edge still present), pre_delete (edge
/// present, core final), post_delete (edge gone).
class GraphListener {
 public:
  virtual ~GraphListener() = default;

  virtual void on_vertex_added(VertexId) {}
  virtual void on_vertex_removed(VertexId) {}
  virtual void on_edge_pre_insert(VertexId, VertexId, double) {}
  virtual void on_edge_post_insert(VertexId, VertexId, double) {}
  virtual void on_edge_pre_delete(VertexId, VertexId, double) {}
  virtual void on_edge_post_delete(VertexId, VertexId, double) {}
  virtual void on_core_event(const CoreEvent&) {}
};

/// Undirected simple graph under edge and isolated-vertex updates. Degrees
/// feed a GradualPartition; updates are dispatched to listeners in
/// registration order. Listeners are held by reference and must outlive the
/// graph or be removed first.
class DynamicGraph {
 public:
  explicit DynamicGraph(GraphOptions options = {});

  DynamicGraph(const DynamicGraph&) = delete;
  DynamicGraph& operator=(const DynamicGraph&) = delete;

  void add_listener(GraphListener& listener);
  void remove_listener(GraphListener& listener);

  void add_vertex(VertexId v, std::optional<ColorId> color = std::nullopt);
  void remove_vertex(VertexId v);
  void add_edge(VertexId u, VertexId v, std::optional<double> weight = std::nullopt);
  void remove_edge(VertexId u, VertexId v);

  bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
  bool has_edge(VertexId u, VertexId v) const {
    return edges_.count(VertexPair(u, v)) != 0;
  }
  std::size_t degree(VertexId v) const { return record(v).degree(); }
  const std::unordered_set<VertexId>& neighbors(VertexId v) const {
    return record(v).neighbors;
  }
  ColorId color(VertexId v) const { return record(v).color; }
  /// 1.0 when the graph is unweighted.
  double weight(VertexId u, VertexId v) const;

  std::size_t n() const noexcept { return vertices_.size(); }
  std::size_t m() const noexcept { return edges_.size(); }

  const GraphOptions& options() const noexcept { return options_; }
  const std::unordered_map<VertexId, VertexRecord>& vertices() const noexcept {
    return vertices_;
  }
  const std::unordered_map<VertexPair, EdgeRecord, VertexPairHash>& edges()
      const noexcept {
    return edges_;
  }

  const GradualPartition& partition() const noexcept { return partition_; }
  std::size_t h_index() const noexcept { return partition_.h(); }
  bool in_core(VertexId v) const { return partition_.in_core(v); }
  const std::unordered_set<VertexId>& core() const noexcept {
    return partition_.core();
  }

  /// Throws Error(kInternalInconsistency) on any broken invariant.
  void check_invariants() const;

 private:
  const VertexRecord& record(VertexId v) const;
  VertexRecord& record(VertexId v);
  void forward(const std::vector<CoreEvent>& events);

  GraphOptions options_;
  std::unordered_map<VertexId, VertexRecord> vertices_;
  std::unordered_map<VertexPair, EdgeRecord, VertexPairHash> edges_;
  GradualPartition partition_;
  std::vector<GraphListener*> listeners_;
};

}  // namespace dgstat
