#include "dgstat/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dgstat {

namespace {

std::string pair_name(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

DynamicGraph::DynamicGraph(GraphOptions options) : options_(options) {}

void DynamicGraph::add_listener(GraphListener& listener) {
  listeners_.push_back(&listener);
}

void DynamicGraph::remove_listener(GraphListener& listener) {
  std::erase(listeners_, &listener);
}

const VertexRecord& DynamicGraph::record(VertexId v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end())
    throw Error(ErrorKind::kMissingVertex, "vertex " + std::to_string(v));
  return it->second;
}

VertexRecord& DynamicGraph::record(VertexId v) {
  auto it = vertices_.find(v);
  if (it == vertices_.end())
    throw Error(ErrorKind::kMissingVertex, "vertex " + std::to_string(v));
  return it->second;
}

double DynamicGraph::weight(VertexId u, VertexId v) const {
  auto it = edges_.find(VertexPair(u, v));
  if (it == edges_.end())
    throw Error(ErrorKind::kMissingEdge, pair_name(u, v));
  return it->second.weight;
}

void DynamicGraph::forward(const std::vector<CoreEvent>& events) {
  for (const CoreEvent& e : events)
    for (GraphListener* l : listeners_) l->on_core_event(e);
}

void DynamicGraph::add_vertex(VertexId v, std::optional<ColorId> color) {
  if (has_vertex(v))
    throw Error(ErrorKind::kDuplicateVertex, "vertex " + std::to_string(v));
  if (color) {
    if (options_.colors == 0)
      throw Error(ErrorKind::kColorDisabled, "vertex " + std::to_string(v));
    if (*color >= options_.colors)
      throw Error(ErrorKind::kColorOutOfRange,
                  "color " + std::to_string(*color) + " with k = " +
                      std::to_string(options_.colors));
  }
  VertexRecord rec;
  rec.color = color.value_or(0);
  vertices_.emplace(v, std::move(rec));
  const auto events = partition_.insert_zero(v);
  for (GraphListener* l : listeners_) l->on_vertex_added(v);
  forward(events);
}

void DynamicGraph::remove_vertex(VertexId v) {
  if (record(v).degree() != 0)
    throw Error(ErrorKind::kNonzeroDegree, "vertex " + std::to_string(v));
  const auto events = partition_.remove_zero(v);
  for (GraphListener* l : listeners_) l->on_vertex_removed(v);
  vertices_.erase(v);
  forward(events);
}

void DynamicGraph::add_edge(VertexId u, VertexId v, std::optional<double> weight) {
  if (u == v) throw Error(ErrorKind::kSelfLoop, pair_name(u, v));
  VertexRecord& ru = record(u);
  VertexRecord& rv = record(v);
  if (has_edge(u, v)) throw Error(ErrorKind::kDuplicateEdge, pair_name(u, v));
  if (weight && !options_.weighted)
    throw Error(ErrorKind::kFeatureDisabled, "edge weight on unweighted graph");
  const double w = weight.value_or(1.0);
  if (!std::isfinite(w))
    throw Error(ErrorKind::kInvalidArgument, "non-finite weight on " + pair_name(u, v));

  for (GraphListener* l : listeners_) l->on_edge_pre_insert(u, v, w);
  edges_.emplace(VertexPair(u, v), EdgeRecord{w});
  ru.neighbors.insert(v);
  rv.neighbors.insert(u);
  for (GraphListener* l : listeners_) l->on_edge_post_insert(u, v, w);
  forward(partition_.increment(u));
  forward(partition_.increment(v));
}

void DynamicGraph::remove_edge(VertexId u, VertexId v) {
  VertexRecord& ru = record(u);
  VertexRecord& rv = record(v);
  auto it = edges_.find(VertexPair(u, v));
  if (it == edges_.end()) throw Error(ErrorKind::kMissingEdge, pair_name(u, v));
  const double w = it->second.weight;

  forward(partition_.decrement(u));
  forward(partition_.decrement(v));
  for (GraphListener* l : listeners_) l->on_edge_pre_delete(u, v, w);
  edges_.erase(it);
  ru.neighbors.erase(v);
  rv.neighbors.erase(u);
  for (GraphListener* l : listeners_) l->on_edge_post_delete(u, v, w);
}

void DynamicGraph::check_invariants() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::kInternalInconsistency, "graph: " + what);
  };
  partition_.check_invariants();
  std::size_t degree_sum = 0;
  for (const auto& [v, rec] : vertices_) {
    if (rec.neighbors.count(v) != 0) fail("self-loop at " + std::to_string(v));
    for (VertexId w : rec.neighbors)
      if (!has_edge(v, w)) fail("adjacency without edge " + pair_name(v, w));
    if (!partition_.contains(v) || partition_.value(v) != rec.degree())
      fail("partition value differs from degree at " + std::to_string(v));
    if (options_.colors != 0 && rec.color >= options_.colors)
      fail("color out of range at " + std::to_string(v));
    degree_sum += rec.degree();
  }
  if (degree_sum != 2 * edges_.size()) fail("degree sum != 2m");
  if (partition_.base().size() != vertices_.size())
    fail("partition holds vertices not in the graph");
}

}  // namespace dgstat
