#include "dgstat/triangles.hpp"

#include <algorithm>
#include <string>

namespace dgstat {

namespace {

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(ErrorKind::kInternalInconsistency, "triangles: " + what);
}

}  // namespace

ColorTriple make_color_triple(ColorId a, ColorId b, ColorId c) {
  ColorTriple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

void PathTable::add(VertexPair key, double weight, ColorId middle_color) {
  PathCell& cell = cells_[key];
  if (cell.count == 0 && colors_ != 0) {
    cell.color_counts.assign(colors_, 0);
    if (weighted_) cell.color_weights.assign(colors_, 0.0);
  }
  ++cell.count;
  if (weighted_) cell.weight_sum += weight;
  if (colors_ != 0) {
    ++cell.color_counts[middle_color];
    if (weighted_) cell.color_weights[middle_color] += weight;
  }
}

void PathTable::subtract(VertexPair key, double weight, ColorId middle_color) {
  auto it = cells_.find(key);
  if (it == cells_.end())
    inconsistent("decrement of absent path cell (" + std::to_string(key.lo) +
                 ", " + std::to_string(key.hi) + ")");
  PathCell& cell = it->second;
  if (colors_ != 0 && cell.color_counts[middle_color] == 0)
    inconsistent("negative color path count");
  if (--cell.count == 0) {
    cells_.erase(it);
    return;
  }
  if (weighted_) cell.weight_sum -= weight;
  if (colors_ != 0) {
    --cell.color_counts[middle_color];
    if (weighted_) cell.color_weights[middle_color] -= weight;
  }
}

const PathCell* PathTable::find(VertexId u, VertexId v) const {
  auto it = cells_.find(VertexPair(u, v));
  return it == cells_.end() ? nullptr : &it->second;
}

TriangleCounter::TriangleCounter(const DynamicGraph& graph)
    : graph_(graph),
      weighted_(graph.options().weighted),
      colors_(graph.options().colors),
      table_(graph.options().colors, graph.options().weighted) {}

EdgeTriangles TriangleCounter::count_for_edge(VertexId u, VertexId v) const {
  if (!graph_.has_vertex(u))
    throw Error(ErrorKind::kMissingVertex, "vertex " + std::to_string(u));
  if (!graph_.has_vertex(v))
    throw Error(ErrorKind::kMissingVertex, "vertex " + std::to_string(v));

  EdgeTriangles found;
  if (colors_ != 0) {
    found.by_color.assign(colors_, 0);
    if (weighted_) found.weight_by_color.assign(colors_, 0.0);
  }

  const auto& core = graph_.core();
  instr_.probes += core.size() + 1;
  for (VertexId w : core) {
    if (w == u || w == v || !graph_.has_edge(u, w) || !graph_.has_edge(v, w))
      continue;
    ++found.count;
    const double pw = weighted_ ? graph_.weight(u, w) * graph_.weight(w, v) : 1.0;
    if (weighted_) found.weight += pw;
    if (colors_ != 0) {
      const ColorId c = graph_.color(w);
      ++found.by_color[c];
      if (weighted_) found.weight_by_color[c] += pw;
    }
  }

  if (const PathCell* cell = table_.find(u, v)) {
    found.count += cell->count;
    if (weighted_) found.weight += cell->weight_sum;
    for (std::uint32_t c = 0; c < colors_; ++c) {
      found.by_color[c] += cell->color_counts[c];
      if (weighted_) found.weight_by_color[c] += cell->color_weights[c];
    }
  }
  return found;
}

void TriangleCounter::add_color(const ColorTriple& key, std::uint64_t count,
                                double weight, int sign) {
  if (count == 0) return;
  if (sign > 0) {
    color_counts_[key] += count;
    if (weighted_) color_weights_[key] += weight;
    return;
  }
  auto it = color_counts_.find(key);
  if (it == color_counts_.end() || it->second < count)
    inconsistent("negative colored triangle count");
  it->second -= count;
  if (it->second == 0) {
    color_counts_.erase(it);
    color_weights_.erase(key);
  } else if (weighted_) {
    color_weights_[key] -= weight;
  }
}

void TriangleCounter::apply(VertexId u, VertexId v, double w,
                            const EdgeTriangles& found, int sign) {
  if (sign > 0) {
    c3_ += found.count;
  } else {
    if (c3_ < found.count) inconsistent("negative triangle count");
    c3_ -= found.count;
  }
  if (weighted_) total_weight_ += sign * w * found.weight;
  if (colors_ != 0) {
    const ColorId cu = graph_.color(u);
    const ColorId cv = graph_.color(v);
    for (std::uint32_t c = 0; c < colors_; ++c) {
      add_color(make_color_triple(cu, cv, c), found.by_color[c],
                weighted_ ? w * found.weight_by_color[c] : 0.0, sign);
    }
  }
}

// For each endpoint outside the core, the paths (other endpoint)-a-x through
// it appear or disappear together with the edge.
void TriangleCounter::update_paths(VertexId u, VertexId v, double w, int sign) {
  std::uint64_t touches = 0;
  for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
    if (graph_.in_core(a)) continue;
    const ColorId ca = colors_ != 0 ? graph_.color(a) : 0;
    for (VertexId x : graph_.neighbors(a)) {
      if (x == b) continue;
      const double pw = weighted_ ? w * graph_.weight(a, x) : 1.0;
      if (sign > 0)
        table_.add(VertexPair(b, x), pw, ca);
      else
        table_.subtract(VertexPair(b, x), pw, ca);
      ++touches;
    }
  }
  instr_.path_touches += touches;
  instr_.last_edge_touches = touches;
}

void TriangleCounter::on_edge_pre_insert(VertexId u, VertexId v, double w) {
  apply(u, v, w, count_for_edge(u, v), +1);
}

void TriangleCounter::on_edge_post_insert(VertexId u, VertexId v, double w) {
  update_paths(u, v, w, +1);
}

void TriangleCounter::on_edge_pre_delete(VertexId u, VertexId v, double w) {
  apply(u, v, w, count_for_edge(u, v), -1);
  update_paths(u, v, w, -1);
}

void TriangleCounter::on_core_event(const CoreEvent& e) {
  const VertexId v = e.element;
  const bool entering = e.kind == CoreEventKind::kEnterCore;
  const ColorId cv = colors_ != 0 ? graph_.color(v) : 0;
  const auto& nbrs = graph_.neighbors(v);
  const std::vector<VertexId> list(nbrs.begin(), nbrs.end());
  std::vector<double> weights;
  if (weighted_) {
    weights.reserve(list.size());
    for (VertexId x : list) weights.push_back(graph_.weight(v, x));
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      const double pw = weighted_ ? weights[i] * weights[j] : 1.0;
      if (entering)
        table_.subtract(VertexPair(list[i], list[j]), pw, cv);
      else
        table_.add(VertexPair(list[i], list[j]), pw, cv);
    }
  }
  if (list.size() >= 2) instr_.rebuild_touches += list.size() * (list.size() - 1) / 2;
}

double TriangleCounter::total_weight() const {
  if (!weighted_)
    throw Error(ErrorKind::kFeatureDisabled, "weights are not enabled");
  return total_weight_;
}

const std::map<ColorTriple, std::uint64_t>& TriangleCounter::color_census() const {
  if (colors_ == 0)
    throw Error(ErrorKind::kFeatureDisabled, "colors are not enabled");
  return color_counts_;
}

const std::map<ColorTriple, double>& TriangleCounter::color_weight_census() const {
  if (colors_ == 0 || !weighted_)
    throw Error(ErrorKind::kFeatureDisabled,
                "colored weights need both colors and weights enabled");
  return color_weights_;
}

}  // namespace dgstat
