#include "dgstat/census.hpp"

#include <string>

namespace dgstat {

namespace {

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(ErrorKind::kInternalInconsistency, "census: " + what);
}

void subtract_checked(std::uint64_t& acc, std::uint64_t delta, const char* what) {
  if (acc < delta) inconsistent(std::string("negative ") + what);
  acc -= delta;
}

}  // namespace

Count128 binomial(std::uint64_t d, unsigned i) {
  if (i > d) return 0;
  Count128 r = 1;
  for (unsigned j = 0; j < i; ++j) r = r * (d - j) / (j + 1);
  return r;
}

CensusCounter::CensusCounter(const DynamicGraph& graph,
                             const TriangleCounter& triangles, unsigned k_star)
    : graph_(graph), triangles_(triangles), k_star_(k_star), stars_(k_star + 1, 0) {
  if (k_star < 2 || k_star > kMaxStar)
    throw Error(ErrorKind::kOutOfRange,
                "k_star must be in [2, " + std::to_string(kMaxStar) + "]");
  if (graph.m() != 0)
    throw Error(ErrorKind::kInvalidArgument,
                "census must be attached to an edgeless graph");
}

std::uint64_t CensusCounter::endpoint_paths_of(VertexId v) const {
  if (auto it = endpoint_paths_.find(v); it != endpoint_paths_.end())
    return it->second;
  std::uint64_t sum = 0;
  for (VertexId w : graph_.neighbors(v)) sum += graph_.degree(w) - 1;
  return sum;
}

// Core vertices other than u and v see one more (or one fewer) two-edge path
// for each endpoint they are adjacent to.
void CensusCounter::adjust_core_neighbors(VertexId u, VertexId v, int sign) {
  for (auto& [w, paths] : endpoint_paths_) {
    if (w == u || w == v) continue;
    const std::uint64_t k = (graph_.has_edge(w, u) ? 1 : 0) + (graph_.has_edge(w, v) ? 1 : 0);
    if (sign > 0)
      paths += k;
    else
      subtract_checked(paths, k, "endpoint path count");
  }
}

void CensusCounter::on_edge_pre_insert(VertexId u, VertexId v, double) {
  const std::uint64_t du = graph_.degree(u);
  const std::uint64_t dv = graph_.degree(v);
  p2_ += du + dv;
  q_ += du * dv + endpoint_paths_of(u) + endpoint_paths_of(v);
  for (unsigned i = 1; i <= k_star_; ++i) stars_[i] += binomial(du, i - 1) + binomial(dv, i - 1);

  adjust_core_neighbors(u, v, +1);
  if (auto it = endpoint_paths_.find(u); it != endpoint_paths_.end()) it->second += dv;
  if (auto it = endpoint_paths_.find(v); it != endpoint_paths_.end()) it->second += du;
}

void CensusCounter::on_edge_pre_delete(VertexId u, VertexId v, double) {
  const std::uint64_t du = graph_.degree(u);
  const std::uint64_t dv = graph_.degree(v);
  const std::uint64_t pu = endpoint_paths_of(u);
  const std::uint64_t pv = endpoint_paths_of(v);
  subtract_checked(p2_, du + dv - 2, "p2");
  // pu counts the path u-v-x for every x, so pu >= dv - 1 (likewise pv).
  subtract_checked(q_, (du - 1) * (dv - 1) + (pu - dv + 1) + (pv - du + 1), "q");
  for (unsigned i = 1; i <= k_star_; ++i) {
    const Count128 delta = binomial(du - 1, i - 1) + binomial(dv - 1, i - 1);
    if (stars_[i] < delta) inconsistent("negative star count");
    stars_[i] -= delta;
  }

  adjust_core_neighbors(u, v, -1);
  if (auto it = endpoint_paths_.find(u); it != endpoint_paths_.end())
    subtract_checked(it->second, dv - 1, "endpoint path count");
  if (auto it = endpoint_paths_.find(v); it != endpoint_paths_.end())
    subtract_checked(it->second, du - 1, "endpoint path count");
}

void CensusCounter::on_core_event(const CoreEvent& e) {
  if (e.kind == CoreEventKind::kLeaveCore) {
    endpoint_paths_.erase(e.element);
    return;
  }
  std::uint64_t sum = 0;
  for (VertexId w : graph_.neighbors(e.element)) sum += graph_.degree(w) - 1;
  endpoint_paths_[e.element] = sum;
}

Count128 CensusCounter::star_count(unsigned i) const {
  if (i < 1 || i > k_star_)
    throw Error(ErrorKind::kOutOfRange,
                "star index " + std::to_string(i) + " outside [1, " +
                    std::to_string(k_star_) + "]");
  return stars_[i];
}

std::uint64_t CensusCounter::path3_count() const {
  const std::uint64_t c3 = triangles_.triangle_count();
  if (q_ < 3 * c3) inconsistent("negative four-vertex path count");
  return q_ - 3 * c3;
}

NoninducedCounts CensusCounter::noninduced_counts() const {
  const std::uint64_t n = graph_.n();
  const std::uint64_t m = graph_.m();
  NoninducedCounts out;
  out.triples = static_cast<std::uint64_t>(binomial(n, 3));
  out.one_edge = n >= 2 ? m * (n - 2) : 0;
  out.two_path = p2_;
  out.triangle = triangles_.triangle_count();
  return out;
}

InducedCensus CensusCounter::induced_census() const {
  const NoninducedCounts rhs = noninduced_counts();
  using Signed = __int128;
  const Signed g3 = rhs.triangle;
  const Signed g2 = Signed(rhs.two_path) - 3 * g3;
  const Signed g1 = Signed(rhs.one_edge) - (2 * g2 + 3 * g3);
  const Signed g0 = Signed(rhs.triples) - (g1 + g2 + g3);
  if (g0 < 0 || g1 < 0 || g2 < 0)
    inconsistent("negative induced census value");
  return InducedCensus{static_cast<std::uint64_t>(g0), static_cast<std::uint64_t>(g1),
                       static_cast<std::uint64_t>(g2), static_cast<std::uint64_t>(g3)};
}

}  // namespace dgstat
