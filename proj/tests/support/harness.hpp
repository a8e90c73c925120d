#pragma once

// Random operation traces and an engine-versus-oracle comparison shared by
// the unit tests and the acceptance binary.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dgstat/engine.hpp"
#include "dgstat/oracle.hpp"

namespace dgstat::testing {

enum class WeightMode { kNone, kUniform, kOnes, kDyadic };

struct TraceParams {
  std::size_t max_vertices = 12;
  /// Vertex ids are drawn from [0, id_space) so that removed ids get reused.
  std::uint64_t id_space = 16;
  std::uint32_t colors = 0;
  WeightMode weights = WeightMode::kNone;
  bool census = true;
};

enum class StepKind { kAddVertex, kRemoveVertex, kAddEdge, kRemoveEdge };

struct Step {
  StepKind kind = StepKind::kAddEdge;
  VertexId u = 0;
  VertexId v = 0;
  std::optional<ColorId> color;
  std::optional<double> weight;
};

inline EngineOptions engine_options(const TraceParams& p) {
  EngineOptions o;
  o.weighted = p.weights != WeightMode::kNone;
  o.colors = p.colors;
  o.census = p.census;
  return o;
}

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

/// Picks an operation that is legal in the current state of `g`. Edge
/// insertions are the most likely kind so that traces reach dense graphs.
inline Step random_step(const DynamicGraph& g, const TraceParams& p, std::mt19937_64& rng) {
  std::vector<VertexId> present;
  for (const auto& [v, rec] : g.vertices()) present.push_back(v);
  std::sort(present.begin(), present.end());

  for (;;) {
    const std::uint64_t roll = below(rng, 100);
    Step s;
    if (roll < 15) {
      if (present.size() >= p.max_vertices) continue;
      s.kind = StepKind::kAddVertex;
      s.u = below(rng, p.id_space);
      if (g.has_vertex(s.u)) continue;
      if (p.colors != 0) s.color = static_cast<ColorId>(below(rng, p.colors));
      return s;
    }
    if (roll < 22) {
      if (present.empty()) continue;
      s.kind = StepKind::kRemoveVertex;
      s.u = present[below(rng, present.size())];
      if (g.degree(s.u) != 0) continue;
      return s;
    }
    if (present.size() < 2) continue;
    s.u = present[below(rng, present.size())];
    s.v = present[below(rng, present.size())];
    if (s.u == s.v) continue;
    if (roll < 70) {
      if (g.has_edge(s.u, s.v)) continue;
      s.kind = StepKind::kAddEdge;
      switch (p.weights) {
        case WeightMode::kNone: break;
        case WeightMode::kUniform:
          s.weight = static_cast<double>(rng() >> 11) * 0x1.0p-53;
          break;
        case WeightMode::kOnes: s.weight = 1.0; break;
        case WeightMode::kDyadic: s.weight = static_cast<double>(below(rng, 17)) / 8.0; break;
      }
      return s;
    }
    if (!g.has_edge(s.u, s.v)) continue;
    s.kind = StepKind::kRemoveEdge;
    return s;
  }
}

inline void apply(Engine& e, const Step& s) {
  switch (s.kind) {
    case StepKind::kAddVertex: e.add_vertex(s.u, s.color); break;
    case StepKind::kRemoveVertex: e.remove_vertex(s.u); break;
    case StepKind::kAddEdge: e.add_edge(s.u, s.v, s.weight); break;
    case StepKind::kRemoveEdge: e.remove_edge(s.u, s.v); break;
  }
}

inline oracle::SimpleGraph snapshot(const DynamicGraph& g) {
  oracle::SimpleGraph s;
  for (const auto& [v, rec] : g.vertices()) s.vertices.push_back({v, rec.color});
  for (const auto& [key, rec] : g.edges()) s.edges.push_back({key.lo, key.hi, rec.weight});
  return s;
}

inline bool close_rel(double a, double b, double rel) {
  return std::fabs(a - b) <= rel * std::max({1.0, std::fabs(a), std::fabs(b)});
}

inline std::string u128(Count128 x) {
  if (x == 0) return "0";
  std::string s;
  while (x != 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  return s;
}

/// Which statistics to compare; the expensive four-vertex enumerations can
/// be switched off for large sweeps.
struct CompareScope {
  bool paths3 = true;
  bool path_table = true;
  double weight_rel = 1e-9;
};

/// Every disagreement between the engine and brute force, one line each.
inline std::vector<std::string> compare_with_oracle(const Engine& engine,
                                                     const CompareScope& scope = {}) {
  std::vector<std::string> bad;
  auto expect = [&bad](const std::string& what, auto got, auto want) {
    if (got != want)
      bad.push_back(what + ": engine " + std::to_string(got) + ", oracle " + std::to_string(want));
  };
  const DynamicGraph& g = engine.graph();
  const oracle::SimpleGraph s = snapshot(g);

  try {
    g.check_invariants();
  } catch (const Error& e) {
    bad.push_back(std::string("invariants: ") + e.what());
  }

  expect("h", g.h_index(), oracle::h_index_brute(s));
  for (VertexId v : g.core())
    if (!g.partition().in_high(v)) bad.push_back("core vertex outside H: " + std::to_string(v));
  const std::size_t high = g.h_index();
  for (const auto& [v, rec] : g.vertices())
    if (g.partition().in_high(v) && !g.in_core(v) && rec.degree() >= 2 * high)
      bad.push_back("unpromoted vertex " + std::to_string(v));

  const TriangleCounter& t = engine.triangles();
  expect("c3", t.triangle_count(), oracle::triangles_brute(s));
  if (g.options().weighted) {
    const double want = oracle::weighted_brute(s);
    if (!close_rel(t.total_weight(), want, scope.weight_rel))
      bad.push_back("total_weight: engine " + std::to_string(t.total_weight()) + ", oracle " +
                    std::to_string(want));
  }
  if (g.options().colors != 0) {
    std::map<oracle::Triple, std::uint64_t> got;
    for (const auto& [k, c] : t.color_census())
      if (c != 0) got[{k[0], k[1], k[2]}] = c;
    if (got != oracle::colored_brute(s)) bad.push_back("color census differs");
  }

  if (scope.path_table) {
    std::set<std::uint64_t> core(g.core().begin(), g.core().end());
    const auto want = oracle::path_table_brute(s, core, g.options().colors);
    const PathTable& table = t.path_table();
    expect("path cells", table.size(), want.size());
    for (const auto& [key, entry] : want) {
      const PathCell* cell = table.find(key.first, key.second);
      const std::string name = "cell " + std::to_string(key.first) + "," + std::to_string(key.second);
      if (cell == nullptr) {
        bad.push_back(name + " missing");
        continue;
      }
      expect(name + " count", cell->count, entry.count);
      if (g.options().weighted && !close_rel(cell->weight_sum, entry.weight, scope.weight_rel))
        bad.push_back(name + " weight");
      if (g.options().colors != 0 && cell->color_counts != entry.by_color)
        bad.push_back(name + " colors");
    }
  }

  if (engine.has_census()) {
    const CensusCounter& c = engine.census();
    const oracle::Census ic = oracle::census_brute(s);
    const InducedCensus got = c.induced_census();
    expect("g0", got.g0, ic.g0);
    expect("g1", got.g1, ic.g1);
    expect("g2", got.g2, ic.g2);
    expect("g3", got.g3, ic.g3);
    const oracle::Noninduced ni = oracle::noninduced_brute(s);
    const NoninducedCounts gn = c.noninduced_counts();
    expect("triples", gn.triples, ni.triples);
    expect("one_edge", gn.one_edge, ni.one_edge);
    expect("two_path", gn.two_path, ni.two_path);
    expect("triangle", gn.triangle, ni.triangle);
    expect("p2", c.p2(), oracle::p2_brute(s));
    for (unsigned i = 1; i <= c.k_star(); ++i) {
      const Count128 want = oracle::stars_brute(s, i);
      if (c.star_count(i) != want)
        bad.push_back("s" + std::to_string(i) + ": engine " + u128(c.star_count(i)) +
                      ", oracle " + u128(want));
    }
    if (scope.paths3) {
      expect("p3", c.path3_count(), oracle::p3_brute(s));
      expect("q", c.q(), oracle::q_brute(s));
    }
    expect("endpoint entries", c.endpoint_paths().size(), g.core().size());
    for (VertexId v : g.core()) {
      const auto it = c.endpoint_paths().find(v);
      if (it == c.endpoint_paths().end()) {
        bad.push_back("no P for core vertex " + std::to_string(v));
        continue;
      }
      expect("P_" + std::to_string(v), it->second, oracle::endpoint_paths_brute(s, v));
    }
  }
  return bad;
}

}  // namespace dgstat::testing
