#pragma once

// Brute-force reference counts. Nothing here includes or calls into the
// dynamic engine: every statistic is recomputed by direct enumeration.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dgstat::oracle {

/// Thrown when an enumeration-based oracle is asked about a graph larger
/// than kMaxVertices.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxVertices = 20;

struct SimpleGraph {
  struct Vertex {
    std::uint64_t id = 0;
    std::uint32_t color = 0;
  };
  struct Edge {
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    double weight = 1.0;
  };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

using Triple = std::array<std::uint32_t, 3>;

struct Census {
  std::uint64_t g0 = 0, g1 = 0, g2 = 0, g3 = 0;
  friend bool operator==(const Census&, const Census&) = default;
};

struct Noninduced {
  std::uint64_t triples = 0, one_edge = 0, two_path = 0, triangle = 0;
  friend bool operator==(const Noninduced&, const Noninduced&) = default;
};

/// Largest h such that at least h of the values are >= h.
std::size_t h_index_of_values(std::vector<std::uint64_t> values);

std::size_t h_index_brute(const SimpleGraph& g);
std::uint64_t triangles_brute(const SimpleGraph& g);
/// Sum over triangles of the product of their three edge weights.
double weighted_brute(const SimpleGraph& g);
/// Triangles keyed by the sorted colors of their corners.
std::map<Triple, std::uint64_t> colored_brute(const SimpleGraph& g);
std::map<Triple, double> colored_weight_brute(const SimpleGraph& g);
/// Induced three-vertex subgraphs by number of edges.
Census census_brute(const SimpleGraph& g);
/// Three-vertex subgraphs (not necessarily induced) with 0..3 edges.
Noninduced noninduced_brute(const SimpleGraph& g);
/// Unordered pairs of distinct edges sharing an endpoint.
std::uint64_t p2_brute(const SimpleGraph& g);
/// Stars K_{1,i}: a center together with an i-subset of its neighbours.
std::uint64_t stars_brute(const SimpleGraph& g, unsigned i);
/// Simple paths on four vertices (three edges), each counted once.
std::uint64_t p3_brute(const SimpleGraph& g);
/// Sequences of three distinct edges forming a path or a cycle, taken up to
/// reversal: each simple path once, each triangle three times.
std::uint64_t q_brute(const SimpleGraph& g);
/// Two-edge paths v-a-b with v as an endpoint.
std::uint64_t endpoint_paths_brute(const SimpleGraph& g, std::uint64_t v);

struct PathEntry {
  std::uint64_t count = 0;
  double weight = 0.0;
  std::vector<std::uint64_t> by_color;
};

/// For every unordered pair {x, y} (x < y) joined by at least one two-edge
/// path whose middle vertex is not in `core`, the number of such paths, the
/// sum of their weight products and their count per middle color.
std::map<std::pair<std::uint64_t, std::uint64_t>, PathEntry> path_table_brute(
    const SimpleGraph& g, const std::set<std::uint64_t>& core,
    std::uint32_t colors);

/// One step of a trace against the gradual core: the element values and the
/// high set H after the step.
struct GradualStep {
  std::map<std::uint64_t, std::uint64_t> values;
  std::set<std::uint64_t> high;
};

/// Replays the core promotion rules literally: an element of H joins the
/// core as soon as its value reaches 2|H|, and leaves only when it leaves H.
/// Returns the core after every step.
std::vector<std::set<std::uint64_t>> gradual_replay(const std::vector<GradualStep>& trace);

}  // namespace dgstat::oracle
