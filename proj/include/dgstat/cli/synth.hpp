#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace dgstat::cli {

/// A generated graph on vertices 0..n-1, edges in generation order.
struct SynthGraph {
  std::uint64_t n = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
};

/// Preferential attachment: a seed clique on attach+1 vertices, then every
/// new vertex links to `attach` distinct earlier vertices chosen with
/// probability proportional to degree. Degree exponent is about 3.
SynthGraph barabasi_albert(std::uint64_t n, std::uint64_t attach, std::uint64_t seed);

/// A clique on h vertices plus n-h further vertices, each adjacent to every
/// clique vertex and to nothing else.
SynthGraph split_graph(std::uint64_t h, std::uint64_t n);

/// K_c followed by n-c isolated vertices.
SynthGraph clique_plus_isolates(std::uint64_t c, std::uint64_t n);

/// Erdos-Renyi G(n, p).
SynthGraph gnp(std::uint64_t n, double p, std::uint64_t seed);

/// Writes one `u v` line per edge, then a single-token line for every vertex
/// that no edge mentions.
void write_edge_list(const SynthGraph& g, std::ostream& out);

}  // namespace dgstat::cli
