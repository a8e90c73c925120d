#include "dgstat/cli/synth.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <random>

#include "dgstat/types.hpp"

namespace dgstat::cli {

namespace {

// std::uniform_int_distribution is implementation-defined; this keeps the
// generated graphs identical across standard libraries for a given seed.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SynthGraph barabasi_albert(std::uint64_t n, std::uint64_t attach, std::uint64_t seed) {
  if (attach == 0) throw Error(ErrorKind::kInvalidArgument, "ba: attach must be >= 1");
  SynthGraph g;
  g.n = n;
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> endpoints;
  const std::uint64_t seed_size = std::min(n, attach + 1);
  for (std::uint64_t a = 0; a < seed_size; ++a)
    for (std::uint64_t b = a + 1; b < seed_size; ++b) {
      g.edges.emplace_back(a, b);
      endpoints.push_back(a);
      endpoints.push_back(b);
    }
  std::vector<std::uint64_t> targets;
  for (std::uint64_t v = seed_size; v < n; ++v) {
    targets.clear();
    while (targets.size() < attach) {
      const std::uint64_t t = endpoints[uniform_below(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (std::uint64_t t : targets) {
      g.edges.emplace_back(v, t);
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }
  return g;
}

SynthGraph split_graph(std::uint64_t h, std::uint64_t n) {
  if (h > n) throw Error(ErrorKind::kInvalidArgument, "split: h must not exceed n");
  SynthGraph g;
  g.n = n;
  for (std::uint64_t a = 0; a < h; ++a)
    for (std::uint64_t b = a + 1; b < h; ++b) g.edges.emplace_back(a, b);
  for (std::uint64_t p = h; p < n; ++p)
    for (std::uint64_t a = 0; a < h; ++a) g.edges.emplace_back(p, a);
  return g;
}

SynthGraph clique_plus_isolates(std::uint64_t c, std::uint64_t n) {
  if (c > n) throw Error(ErrorKind::kInvalidArgument, "clique: c must not exceed n");
  SynthGraph g;
  g.n = n;
  for (std::uint64_t a = 0; a < c; ++a)
    for (std::uint64_t b = a + 1; b < c; ++b) g.edges.emplace_back(a, b);
  return g;
}

SynthGraph gnp(std::uint64_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::kInvalidArgument, "gnp: p must lie in [0, 1]");
  SynthGraph g;
  g.n = n;
  std::mt19937_64 rng(seed);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = a + 1; b < n; ++b)
      if (uniform_unit(rng) < p) g.edges.emplace_back(a, b);
  return g;
}

void write_edge_list(const SynthGraph& g, std::ostream& out) {
  std::vector<bool> mentioned(g.n, false);
  for (const auto& [u, v] : g.edges) {
    out << u << ' ' << v << '\n';
    mentioned[u] = mentioned[v] = true;
  }
  for (std::uint64_t v = 0; v < g.n; ++v)
    if (!mentioned[v]) out << v << '\n';
}

}  // namespace dgstat::cli
