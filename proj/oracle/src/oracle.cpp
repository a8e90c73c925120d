#include "dgstat/oracle.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace dgstat::oracle {

namespace {

// Adjacency matrix view of a SimpleGraph, vertices renumbered 0..n-1.
struct Dense {
  std::size_t n = 0;
  std::vector<std::uint64_t> ids;
  std::vector<std::uint32_t> colors;
  std::vector<std::vector<bool>> adj;
  std::vector<std::vector<double>> w;
  std::unordered_map<std::uint64_t, std::size_t> index;

  bool edge(std::size_t a, std::size_t b) const { return adj[a][b]; }
};

Dense densify(const SimpleGraph& g, bool enforce_limit) {
  if (enforce_limit && g.vertices.size() > kMaxVertices)
    throw SizeLimitError("oracle enumeration limited to " +
                         std::to_string(kMaxVertices) + " vertices, got " +
                         std::to_string(g.vertices.size()));
  Dense d;
  d.n = g.vertices.size();
  d.adj.assign(d.n, std::vector<bool>(d.n, false));
  d.w.assign(d.n, std::vector<double>(d.n, 0.0));
  for (std::size_t i = 0; i < d.n; ++i) {
    d.ids.push_back(g.vertices[i].id);
    d.colors.push_back(g.vertices[i].color);
    d.index[g.vertices[i].id] = i;
  }
  for (const SimpleGraph::Edge& e : g.edges) {
    const std::size_t a = d.index.at(e.u);
    const std::size_t b = d.index.at(e.v);
    d.adj[a][b] = d.adj[b][a] = true;
    d.w[a][b] = d.w[b][a] = e.weight;
  }
  return d;
}

template <typename F>
void for_each_triple(const Dense& d, F&& f) {
  for (std::size_t a = 0; a < d.n; ++a)
    for (std::size_t b = a + 1; b < d.n; ++b)
      for (std::size_t c = b + 1; c < d.n; ++c) f(a, b, c);
}

int edges_among(const Dense& d, std::size_t a, std::size_t b, std::size_t c) {
  return int(d.edge(a, b)) + int(d.edge(b, c)) + int(d.edge(a, c));
}

// Number of walks a-b-c-d along edges where all four vertices are distinct
// (when `closed` is false) or where d == a and a, b, c are distinct (true).
std::uint64_t three_edge_walks(const Dense& d, bool closed) {
  std::uint64_t walks = 0;
  for (std::size_t a = 0; a < d.n; ++a)
    for (std::size_t b = 0; b < d.n; ++b) {
      if (!d.edge(a, b)) continue;
      for (std::size_t c = 0; c < d.n; ++c) {
        if (c == a || !d.edge(b, c)) continue;
        for (std::size_t e = 0; e < d.n; ++e) {
          if (!d.edge(c, e) || e == b) continue;
          if (closed ? e == a : e != a) ++walks;
        }
      }
    }
  return walks;
}

Triple sorted_triple(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

std::size_t h_index_of_values(std::vector<std::uint64_t> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  std::size_t h = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] >= i + 1) h = i + 1;
  return h;
}

std::size_t h_index_brute(const SimpleGraph& g) {
  std::unordered_map<std::uint64_t, std::uint64_t> degree;
  for (const auto& v : g.vertices) degree[v.id] = 0;
  for (const auto& e : g.edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<std::uint64_t> values;
  for (const auto& [id, d] : degree) values.push_back(d);
  return h_index_of_values(std::move(values));
}

std::uint64_t triangles_brute(const SimpleGraph& g) {
  const Dense d = densify(g, true);
  std::uint64_t count = 0;
  for_each_triple(d, [&](std::size_t a, std::size_t b, std::size_t c) {
    if (edges_among(d, a, b, c) == 3) ++count;
  });
  return count;
}

double weighted_brute(const SimpleGraph& g) {
  const Dense d = densify(g, true);
  double total = 0.0;
  for_each_triple(d, [&](std::size_t a, std::size_t b, std::size_t c) {
    if (edges_among(d, a, b, c) == 3) total += d.w[a][b] * d.w[b][c] * d.w[a][c];
  });
  return total;
}

std::map<Triple, std::uint64_t> colored_brute(const SimpleGraph& g) {
  const Dense d = densify(g, true);
  std::map<Triple, std::uint64_t> out;
  for_each_triple(d, [&](std::size_t a, std::size_t b, std::size_t c) {
    if (edges_among(d, a, b, c) == 3)
      ++out[sorted_triple(d.colors[a], d.colors[b], d.colors[c])];
  });
  return out;
}

std::map<Triple, double> colored_weight_brute(const SimpleGraph& g) {
  const Dense d = densify(g, true);
  std::map<Triple, double> out;
  for_each_triple(d, [&](std::size_t a, std::size_t b, std::size_t c) {
    if (edges_among(d, a, b, c) == 3)
      out[sorted_triple(d.colors[a], d.colors[b], d.colors[c])] +=
          d.w[a][b] * d.w[b][c] * d.w[a][c];
  });
  return out;
}

Census census_brute(const SimpleGraph& g) {
  const Dense d = densify(g, true);
  Census out;
  for_each_triple(d, [&](std::size_t a, std::size_t b, std::size_t c) {
    switch (edges_among(d, a, b, c)) {
      case 0: ++out.g0; break;
      case 1: ++out.g1; break;
      case 2: ++out.g2; break;
      default: ++out.g3; break;
    }
  });
  return out;
}

Noninduced noninduced_brute(const SimpleGraph& g) {
  const Dense d = densify(g, true);
  Noninduced out;
  for_each_triple(d, [&](std::size_t a, std::size_t b, std::size_t c) {
    ++out.triples;
    const int k = edges_among(d, a, b, c);
    // subgraphs of the triple's edge set: k single edges, C(k,2) two-paths
    out.one_edge += k;
    out.two_path += k * (k - 1) / 2;
    if (k == 3) ++out.triangle;
  });
  return out;
}

std::uint64_t p2_brute(const SimpleGraph& g) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
      const auto& a = g.edges[i];
      const auto& b = g.edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) ++count;
    }
  return count;
}

std::uint64_t stars_brute(const SimpleGraph& g, unsigned i) {
  const Dense d = densify(g, false);
  std::uint64_t count = 0;
  for (std::size_t center = 0; center < d.n; ++center) {
    std::vector<std::size_t> leaves;
    for (std::size_t x = 0; x < d.n; ++x)
      if (d.edge(center, x)) leaves.push_back(x);
    // enumerate i-subsets of the leaves
    std::function<void(std::size_t, unsigned)> choose = [&](std::size_t from, unsigned left) {
      if (left == 0) {
        ++count;
        return;
      }
      for (std::size_t k = from; k + left <= leaves.size(); ++k) choose(k + 1, left - 1);
    };
    choose(0, i);
  }
  return count;
}

std::uint64_t p3_brute(const SimpleGraph& g) {
  const Dense d = densify(g, true);
  return three_edge_walks(d, false) / 2;
}

std::uint64_t q_brute(const SimpleGraph& g) {
  const Dense d = densify(g, true);
  // open walks: each path twice; closed walks: each triangle six times
  return (three_edge_walks(d, false) + three_edge_walks(d, true)) / 2;
}

std::uint64_t endpoint_paths_brute(const SimpleGraph& g, std::uint64_t v) {
  const Dense d = densify(g, false);
  const std::size_t s = d.index.at(v);
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < d.n; ++a) {
    if (!d.edge(s, a)) continue;
    for (std::size_t b = 0; b < d.n; ++b)
      if (b != s && d.edge(a, b)) ++count;
  }
  return count;
}

std::map<std::pair<std::uint64_t, std::uint64_t>, PathEntry> path_table_brute(
    const SimpleGraph& g, const std::set<std::uint64_t>& core,
    std::uint32_t colors) {
  const Dense d = densify(g, false);
  std::map<std::pair<std::uint64_t, std::uint64_t>, PathEntry> out;
  for (std::size_t a = 0; a < d.n; ++a)
    for (std::size_t b = a + 1; b < d.n; ++b)
      for (std::size_t mid = 0; mid < d.n; ++mid) {
        if (mid == a || mid == b || core.count(d.ids[mid]) != 0) continue;
        if (!d.edge(a, mid) || !d.edge(mid, b)) continue;
        const auto key = std::minmax(d.ids[a], d.ids[b]);
        PathEntry& entry = out[{key.first, key.second}];
        if (entry.by_color.empty()) entry.by_color.assign(colors, 0);
        ++entry.count;
        entry.weight += d.w[a][mid] * d.w[mid][b];
        if (colors != 0) ++entry.by_color[d.colors[mid]];
      }
  return out;
}

std::vector<std::set<std::uint64_t>> gradual_replay(const std::vector<GradualStep>& trace) {
  std::vector<std::set<std::uint64_t>> out;
  std::set<std::uint64_t> core;
  for (const GradualStep& step : trace) {
    const std::uint64_t threshold = 2 * step.high.size();
    std::set<std::uint64_t> next;
    for (std::uint64_t x : step.high) {
      if (core.count(x) != 0 || step.values.at(x) >= threshold) next.insert(x);
    }
    core = std::move(next);
    out.push_back(core);
  }
  return out;
}

}  // namespace dgstat::oracle
