#include <random>

#include "doctest.h"

#include "dgstat/oracle.hpp"

using namespace dgstat::oracle;

namespace {

SimpleGraph complete(std::uint64_t k) {
  SimpleGraph g;
  for (std::uint64_t v = 0; v < k; ++v) g.vertices.push_back({v, 0});
  for (std::uint64_t u = 0; u < k; ++u)
    for (std::uint64_t v = u + 1; v < k; ++v) g.edges.push_back({u, v, 1.0});
  return g;
}

SimpleGraph path(std::uint64_t k) {
  SimpleGraph g;
  for (std::uint64_t v = 0; v < k; ++v) g.vertices.push_back({v, 0});
  for (std::uint64_t v = 0; v + 1 < k; ++v) g.edges.push_back({v, v + 1, 1.0});
  return g;
}

SimpleGraph random_graph(std::mt19937_64& rng, std::uint64_t n, unsigned percent) {
  SimpleGraph g;
  for (std::uint64_t v = 0; v < n; ++v) g.vertices.push_back({v * 3 + 1, static_cast<std::uint32_t>(rng() % 3)});
  for (std::uint64_t u = 0; u < n; ++u)
    for (std::uint64_t v = u + 1; v < n; ++v)
      if (rng() % 100 < percent) g.edges.push_back({v * 3 + 1, u * 3 + 1, 1.0 + static_cast<double>(rng() % 4)});
  return g;
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (n < i + 1) return 0;
    r = r * (n - i) / (i + 1);
  }
  return r;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("h-index by degree sort") {
  CHECK(h_index_brute(SimpleGraph{}) == 0);
  CHECK(h_index_brute(complete(5)) == 4);
  SimpleGraph split = complete(4);
  for (std::uint64_t p = 4; p < 14; ++p) {
    split.vertices.push_back({p, 0});
    for (std::uint64_t c = 0; c < 4; ++c) split.edges.push_back({p, c, 1.0});
  }
  CHECK(h_index_brute(split) == 4);
  CHECK(h_index_of_values({}) == 0);
  CHECK(h_index_of_values({1, 2, 3, 4, 5}) == 3);
  CHECK(h_index_of_values({9, 9}) == 2);
}

TEST_CASE("small reference values") {
  CHECK(triangles_brute(complete(4)) == 4);
  // The single triple of a two-edge path induces a two-star.
  CHECK(census_brute(path(3)) == Census{0, 0, 1, 0});
  SimpleGraph c4 = path(4);
  c4.edges.push_back({3, 0, 1.0});
  CHECK(p3_brute(c4) == 4);
  CHECK(q_brute(c4) == 4);
  CHECK(p3_brute(path(4)) == 1);
  CHECK(p3_brute(complete(4)) == 12);
  CHECK(q_brute(complete(3)) == 3);
  CHECK(stars_brute(complete(4), 3) == 4);
  CHECK(endpoint_paths_brute(path(3), 0) == 1);
  CHECK(endpoint_paths_brute(path(3), 1) == 0);
}

TEST_CASE("size limit") {
  CHECK_NOTHROW(triangles_brute(complete(kMaxVertices)));
  CHECK_THROWS_AS(triangles_brute(complete(kMaxVertices + 1)), SizeLimitError);
  CHECK_THROWS_AS(census_brute(path(kMaxVertices + 1)), SizeLimitError);
}

TEST_CASE("cross-checks between enumerations") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint64_t n = rng() % 11;
    const SimpleGraph g = random_graph(rng, n, 10 + trial);
    const std::uint64_t m = g.edges.size();
    const Census c = census_brute(g);
    const Noninduced ni = noninduced_brute(g);
    const std::uint64_t c3 = triangles_brute(g);
    CHECK(c.g0 + c.g1 + c.g2 + c.g3 == choose(n, 3));
    CHECK(c.g3 == c3);
    CHECK(c.g2 + 3 * c.g3 == p2_brute(g));
    CHECK(c.g1 + 2 * c.g2 + 3 * c.g3 == m * (n >= 2 ? n - 2 : 0));
    CHECK(ni == Noninduced{choose(n, 3), m * (n >= 2 ? n - 2 : 0), p2_brute(g), c3});
    CHECK(q_brute(g) == p3_brute(g) + 3 * c3);
    CHECK(stars_brute(g, 1) == 2 * m);
    CHECK(stars_brute(g, 2) == p2_brute(g));

    std::uint64_t colored = 0;
    for (const auto& [t, k] : colored_brute(g)) colored += k;
    CHECK(colored == c3);
    double colored_weight = 0.0;
    for (const auto& [t, w] : colored_weight_brute(g)) colored_weight += w;
    CHECK(colored_weight == doctest::Approx(weighted_brute(g)).epsilon(1e-12));

    SimpleGraph ones = g;
    for (auto& e : ones.edges) e.weight = 1.0;
    CHECK(weighted_brute(ones) == static_cast<double>(c3));

    std::uint64_t total_endpoint = 0;
    for (const auto& v : g.vertices) total_endpoint += endpoint_paths_brute(g, v.id);
    CHECK(total_endpoint == 2 * p2_brute(g));

    const auto table = path_table_brute(g, {}, 3);
    std::uint64_t paths = 0;
    for (const auto& [key, entry] : table) {
      CHECK(key.first < key.second);
      paths += entry.count;
      std::uint64_t by_color = 0;
      for (std::uint64_t x : entry.by_color) by_color += x;
      CHECK(by_color == entry.count);
    }
    CHECK(paths == p2_brute(g));
  }
}

TEST_CASE("gradual replay") {
  std::vector<GradualStep> trace;
  trace.push_back({{{1, 1}}, {1}});
  trace.push_back({{{1, 2}}, {1}});
  trace.push_back({{{1, 1}}, {1}});
  trace.push_back({{{1, 0}}, {}});
  const auto cores = gradual_replay(trace);
  REQUIRE(cores.size() == 4);
  CHECK(cores[0].empty());
  CHECK(cores[1] == std::set<std::uint64_t>{1});
  CHECK(cores[2] == std::set<std::uint64_t>{1});
  CHECK(cores[3].empty());
}

}  // TEST_SUITE
