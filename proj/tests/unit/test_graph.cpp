#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "dgstat/engine.hpp"
#include "support/harness.hpp"

using dgstat::DynamicGraph;
using dgstat::Engine;
using dgstat::Error;
using dgstat::ErrorKind;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kInternalInconsistency;
}

// Logs every notification so that orderings can be compared.
class Recorder : public dgstat::GraphListener {
 public:
  std::vector<std::string> log;

  void on_vertex_added(dgstat::VertexId v) override { log.push_back("+v" + std::to_string(v)); }
  void on_vertex_removed(dgstat::VertexId v) override { log.push_back("-v" + std::to_string(v)); }
  void on_edge_pre_insert(dgstat::VertexId u, dgstat::VertexId v, double) override {
    log.push_back("pre+" + std::to_string(u) + "," + std::to_string(v));
  }
  void on_edge_post_insert(dgstat::VertexId u, dgstat::VertexId v, double) override {
    log.push_back("post+" + std::to_string(u) + "," + std::to_string(v));
  }
  void on_edge_pre_delete(dgstat::VertexId u, dgstat::VertexId v, double) override {
    log.push_back("pre-" + std::to_string(u) + "," + std::to_string(v));
  }
  void on_edge_post_delete(dgstat::VertexId u, dgstat::VertexId v, double) override {
    log.push_back("post-" + std::to_string(u) + "," + std::to_string(v));
  }
  void on_core_event(const dgstat::CoreEvent& e) override {
    log.push_back((e.kind == dgstat::CoreEventKind::kEnterCore ? "in" : "out") +
                  std::to_string(e.element));
  }
};

void clique(Engine& e, dgstat::VertexId k) {
  for (dgstat::VertexId v = 0; v < k; ++v) e.add_vertex(v);
  for (dgstat::VertexId u = 0; u < k; ++u)
    for (dgstat::VertexId v = u + 1; v < k; ++v) e.add_edge(u, v);
}

}  // namespace

TEST_SUITE("graphcore") {

TEST_CASE("vertices") {
  Engine e;
  e.add_vertex(1);
  CHECK(e.graph().n() == 1);
  CHECK(e.graph().m() == 0);
  CHECK(e.triangles().triangle_count() == 0);
  e.remove_vertex(1);
  CHECK(e.graph().n() == 0);

  Engine many;
  for (dgstat::VertexId v = 0; v < 100; ++v) many.add_vertex(v);
  CHECK(many.graph().h_index() == 0);
}

TEST_CASE("error kinds") {
  Engine e;
  e.add_vertex(0);
  e.add_vertex(1);
  e.add_edge(0, 1);
  CHECK(kind_of([&] { e.add_vertex(0); }) == ErrorKind::kDuplicateVertex);
  CHECK(kind_of([&] { e.remove_vertex(7); }) == ErrorKind::kMissingVertex);
  CHECK(kind_of([&] { e.remove_vertex(0); }) == ErrorKind::kNonzeroDegree);
  CHECK(kind_of([&] { e.add_edge(0, 0); }) == ErrorKind::kSelfLoop);
  CHECK(kind_of([&] { e.add_edge(1, 0); }) == ErrorKind::kDuplicateEdge);
  CHECK(kind_of([&] { e.add_edge(0, 9); }) == ErrorKind::kMissingVertex);
  CHECK(kind_of([&] { e.remove_edge(0, 2); }) == ErrorKind::kMissingVertex);
  e.add_vertex(2);
  CHECK(kind_of([&] { e.remove_edge(0, 2); }) == ErrorKind::kMissingEdge);
  CHECK(kind_of([&] { e.add_edge(0, 2, 0.5); }) == ErrorKind::kFeatureDisabled);
  CHECK(kind_of([&] { e.add_vertex(3, 1); }) == ErrorKind::kColorDisabled);
  e.remove_edge(0, 1);
  e.remove_vertex(0);
  CHECK(e.graph().n() == 2);

  dgstat::EngineOptions o;
  o.weighted = true;
  o.colors = 2;
  Engine w(o);
  CHECK(kind_of([&] { w.add_vertex(0, 2); }) == ErrorKind::kColorOutOfRange);
  w.add_vertex(0, 1);
  w.add_vertex(1);
  CHECK(w.graph().color(1) == 0);
  CHECK(kind_of([&] { w.add_edge(0, 1, std::nan("")); }) == ErrorKind::kInvalidArgument);
  w.add_edge(0, 1);
  CHECK(w.graph().weight(1, 0) == 1.0);
}

TEST_CASE("failed operations leave the state unchanged") {
  Engine e;
  clique(e, 4);
  const auto before = e.statistics();
  CHECK_THROWS(e.add_edge(0, 1));
  CHECK_THROWS(e.remove_vertex(2));
  CHECK_THROWS(e.remove_edge(0, 9));
  CHECK(e.statistics() == before);
  e.graph().check_invariants();
}

TEST_CASE("small cliques and queries") {
  Engine k3;
  clique(k3, 3);
  CHECK(k3.triangles().triangle_count() == 1);
  for (dgstat::VertexId v = 0; v < 3; ++v) CHECK(k3.graph().degree(v) == 2);

  Engine k4;
  clique(k4, 4);
  CHECK(k4.triangles().triangle_count() == 4);
  k4.remove_edge(2, 3);
  CHECK(k4.triangles().triangle_count() == 2);

  Engine path;
  for (dgstat::VertexId v = 0; v < 3; ++v) path.add_vertex(v);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(path.graph().neighbors(1) == std::unordered_set<dgstat::VertexId>{0, 2});
  CHECK(path.graph().has_edge(0, 1) == path.graph().has_edge(1, 0));
  CHECK(path.graph().has_edge(2, 1));
  CHECK_FALSE(path.graph().has_edge(0, 2));
}

TEST_CASE("partition values track degrees") {
  std::mt19937_64 rng(5);
  dgstat::testing::TraceParams params;
  Engine e(dgstat::testing::engine_options(params));
  for (int step = 0; step < 2000; ++step) {
    dgstat::testing::apply(e, dgstat::testing::random_step(e.graph(), params, rng));
    std::size_t sum = 0;
    for (const auto& [v, rec] : e.graph().vertices()) {
      REQUIRE(e.graph().partition().value(v) == rec.degree());
      sum += rec.degree();
    }
    REQUIRE(sum == 2 * e.graph().m());
  }
}

TEST_CASE("random traces match the oracle after every operation") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 4; ++trial) {
    dgstat::testing::TraceParams params;
    params.colors = 3;
    Engine e(dgstat::testing::engine_options(params));
    for (int step = 0; step < 500; ++step) {
      dgstat::testing::apply(e, dgstat::testing::random_step(e.graph(), params, rng));
      const auto bad = dgstat::testing::compare_with_oracle(e);
      REQUIRE_MESSAGE(bad.empty(), bad.front());
    }
  }
}

TEST_CASE("insert then delete restores the statistics") {
  std::mt19937_64 rng(23);
  dgstat::testing::TraceParams params;
  params.colors = 3;
  params.weights = dgstat::testing::WeightMode::kDyadic;
  Engine e(dgstat::testing::engine_options(params));
  for (int step = 0; step < 600; ++step) {
    const auto s = dgstat::testing::random_step(e.graph(), params, rng);
    if (s.kind == dgstat::testing::StepKind::kAddEdge) {
      const auto before = e.statistics();
      const auto core_before = e.graph().core();
      const auto table_before = e.triangles().path_table();
      e.add_edge(s.u, s.v, s.weight);
      e.remove_edge(s.u, s.v);
      REQUIRE(e.statistics().c3 == before.c3);
      REQUIRE(e.statistics().h == before.h);
      REQUIRE(e.statistics().color_census == before.color_census);
      REQUIRE(e.statistics().census == before.census);
      REQUIRE(*e.statistics().total_weight == *before.total_weight);
      if (e.graph().core() == core_before) REQUIRE(e.triangles().path_table() == table_before);
    }
    dgstat::testing::apply(e, s);
  }
}

TEST_CASE("identical update sequences give identical notification logs") {
  auto run = [] {
    DynamicGraph g;
    Recorder r;
    g.add_listener(r);
    std::mt19937_64 rng(3);
    dgstat::testing::TraceParams params;
    for (int step = 0; step < 300; ++step) {
      const auto s = dgstat::testing::random_step(g, params, rng);
      switch (s.kind) {
        case dgstat::testing::StepKind::kAddVertex: g.add_vertex(s.u); break;
        case dgstat::testing::StepKind::kRemoveVertex: g.remove_vertex(s.u); break;
        case dgstat::testing::StepKind::kAddEdge: g.add_edge(s.u, s.v); break;
        case dgstat::testing::StepKind::kRemoveEdge: g.remove_edge(s.u, s.v); break;
      }
    }
    return r.log;
  };
  const auto first = run();
  CHECK(first.size() > 300);
  CHECK(first == run());
}

TEST_CASE("edge notifications are ordered around the structural change") {
  DynamicGraph g;
  Recorder r;
  g.add_listener(r);
  g.add_vertex(0);
  g.add_vertex(1);
  g.add_edge(0, 1);
  g.remove_edge(0, 1);
  CHECK(r.log == std::vector<std::string>{"+v0", "+v1", "pre+0,1", "post+0,1", "pre-0,1", "post-0,1"});

  r.log.clear();
  g.add_vertex(2);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  const auto at = [&](const std::string& entry) {
    return std::find(r.log.begin(), r.log.end(), entry) - r.log.begin();
  };
  REQUIRE(g.in_core(0));
  CHECK(at("post+0,2") < at("in0"));
  r.log.clear();
  g.remove_edge(0, 2);
  g.remove_edge(0, 1);
  REQUIRE_FALSE(g.in_core(0));
  CHECK(at("out0") < at("pre-0,1"));
  CHECK(at("pre-0,1") < at("post-0,1"));
}

}  // TEST_SUITE
