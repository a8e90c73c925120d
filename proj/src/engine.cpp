#include "dgstat/engine.hpp"

namespace dgstat {

Engine::Engine(EngineOptions options)
    : options_(options),
      graph_(std::make_unique<DynamicGraph>(
          GraphOptions{options.weighted, options.colors})),
      triangles_(std::make_unique<TriangleCounter>(*graph_)) {
  graph_->add_listener(*triangles_);
  if (options.census) {
    census_ = std::make_unique<CensusCounter>(*graph_, *triangles_, options.k_star);
    graph_->add_listener(*census_);
  }
}

const CensusCounter& Engine::census() const {
  if (!census_) throw Error(ErrorKind::kFeatureDisabled, "census is not enabled");
  return *census_;
}

Statistics Engine::statistics() const {
  Statistics s;
  s.n = graph_->n();
  s.m = graph_->m();
  s.h = graph_->h_index();
  s.core_size = graph_->core().size();
  s.c3 = triangles_->triangle_count();
  if (options_.weighted) s.total_weight = triangles_->total_weight();
  if (options_.colors != 0) s.color_census = triangles_->color_census();
  if (census_) {
    CensusStatistics c;
    c.induced = census_->induced_census();
    c.noninduced = census_->noninduced_counts();
    c.p2 = census_->p2();
    c.q = census_->q();
    c.p3 = census_->path3_count();
    for (unsigned i = 1; i <= census_->k_star(); ++i)
      c.stars.push_back(census_->star_count(i));
    s.census = std::move(c);
  }
  return s;
}

}  // namespace dgstat
