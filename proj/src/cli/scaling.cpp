#include "dgstat/cli/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>

namespace dgstat::cli {

namespace {

std::string fixed4(std::optional<double> x) {
  if (!x) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", *x);
  return buf;
}

}  // namespace

std::optional<double> ScalingRow::log_n() const {
  if (n == 0) return std::nullopt;
  return std::log(static_cast<double>(n));
}

std::optional<double> ScalingRow::log_h() const {
  if (h == 0) return std::nullopt;
  return std::log(static_cast<double>(h));
}

std::optional<double> ScalingRow::ratio() const {
  if (h <= 1 || n <= 1) return std::nullopt;
  return *log_h() / *log_n();
}

std::string format_scaling_row(const ScalingRow& row) {
  return row.name + "," + std::to_string(row.n) + "," + std::to_string(row.h) + "," +
         fixed4(row.log_n()) + "," + fixed4(row.log_h()) + "," + fixed4(row.ratio());
}

std::vector<std::string> format_scaling_summary(const std::vector<ScalingRow>& rows) {
  using Column = std::function<std::optional<double>(const ScalingRow&)>;
  const std::vector<Column> columns = {
      [](const ScalingRow& r) { return std::optional<double>(static_cast<double>(r.n)); },
      [](const ScalingRow& r) { return std::optional<double>(static_cast<double>(r.h)); },
      [](const ScalingRow& r) { return r.log_n(); },
      [](const ScalingRow& r) { return r.log_h(); },
      [](const ScalingRow& r) { return r.ratio(); },
  };

  struct Aggregate {
    std::optional<double> min, median, mean, max;
  };
  std::vector<Aggregate> aggs;
  for (const Column& col : columns) {
    std::vector<double> xs;
    for (const ScalingRow& r : rows)
      if (auto x = col(r)) xs.push_back(*x);
    Aggregate a;
    if (!xs.empty()) {
      std::sort(xs.begin(), xs.end());
      const std::size_t k = xs.size();
      a.min = xs.front();
      a.max = xs.back();
      a.median = k % 2 == 1 ? xs[k / 2] : (xs[k / 2 - 1] + xs[k / 2]) / 2.0;
      a.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(k);
    }
    aggs.push_back(a);
  }

  std::vector<std::string> out;
  const std::pair<const char*, std::optional<double> Aggregate::*> stats[] = {
      {"min", &Aggregate::min},
      {"median", &Aggregate::median},
      {"mean", &Aggregate::mean},
      {"max", &Aggregate::max},
  };
  for (const auto& [label, field] : stats) {
    std::string line = std::string("summary:") + label;
    for (const Aggregate& a : aggs) line += "," + fixed4(a.*field);
    out.push_back(line);
  }
  return out;
}

}  // namespace dgstat::cli
