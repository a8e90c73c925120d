#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dgstat::cli {

/// Size and h-index of one network, with natural-log columns. Logs are
/// empty when undefined: log n for n = 0, log h for h = 0, and the ratio
/// whenever h <= 1 or n <= 1.
struct ScalingRow {
  std::string name;
  std::uint64_t n = 0;
  std::uint64_t h = 0;

  std::optional<double> log_n() const;
  std::optional<double> log_h() const;
  std::optional<double> ratio() const;
};

inline constexpr const char* kScalingHeader = "name,n,h,log_n,log_h,log_h_over_log_n";

/// `name,n,h,log n,log h,ratio` with four decimals on the log columns.
std::string format_scaling_row(const ScalingRow& row);

/// Four rows named summary:min, summary:median, summary:mean and
/// summary:max, each column aggregated over the rows where it is defined.
std::vector<std::string> format_scaling_summary(const std::vector<ScalingRow>& rows);

}  // namespace dgstat::cli
