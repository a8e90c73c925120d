#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dgstat/hindex.hpp"
#include "dgstat/types.hpp"

namespace dgstat {

enum class CoreEventKind { kEnterCore, kLeaveCore };

struct CoreEvent {
  ElementId element = 0;
  CoreEventKind kind = CoreEventKind::kEnterCore;

  friend bool operator==(const CoreEvent&, const CoreEvent&) = default;
};

/// Churn instrumentation. `harmonic_sum` accrues 1/h after every update,
/// counting 1 when h is zero. An epoch starts whenever h first reaches at
/// least twice, or at most half, the value it had when the current epoch
/// started; the structure begins in epoch 1 with start value 0.
struct CoreChangeCounters {
  std::uint64_t core_additions = 0;
  std::uint64_t core_removals = 0;
  double harmonic_sum = 0.0;
  std::uint64_t updates = 0;
  std::uint64_t epoch_count = 1;
  std::size_t epoch_start_h = 0;
  std::uint64_t epoch_start_update = 0;

  std::uint64_t core_changes() const noexcept {
    return core_additions + core_removals;
  }
};

/// The slowly changing core P inside the h-partition's high set H, for the
/// restricted update class of unit increments/decrements and insert/delete
/// at value zero. An element joins P once its value reaches 2|H| while it is
/// in H, and leaves P only when it leaves H; so every element outside P has
/// value below max(|H|+1, 2|H|).
class GradualPartition {
 public:
  using Set = std::unordered_set<ElementId>;

  std::vector<CoreEvent> insert_zero(ElementId x);
  std::vector<CoreEvent> remove_zero(ElementId x);
  std::vector<CoreEvent> increment(ElementId x);
  std::vector<CoreEvent> decrement(ElementId x);

  bool in_core(ElementId x) const;
  const Set& core() const noexcept { return core_; }
  Set core_set() const { return core_; }
  const CoreChangeCounters& counters() const noexcept { return counters_; }

  const HIndexStructure& base() const noexcept { return base_; }
  std::size_t h() const noexcept { return base_.h(); }
  bool contains(ElementId x) const { return base_.contains(x); }
  std::uint64_t value(ElementId x) const { return base_.value(x); }
  bool in_high(ElementId x) const { return base_.in_high(x); }

  void check_invariants() const;

 private:
  bool waiting(ElementId x) const;
  void waiting_add(ElementId x);
  void waiting_erase(ElementId x, std::uint64_t value);
  void try_promote(ElementId x, std::vector<CoreEvent>& events);
  std::vector<CoreEvent> finish(ElementId x, const HighChanges& changes,
                                std::size_t old_h);

  HIndexStructure base_;
  Set core_;
  // i -> { x in H \ P : value(x) == i }
  std::unordered_map<std::uint64_t, Set> waiting_;
  CoreChangeCounters counters_;
};

}  // namespace dgstat
