#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dgstat/types.hpp"

namespace dgstat {

/// One change to the membership of the high set, in the order it happened.
struct HighChange {
  ElementId element = 0;
  bool entered = false;

  friend bool operator==(const HighChange&, const HighChange&) = default;
};

/// The membership changes caused by a single update. A value update is a
/// removal followed by a reinsertion, each of which moves at most two
/// elements across the partition, so four slots always suffice.
class HighChanges {
 public:
  void push(ElementId element, bool entered) {
    items_[count_++] = HighChange{element, entered};
  }
  void append(const HighChanges& other) {
    for (const HighChange& c : other) push(c.element, c.entered);
  }

  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  const HighChange* begin() const noexcept { return items_.data(); }
  const HighChange* end() const noexcept { return items_.data() + count_; }
  const HighChange& operator[](std::size_t i) const { return items_[i]; }

 private:
  std::array<HighChange, 4> items_{};
  std::size_t count_ = 0;
};

/// Maintains the h-index of a dynamic set of elements carrying non-negative
/// integer values, together with an h-partition (high set H, rest S \ H).
///
/// State:
///   values    element -> value
///   high      H, every member has value >= |H|
///   boundary  B = { x in H : value(x) == |H| }
///   buckets   i -> { x not in B : value(x) == i }, non-empty sets only
///
/// Every update costs a constant number of dictionary operations; the running
/// total is exposed through dictionary_ops() so callers can check that.
class HIndexStructure {
 public:
  using Set = std::unordered_set<ElementId>;

  HighChanges insert(ElementId x, std::uint64_t value);
  HighChanges remove(ElementId x);
  /// Updates in place when x stays in H (old and new value both >= |H|);
  /// otherwise behaves like remove followed by insert.
  HighChanges set_value(ElementId x, std::uint64_t value);

  std::size_t h() const noexcept { return high_.size(); }
  std::size_t size() const noexcept { return values_.size(); }
  bool contains(ElementId x) const { return values_.count(x) != 0; }
  std::uint64_t value(ElementId x) const;
  bool in_high(ElementId x) const;

  const Set& high() const noexcept { return high_; }
  Set high_set() const { return high_; }
  const std::unordered_map<ElementId, std::uint64_t>& values() const noexcept {
    return values_;
  }

  std::uint64_t dictionary_ops() const noexcept { return ops_; }

  /// Throws Error(kInternalInconsistency) if any structural invariant fails.
  /// Linear time; meant for tests and debugging.
  void check_invariants() const;

 private:
  void bucket_add(std::uint64_t key, ElementId x);
  void bucket_erase(std::uint64_t key, ElementId x);
  void enter_high(ElementId x, HighChanges& changes);
  void restore_after_loss(HighChanges& changes);

  std::unordered_map<ElementId, std::uint64_t> values_;
  Set high_;
  Set boundary_;
  std::unordered_map<std::uint64_t, Set> buckets_;
  std::uint64_t ops_ = 0;
};

}  // namespace dgstat
