#include "dgstat/gradual.hpp"

#include <string>

namespace dgstat {

namespace {

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(ErrorKind::kInternalInconsistency, "gradual: " + what);
}

void require_present(const HIndexStructure& base, ElementId x) {
  if (!base.contains(x))
    throw Error(ErrorKind::kMissingElement, "element " + std::to_string(x));
}

}  // namespace

bool GradualPartition::in_core(ElementId x) const {
  require_present(base_, x);
  return core_.count(x) != 0;
}

bool GradualPartition::waiting(ElementId x) const {
  return base_.high().count(x) != 0 && core_.count(x) == 0;
}

void GradualPartition::waiting_add(ElementId x) {
  waiting_[base_.value(x)].insert(x);
}

void GradualPartition::waiting_erase(ElementId x, std::uint64_t value) {
  auto it = waiting_.find(value);
  if (it == waiting_.end() || it->second.erase(x) == 0)
    inconsistent("element " + std::to_string(x) + " missing from waiting set");
  if (it->second.empty()) waiting_.erase(it);
}

void GradualPartition::try_promote(ElementId x, std::vector<CoreEvent>& events) {
  if (!base_.contains(x) || !waiting(x)) return;
  const std::uint64_t value = base_.value(x);
  if (value < 2 * base_.h()) return;
  waiting_erase(x, value);
  core_.insert(x);
  ++counters_.core_additions;
  events.push_back({x, CoreEventKind::kEnterCore});
}

std::vector<CoreEvent> GradualPartition::finish(ElementId x,
                                                const HighChanges& changes,
                                                std::size_t old_h) {
  std::vector<CoreEvent> events;
  for (const HighChange& c : changes) {
    if (c.entered) {
      if (c.element != x) waiting_add(c.element);
      continue;
    }
    if (core_.erase(c.element) != 0) {
      ++counters_.core_removals;
      events.push_back({c.element, CoreEventKind::kLeaveCore});
    } else if (c.element != x) {
      waiting_erase(c.element, base_.value(c.element));
    }
  }
  // x was taken out of the waiting sets before its value changed.
  if (base_.contains(x) && waiting(x)) waiting_add(x);

  const std::size_t h = base_.h();
  try_promote(x, events);
  for (const HighChange& c : changes)
    if (c.entered) try_promote(c.element, events);
  if (h < old_h) {
    // Every waiting element had value < 2*old_h = 2h + 2 before this update,
    // so only these two keys can hold newly promotable elements.
    for (std::uint64_t key : {2 * static_cast<std::uint64_t>(h),
                              2 * static_cast<std::uint64_t>(h) + 1}) {
      auto it = waiting_.find(key);
      if (it == waiting_.end()) continue;
      const std::vector<ElementId> batch(it->second.begin(), it->second.end());
      for (ElementId y : batch) try_promote(y, events);
    }
  }

  ++counters_.updates;
  counters_.harmonic_sum += h == 0 ? 1.0 : 1.0 / static_cast<double>(h);
  const std::size_t start = counters_.epoch_start_h;
  if (h != start && (h >= 2 * start || 2 * h <= start)) {
    ++counters_.epoch_count;
    counters_.epoch_start_h = h;
    counters_.epoch_start_update = counters_.updates;
  }
  return events;
}

std::vector<CoreEvent> GradualPartition::insert_zero(ElementId x) {
  const std::size_t old_h = base_.h();
  const HighChanges changes = base_.insert(x, 0);
  return finish(x, changes, old_h);
}

std::vector<CoreEvent> GradualPartition::remove_zero(ElementId x) {
  require_present(base_, x);
  if (base_.value(x) != 0)
    throw Error(ErrorKind::kNonzeroValue, "element " + std::to_string(x));
  const std::size_t old_h = base_.h();
  if (waiting(x)) waiting_erase(x, 0);
  const HighChanges changes = base_.remove(x);
  return finish(x, changes, old_h);
}

std::vector<CoreEvent> GradualPartition::increment(ElementId x) {
  require_present(base_, x);
  const std::size_t old_h = base_.h();
  const std::uint64_t old = base_.value(x);
  if (waiting(x)) waiting_erase(x, old);
  const HighChanges changes = base_.set_value(x, old + 1);
  return finish(x, changes, old_h);
}

std::vector<CoreEvent> GradualPartition::decrement(ElementId x) {
  require_present(base_, x);
  const std::uint64_t old = base_.value(x);
  if (old == 0)
    throw Error(ErrorKind::kUnderflow, "element " + std::to_string(x));
  const std::size_t old_h = base_.h();
  if (waiting(x)) waiting_erase(x, old);
  const HighChanges changes = base_.set_value(x, old - 1);
  return finish(x, changes, old_h);
}

void GradualPartition::check_invariants() const {
  base_.check_invariants();
  const std::uint64_t h = base_.h();
  for (ElementId x : core_)
    if (base_.high().count(x) == 0) inconsistent("core element outside H");
  std::size_t waiting_count = 0;
  for (const auto& [key, members] : waiting_) {
    if (members.empty()) inconsistent("empty waiting set stored");
    for (ElementId x : members) {
      if (!waiting(x)) inconsistent("waiting element not in H \\ P");
      if (base_.value(x) != key) inconsistent("waiting key mismatch");
      if (key >= 2 * h) inconsistent("unpromoted element at or above 2|H|");
    }
    waiting_count += members.size();
  }
  if (waiting_count + core_.size() != base_.h())
    inconsistent("waiting sets and core do not cover H");
}

}  // namespace dgstat
