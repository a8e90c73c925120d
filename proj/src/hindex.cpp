#include "dgstat/hindex.hpp"

#include <string>

namespace dgstat {

namespace {

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(ErrorKind::kInternalInconsistency, "hindex: " + what);
}

}  // namespace

std::uint64_t HIndexStructure::value(ElementId x) const {
  auto it = values_.find(x);
  if (it == values_.end())
    throw Error(ErrorKind::kMissingElement, "element " + std::to_string(x));
  return it->second;
}

bool HIndexStructure::in_high(ElementId x) const {
  if (!contains(x))
    throw Error(ErrorKind::kMissingElement, "element " + std::to_string(x));
  return high_.count(x) != 0;
}

void HIndexStructure::bucket_add(std::uint64_t key, ElementId x) {
  buckets_[key].insert(x);
  ops_ += 2;
}

void HIndexStructure::bucket_erase(std::uint64_t key, ElementId x) {
  auto it = buckets_.find(key);
  ops_ += 1;
  if (it == buckets_.end() || it->second.erase(x) == 0)
    inconsistent("element " + std::to_string(x) + " missing from bucket " +
                 std::to_string(key));
  ops_ += 1;
  if (it->second.empty()) {
    buckets_.erase(it);
    ops_ += 1;
  }
}

// x has value > |H| and sits in buckets_[value(x)].
void HIndexStructure::enter_high(ElementId x, HighChanges& changes) {
  const std::uint64_t old_h = high_.size();
  high_.insert(x);
  ops_ += 1;
  changes.push(x, true);

  if (!boundary_.empty()) {
    // Any boundary element will do; its value is exactly old_h.
    const ElementId y = *boundary_.begin();
    boundary_.erase(boundary_.begin());
    high_.erase(y);
    bucket_add(old_h, y);
    ops_ += 2;
    changes.push(y, false);
    return;
  }

  const std::uint64_t new_h = high_.size();
  auto it = buckets_.find(new_h);
  ops_ += 1;
  if (it != buckets_.end()) {
    boundary_ = std::move(it->second);
    buckets_.erase(it);
    ops_ += 1;
  } else {
    boundary_.clear();
  }
}

// Called after an element of H has been dropped; |H| is one less than before.
void HIndexStructure::restore_after_loss(HighChanges& changes) {
  const std::uint64_t old_h = high_.size() + 1;
  auto it = buckets_.find(old_h);
  ops_ += 1;
  if (it != buckets_.end()) {
    const ElementId z = *it->second.begin();
    it->second.erase(it->second.begin());
    if (it->second.empty()) buckets_.erase(it);
    boundary_.insert(z);
    high_.insert(z);
    ops_ += 4;
    changes.push(z, true);
    return;
  }
  // h drops: the old boundary keeps its H membership but now sits strictly
  // above |H|, so it moves back into the bucket for its value.
  if (!boundary_.empty()) {
    buckets_.emplace(old_h, std::move(boundary_));
    ops_ += 1;
  }
  boundary_.clear();
}

HighChanges HIndexStructure::insert(ElementId x, std::uint64_t value) {
  HighChanges changes;
  auto [it, inserted] = values_.emplace(x, value);
  ops_ += 1;
  if (!inserted)
    throw Error(ErrorKind::kDuplicateElement, "element " + std::to_string(x));
  bucket_add(value, x);
  if (value > high_.size()) enter_high(x, changes);
  return changes;
}

HighChanges HIndexStructure::remove(ElementId x) {
  HighChanges changes;
  auto it = values_.find(x);
  ops_ += 1;
  if (it == values_.end())
    throw Error(ErrorKind::kMissingElement, "element " + std::to_string(x));
  const std::uint64_t value = it->second;
  values_.erase(it);
  ops_ += 2;
  if (boundary_.erase(x) == 0) bucket_erase(value, x);

  ops_ += 1;
  if (high_.erase(x) == 0) return changes;
  changes.push(x, false);
  restore_after_loss(changes);
  return changes;
}

HighChanges HIndexStructure::set_value(ElementId x, std::uint64_t value) {
  auto it = values_.find(x);
  ops_ += 1;
  if (it == values_.end())
    throw Error(ErrorKind::kMissingElement, "element " + std::to_string(x));
  const std::uint64_t old = it->second;
  if (old == value) return {};

  const std::uint64_t h = high_.size();
  ops_ += 1;
  if (high_.count(x) != 0 && old >= h && value >= h) {
    if (old == h) {
      boundary_.erase(x);
      ops_ += 1;
    } else {
      bucket_erase(old, x);
    }
    it->second = value;
    if (value == h) {
      boundary_.insert(x);
      ops_ += 1;
    } else {
      bucket_add(value, x);
    }
    return {};
  }

  HighChanges changes = remove(x);
  changes.append(insert(x, value));
  return changes;
}

void HIndexStructure::check_invariants() const {
  const std::uint64_t h = high_.size();
  for (ElementId x : boundary_) {
    if (high_.count(x) == 0) inconsistent("boundary element outside H");
    if (value(x) != h) inconsistent("boundary element with value != |H|");
  }
  std::size_t bucketed = 0;
  for (const auto& [key, members] : buckets_) {
    if (members.empty()) inconsistent("empty bucket stored");
    for (ElementId x : members) {
      if (boundary_.count(x) != 0) inconsistent("boundary element in bucket");
      if (value(x) != key) inconsistent("bucket key mismatch");
    }
    bucketed += members.size();
  }
  if (bucketed + boundary_.size() != values_.size())
    inconsistent("buckets and boundary do not cover all elements");
  for (const auto& [x, v] : values_) {
    const bool high = high_.count(x) != 0;
    if (high && boundary_.count(x) == 0 && v <= h)
      inconsistent("H member above boundary with value <= |H|");
    if (!high && v > h) inconsistent("element outside H with value > |H|");
  }
  for (ElementId x : high_)
    if (!contains(x)) inconsistent("H member not stored");
}

}  // namespace dgstat
