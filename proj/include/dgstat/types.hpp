#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace dgstat {

using ElementId = std::uint64_t;
using VertexId = std::uint64_t;
using ColorId = std::uint32_t;

enum class ErrorKind {
  kDuplicateElement,
  kMissingElement,
  kNonzeroValue,
  kUnderflow,
  kDuplicateVertex,
  kMissingVertex,
  kNonzeroDegree,
  kSelfLoop,
  kDuplicateEdge,
  kMissingEdge,
  kColorOutOfRange,
  kColorDisabled,
  kFeatureDisabled,
  kOutOfRange,
  kInvalidArgument,
  kInternalInconsistency,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the engine carries a kind so callers can dispatch
/// without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Unordered vertex pair, canonicalized so that `lo <= hi`.
struct VertexPair {
  VertexId lo = 0;
  VertexId hi = 0;

  VertexPair() = default;
  VertexPair(VertexId a, VertexId b) : lo(a < b ? a : b), hi(a < b ? b : a) {}

  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

struct VertexPairHash {
  std::size_t operator()(const VertexPair& p) const noexcept {
    // splitmix64 finalizer over a cheap combination of both ids
    std::uint64_t z = p.lo * 0x9e3779b97f4a7c15ULL ^ (p.hi + 0x632be59bd9b4e019ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(z ^ (z >> 31));
  }
};

}  // namespace dgstat
