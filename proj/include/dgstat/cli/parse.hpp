#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dgstat/types.hpp"

namespace dgstat::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Maps vertex tokens to dense ids in order of first appearance.
class Interner {
 public:
  VertexId intern(std::string_view token);
  std::optional<VertexId> find(std::string_view token) const;
  const std::string& name(VertexId id) const { return names_.at(id); }
  std::size_t size() const noexcept { return names_.size(); }

 private:
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<std::string> names_;
};

/// Splits on whitespace after stripping a `#` comment.
std::vector<std::string_view> tokenize(std::string_view line);

struct EdgeListEdge {
  VertexId u = 0;
  VertexId v = 0;
  std::optional<double> weight;
};

/// A static graph read from an edge-list file. Vertex ids index `names`.
struct EdgeList {
  std::vector<std::string> names;
  std::vector<EdgeListEdge> edges;
  std::vector<std::string> warnings;
};

/// Edge-list grammar: `U V [W]` per line, `#` comments, blank lines ignored.
/// A line holding a single token declares an isolated vertex. Duplicate
/// edges and self-loops are dropped with a warning.
EdgeList read_edge_list(std::istream& in);

enum class OpKind { kAddVertex, kRemoveVertex, kAddEdge, kRemoveEdge, kQuery };

/// One line of an operation stream:
///   +v ID [COLOR] | -v ID | +e U V [W] | -e U V | ?
struct OperationRecord {
  OpKind kind = OpKind::kQuery;
  std::vector<std::string> ids;
  std::optional<double> weight;
  std::optional<ColorId> color;

  friend bool operator==(const OperationRecord&, const OperationRecord&) = default;
};

/// nullopt for blank and comment-only lines. `line_no` is used in errors.
std::optional<OperationRecord> parse_operation(std::string_view line, std::size_t line_no);
std::string format_operation(const OperationRecord& op);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double x);

}  // namespace dgstat::cli
