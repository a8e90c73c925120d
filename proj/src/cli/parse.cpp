#include "dgstat/cli/parse.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <set>
#include <utility>

namespace dgstat::cli {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

std::optional<double> parse_number(std::string_view token) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value))
    return std::nullopt;
  return value;
}

std::optional<ColorId> parse_color(std::string_view token) {
  ColorId value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

}  // namespace

VertexId Interner::intern(std::string_view token) {
  auto it = ids_.find(std::string(token));
  if (it != ids_.end()) return it->second;
  const VertexId id = names_.size();
  names_.emplace_back(token);
  ids_.emplace(names_.back(), id);
  return id;
}

std::optional<VertexId> Interner::find(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string_view> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

EdgeList read_edge_list(std::istream& in) {
  EdgeList out;
  Interner names;
  std::set<std::pair<VertexId, VertexId>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() > 3)
      throw ParseError(line_no, "expected `U V [W]`, got " + std::to_string(tokens.size()) + " tokens");
    const VertexId u = names.intern(tokens[0]);
    if (tokens.size() == 1) continue;
    const VertexId v = names.intern(tokens[1]);
    std::optional<double> weight;
    if (tokens.size() == 3) {
      weight = parse_number(tokens[2]);
      if (!weight) throw ParseError(line_no, "weight `" + std::string(tokens[2]) + "` is not a finite number");
    }
    if (u == v) {
      out.warnings.push_back("line " + std::to_string(line_no) + ": self-loop dropped");
      continue;
    }
    if (!seen.insert(std::minmax(u, v)).second) {
      out.warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge ignored");
      continue;
    }
    out.edges.push_back({u, v, weight});
  }
  for (VertexId id = 0; id < names.size(); ++id) out.names.push_back(names.name(id));
  return out;
}

std::optional<OperationRecord> parse_operation(std::string_view line, std::size_t line_no) {
  const auto tokens = tokenize(line);
  if (tokens.empty()) return std::nullopt;
  OperationRecord op;
  const std::string_view verb = tokens[0];
  auto arity = [&](std::size_t lo, std::size_t hi) {
    const std::size_t args = tokens.size() - 1;
    if (args < lo || args > hi)
      throw ParseError(line_no, "`" + std::string(verb) + "` takes " + std::to_string(lo) +
                                    (lo == hi ? "" : "-" + std::to_string(hi)) + " arguments, got " +
                                    std::to_string(args));
  };

  if (verb == "?") {
    arity(0, 0);
    op.kind = OpKind::kQuery;
  } else if (verb == "+v") {
    arity(1, 2);
    op.kind = OpKind::kAddVertex;
    if (tokens.size() == 3) {
      op.color = parse_color(tokens[2]);
      if (!op.color) throw ParseError(line_no, "color `" + std::string(tokens[2]) + "` is not a non-negative integer");
    }
  } else if (verb == "-v") {
    arity(1, 1);
    op.kind = OpKind::kRemoveVertex;
  } else if (verb == "+e") {
    arity(2, 3);
    op.kind = OpKind::kAddEdge;
    if (tokens.size() == 4) {
      op.weight = parse_number(tokens[3]);
      if (!op.weight) throw ParseError(line_no, "weight `" + std::string(tokens[3]) + "` is not a finite number");
    }
  } else if (verb == "-e") {
    arity(2, 2);
    op.kind = OpKind::kRemoveEdge;
  } else {
    throw ParseError(line_no, "unknown operation `" + std::string(verb) + "`");
  }

  const std::size_t id_count =
      (op.kind == OpKind::kAddEdge || op.kind == OpKind::kRemoveEdge) ? 2
      : op.kind == OpKind::kQuery                                      ? 0
                                                                       : 1;
  for (std::size_t i = 1; i <= id_count; ++i) op.ids.emplace_back(tokens[i]);
  return op;
}

std::string format_double(double x) {
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

std::string format_operation(const OperationRecord& op) {
  std::string out;
  switch (op.kind) {
    case OpKind::kQuery: return "?";
    case OpKind::kAddVertex: out = "+v"; break;
    case OpKind::kRemoveVertex: out = "-v"; break;
    case OpKind::kAddEdge: out = "+e"; break;
    case OpKind::kRemoveEdge: out = "-e"; break;
  }
  for (const std::string& id : op.ids) out += " " + id;
  if (op.color) out += " " + std::to_string(*op.color);
  if (op.weight) out += " " + format_double(*op.weight);
  return out;
}

}  // namespace dgstat::cli
