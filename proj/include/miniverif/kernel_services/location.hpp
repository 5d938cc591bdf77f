#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace miniverif {

/// 1-based source position. Every AST node and annotation carries one.
struct Location {
  std::string file;
  int line = 1;
  int column = 1;

  auto operator<=>(const Location&) const = default;

  std::string to_string() const {
    return file + ":" + std::to_string(line) + ":" + std::to_string(column);
  }
};

/// Stable identity of an AST node within one translation unit.
/// Ids are assigned in pre-order while parsing, so identical inputs
/// always produce identical ids.
struct NodeId {
  std::uint32_t raw = std::numeric_limits<std::uint32_t>::max();

  static constexpr NodeId invalid() { return NodeId{}; }
  constexpr bool is_valid() const {
    return raw != std::numeric_limits<std::uint32_t>::max();
  }

  auto operator<=>(const NodeId&) const = default;
};

}  // namespace miniverif
