#pragma once

#include <set>
#include <string>

namespace miniverif::dot {

/// Minimal deterministic DOT emitter: nodes and labeled edges, emitted in
/// lexicographic order so output is byte-stable.
class Digraph {
 public:
  explicit Digraph(std::string name) : name_(std::move(name)) {}

  void add_node(std::string node) { nodes_.insert(std::move(node)); }
  void add_edge(const std::string& from, const std::string& to, const std::string& label) {
    edges_.insert("  \"" + from + "\" -> \"" + to + "\" [label=\"" + label + "\"];");
  }

  std::string render() const;

 private:
  std::string name_;
  std::set<std::string> nodes_;
  std::set<std::string> edges_;  // pre-rendered lines, set-ordered
};

}  // namespace miniverif::dot
