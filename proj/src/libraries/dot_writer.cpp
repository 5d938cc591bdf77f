#include "miniverif/libraries/dot_writer.hpp"

#include <sstream>

namespace miniverif::dot {

std::string Digraph::render() const {
  std::ostringstream out;
  out << "digraph " << name_ << " {\n";
  for (const auto& n : nodes_) out << "  \"" << n << "\";\n";
  for (const auto& e : edges_) out << e << "\n";
  out << "}\n";
  return out.str();
}

}  // namespace miniverif::dot
