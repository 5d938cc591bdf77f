#include "miniverif/kernel_services/type_witness.hpp"

namespace miniverif::kernel {

std::string TypeWitness::to_string() const {
  switch (kind_) {
    case Kind::integer: return "int";
    case Kind::boolean: return "bool";
    case Kind::text: return "text";
    case Kind::node_id: return "node-id";
    case Kind::interval: return "interval";
    case Kind::list: return "list-of(" + element().to_string() + ")";
    case Kind::pair: return "pair(" + first().to_string() + "," + second().to_string() + ")";
    case Kind::function: {
      std::string out = "function(";
      for (std::size_t i = 0; i < parameter_count(); ++i) {
        if (i) out += ",";
        out += parameter(i).to_string();
      }
      out += " -> " + result().to_string() + ")";
      return out;
    }
  }
  return "?";
}

}  // namespace miniverif::kernel
