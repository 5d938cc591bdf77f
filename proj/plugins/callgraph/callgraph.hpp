#pragma once

#include <string>
#include <vector>

#include "miniverif/kernel_services/ast.hpp"
#include "miniverif/kernel_services/kernel.hpp"

namespace miniverif::cg {

/// Registration entry point, invoked by the driver at Boot.
void register_self(kernel::Kernel& kernel);

enum class Resolution { direct, eva_resolved, conservative };
std::string_view resolution_name(Resolution r);

struct CallEdge {
  std::string caller;
  std::string callee;
  NodeId site;
  Resolution resolution;

  friend bool operator==(const CallEdge&, const CallEdge&) = default;
};

struct CallGraph {
  std::vector<std::string> nodes;  // defined functions, declaration order
  std::vector<CallEdge> edges;     // deduplicated by (caller, callee, site)

  std::string to_dot() const;
};

/// Builds the graph, resolving indirect calls through eva's published API
/// when `fn_targets` is available and falling back to every function of
/// matching arity otherwise.
CallGraph build(const ast::TranslationUnit& unit,
                const std::function<std::vector<std::string>(NodeId)>* fn_targets);

}  // namespace miniverif::cg
