#include "callgraph.hpp"

#include <algorithm>

#include "miniverif/kernel_services/ast_visitor.hpp"
#include "miniverif/libraries/dot_writer.hpp"
#include "miniverif/libraries/file_io.hpp"

namespace miniverif::cg {

using namespace miniverif::ast;
using kernel::KernelContext;

std::string_view resolution_name(Resolution r) {
  switch (r) {
    case Resolution::direct: return "Direct";
    case Resolution::eva_resolved: return "EvaResolved";
    case Resolution::conservative: return "Conservative";
  }
  return "?";
}

std::string CallGraph::to_dot() const {
  dot::Digraph graph("cg");
  for (const auto& n : nodes) graph.add_node(n);
  for (const auto& e : edges)
    graph.add_edge(e.caller, e.callee, std::string(resolution_name(e.resolution)));
  return graph.render();
}

CallGraph build(const TranslationUnit& unit,
                const std::function<std::vector<std::string>(NodeId)>* fn_targets) {
  CallGraph graph;
  for (const auto& f : unit.functions) graph.nodes.push_back(f.name);

  auto add_edge = [&](CallEdge edge) {
    for (const auto& e : graph.edges)
      if (e.caller == edge.caller && e.callee == edge.callee && e.site == edge.site) return;
    if (!unit.find_function(edge.callee)) return;  // endpoints are defined functions
    graph.edges.push_back(std::move(edge));
  };

  for (const auto& f : unit.functions) {
    Visitor visitor;
    visitor.on_expr = [&](const Expr& e) {
      const auto* call = e.as<Expr::Call>();
      if (!call) return;
      if (call->kind == CallKind::direct) {
        add_edge(CallEdge{f.name, call->callee, e.id, Resolution::direct});
        return;
      }
      if (call->kind != CallKind::indirect) return;
      if (fn_targets) {
        for (const std::string& target : (*fn_targets)(e.id))
          add_edge(CallEdge{f.name, target, e.id, Resolution::eva_resolved});
        return;
      }
      for (const auto& candidate : unit.functions)
        if (candidate.params.size() == call->args.size())
          add_edge(CallEdge{f.name, candidate.name, e.id, Resolution::conservative});
    };
    // Walk only this function's statements (contract predicates hold no
    // calls; the typechecker rejects them there).
    visit(f, visitor);
  }
  return graph;
}

namespace {

void cg_main(KernelContext& ctx) {
  using Targets = std::function<std::vector<std::string>(NodeId)>;
  auto lookup = ctx.lookup<Targets>("eva.fn_targets");
  if (lookup.status == kernel::LookupStatus::type_mismatch) {
    ctx.log(kernel::Severity::fatal,
            "'eva.fn_targets' exists with an unexpected type; plugin API version skew");
    return;
  }
  const Targets* targets =
      lookup.status == kernel::LookupStatus::found ? lookup.value : nullptr;
  if (!targets)
    ctx.log(kernel::Severity::info,
            "eva results unavailable; resolving function pointers by arity");

  CallGraph graph = build(ctx.unit(), targets);
  const std::string& path = ctx.config().text("-cg-out");
  if (!io::write_file(path, graph.to_dot())) {
    ctx.log(kernel::Severity::error, "cannot write call graph to '" + path + "'");
    ctx.force_failure();
    return;
  }
  ctx.log(kernel::Severity::info,
          "call graph with " + std::to_string(graph.nodes.size()) + " node(s) and " +
              std::to_string(graph.edges.size()) + " edge(s) written to '" + path + "'");
}

}  // namespace

void register_self(kernel::Kernel& kernel) {
  kernel::PluginDescriptor desc;
  desc.name = "cg";
  desc.version = "1.0";
  desc.help = "build the call graph, resolving function pointers through eva when present";
  desc.parameters = {
      kernel::ParameterSpec::text("-cg-out", "callgraph.dot", "output path (DOT format)"),
  };
  desc.main = cg_main;
  kernel.register_plugin(std::move(desc));
}

}  // namespace miniverif::cg
