#include "eva.hpp"

#include <algorithm>
#include <memory>

#include "miniverif/kernel_services/ast_visitor.hpp"

namespace miniverif::eva {

using namespace miniverif::ast;
using kernel::KernelContext;

namespace {

/// Adapts the kernel property database: assertions and precondition
/// instances by enclosing statement, postconditions by function.
class DbView : public PropertyView {
 public:
  DbView(const props::PropertyDb& db, const TranslationUnit& unit) {
    for (const auto& p : db.all()) {
      if (p.kind == props::PropertyKind::postcondition) {
        const FunctionDef* fn = nullptr;
        for (const auto& f : unit.functions)
          if (f.id == p.attach) fn = &f;
        if (fn)
          exit_sites_[fn->name].push_back(PropertySite{p.id.raw, p.annotation.predicate.get()});
        continue;
      }
      NodeId stmt = unit.statement_of(p.attach);
      if (!stmt.is_valid()) continue;
      stmt_sites_[stmt].push_back(PropertySite{p.id.raw, p.annotation.predicate.get()});
    }
  }

  std::vector<PropertySite> at_statement(NodeId stmt) const override {
    auto it = stmt_sites_.find(stmt);
    return it == stmt_sites_.end() ? std::vector<PropertySite>{} : it->second;
  }

  std::vector<PropertySite> at_function_exit(std::string_view function) const override {
    auto it = exit_sites_.find(std::string(function));
    return it == exit_sites_.end() ? std::vector<PropertySite>{} : it->second;
  }

 private:
  std::map<NodeId, std::vector<PropertySite>> stmt_sites_;
  std::map<std::string, std::vector<PropertySite>> exit_sites_;
};

std::set<props::PropertyId> to_property_ids(const std::set<std::uint32_t>& raw,
                                            std::uint32_t except) {
  std::set<props::PropertyId> out;
  for (std::uint32_t id : raw)
    if (id != except) out.insert(props::PropertyId{id});
  return out;
}

EvaOptions options_from(const KernelContext& ctx) {
  EvaOptions options;
  std::int64_t wlevel = ctx.config().integer("-eva-wlevel");
  if (wlevel < 0 || wlevel > 64) {
    ctx.log(kernel::Severity::warning,
            "-eva-wlevel " + std::to_string(wlevel) + " is out of [0,64]; clamping");
    wlevel = std::clamp<std::int64_t>(wlevel, 0, 64);
  }
  options.wlevel = static_cast<int>(wlevel);
  options.narrowing = ctx.config().on("-eva-narrow");
  options.assume_asserts = ctx.config().on("-eva-assume-asserts");
  return options;
}

/// Replays the per-statement decision sequence of the fixpoint over its
/// final states and turns the verdicts into emissions. Eva never emits
/// False: reachability is over-approximate, so definite falsity is not
/// sound to claim here.
class Emitter {
 public:
  Emitter(KernelContext& ctx, const AnalysisResult& result, const DbView& view,
          const EvaOptions& options)
      : ctx_(ctx), result_(result), view_(view), options_(options) {}

  void run() {
    for (const auto& fn : ctx_.unit().functions) {
      for (const auto& s : fn.body) walk_stmt(*s);
      emit_postconditions(fn);
    }
  }

 private:
  void emit(std::uint32_t site, props::LocalStatus status,
            std::set<props::PropertyId> hyps) {
    ctx_.emit_status(props::PropertyId{site}, status, std::move(hyps));
  }

  void walk_stmt(const Stmt& s) {
    auto sites = view_.at_statement(s.id);
    if (!sites.empty()) {
      AbstractEnv env = result_.env_at(s.id);
      std::set<std::uint32_t> hyps = result_.hyps_at(s.id);
      for (const PropertySite& site : sites) {
        if (env.is_bottom()) {
          ctx_.log(kernel::Severity::info,
                   "annotation at unreachable point; vacuously valid",
                   ctx_.unit().location_of(s.id));
          emit(site.id, props::LocalStatus::True, to_property_ids(hyps, site.id));
          continue;
        }
        Truth t = decide(env, *site.predicate);
        if (t == Truth::yes) {
          emit(site.id, props::LocalStatus::True, to_property_ids(hyps, site.id));
        } else {
          emit(site.id, props::LocalStatus::Maybe, {});
        }
        if (t != Truth::yes && options_.assume_asserts) {
          AbstractEnv reduced = assume(env, *site.predicate, true);
          if (!(reduced == env)) {
            env = std::move(reduced);
            hyps.insert(site.id);
          }
        }
      }
    }
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Stmt::If>) {
            walk_stmt(*n.then_branch);
            if (n.else_branch) walk_stmt(*n.else_branch);
          } else if constexpr (std::is_same_v<T, Stmt::While>) {
            walk_stmt(*n.body);
          } else if constexpr (std::is_same_v<T, Stmt::Block>) {
            for (const auto& inner : n.stmts) walk_stmt(*inner);
          }
        },
        s.node);
  }

  void emit_postconditions(const FunctionDef& fn) {
    auto sites = view_.at_function_exit(fn.name);
    if (sites.empty()) return;
    auto it = result_.functions.find(fn.name);
    if (it == result_.functions.end() || !it->second.analyzed) {
      // Never called from main: no context to check against.
      for (const PropertySite& site : sites) {
        ctx_.log(kernel::Severity::info,
                 "postcondition of uncalled function '" + fn.name + "'; vacuously valid");
        emit(site.id, props::LocalStatus::True, {});
      }
      return;
    }
    const FunctionSummary& summary = it->second;
    if (summary.escaped) {
      // Some invocation was skipped (depth or recursion): contexts are
      // not all covered, so nothing definite can be claimed.
      for (const PropertySite& site : sites) emit(site.id, props::LocalStatus::Maybe, {});
      return;
    }
    std::set<std::uint32_t> hyps =
        summary.exit_hyps ? *summary.exit_hyps : std::set<std::uint32_t>{};
    for (const PropertySite& site : sites) {
      if (summary.exit_env.is_bottom()) {
        ctx_.log(kernel::Severity::info,
                 "'" + fn.name + "' never returns; postcondition vacuously valid");
        emit(site.id, props::LocalStatus::True, to_property_ids(hyps, site.id));
        continue;
      }
      Truth t = decide(summary.exit_env, *site.predicate);
      if (t == Truth::yes)
        emit(site.id, props::LocalStatus::True, to_property_ids(hyps, site.id));
      else
        emit(site.id, props::LocalStatus::Maybe, {});
    }
  }

  KernelContext& ctx_;
  const AnalysisResult& result_;
  const DbView& view_;
  const EvaOptions& options_;
};

void publish_api(KernelContext& ctx, std::shared_ptr<const AnalysisResult> result) {
  const TranslationUnit& unit = ctx.unit();

  // eval_at: interval of an expression node in its statement's final
  // environment. Precompute the table so lookups stay cheap.
  auto table = std::make_shared<std::map<NodeId, ai::Interval>>();
  auto recorded_calls = [result](const Expr& call_expr) {
    auto it = result->call_results.find(call_expr.id);
    return it == result->call_results.end() ? ai::Interval::top() : it->second;
  };
  ast::Visitor visitor;
  visitor.on_expr = [&](const Expr& e) {
    if (!e.type.is_int()) return;
    NodeId stmt = unit.statement_of(e.id);
    if (!stmt.is_valid()) return;
    (*table)[e.id] = eval_expr(result->env_at(stmt), e, recorded_calls);
  };
  ast::visit(unit, visitor);
  // Assignment targets carry the stored value rather than the entry value.
  ast::Visitor target_walk;
  target_walk.on_stmt = [&](const Stmt& s) {
    const auto* n = s.as<Stmt::Assign>();
    if (!n || !n->target->type.is_int()) return;
    (*table)[n->target->id] = eval_expr(result->env_at(s.id), *n->value, recorded_calls);
  };
  ast::visit(unit, target_walk);

  ctx.register_value_as<std::function<ai::Interval(NodeId)>>(
      "eva.eval_at", [table](NodeId node) {
        auto it = table->find(node);
        return it == table->end() ? ai::Interval::top() : it->second;
      });

  // fn_targets: resolved callees at an IndirectCall node. Saturated sets
  // come back as the full list of arity-matching functions.
  auto targets = std::make_shared<std::map<NodeId, std::vector<std::string>>>();
  for (const auto& [node, entry] : result->call_targets) {
    const auto& [set, arity] = entry;
    std::vector<std::string> names;
    if (set.is_any()) {
      for (const auto& f : unit.functions)
        if (static_cast<int>(f.params.size()) == arity) names.push_back(f.name);
      std::sort(names.begin(), names.end());
    } else {
      names.assign(set.names().begin(), set.names().end());
    }
    (*targets)[node] = std::move(names);
  }
  ctx.register_value_as<std::function<std::vector<std::string>(NodeId)>>(
      "eva.fn_targets", [targets](NodeId node) {
        auto it = targets->find(node);
        return it == targets->end() ? std::vector<std::string>{} : it->second;
      });
}

void eva_main(KernelContext& ctx) {
  EvaOptions options = options_from(ctx);
  DbView view(ctx.properties(), ctx.unit());
  auto result = std::make_shared<AnalysisResult>(
      analyze(ctx.unit(), options, view, [&ctx](kernel::Severity s, const std::string& m) {
        ctx.log(s, m);
      }));
  Emitter(ctx, *result, view, options).run();
  publish_api(ctx, result);
}

}  // namespace

void register_self(kernel::Kernel& kernel) {
  kernel::PluginDescriptor desc;
  desc.name = "eva";
  desc.version = "1.0";
  desc.help = "interval abstract interpretation proving annotations or raising alarms";
  desc.parameters = {
      kernel::ParameterSpec::integer("-eva-wlevel", 3,
                                     "joins at a loop head before widening"),
      kernel::ParameterSpec::on_off("-eva-narrow", true, "one descending iteration"),
      kernel::ParameterSpec::on_off("-eva-assume-asserts", true,
                                    "reduce states by undecided annotations"),
  };
  desc.main = eva_main;
  kernel.register_plugin(std::move(desc));
}

}  // namespace miniverif::eva
