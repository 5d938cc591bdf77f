#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "domain.hpp"
#include "miniverif/kernel_services/ast.hpp"
#include "miniverif/kernel_services/log.hpp"

namespace miniverif::eva {

struct EvaOptions {
  int wlevel = 3;             // joins at a loop head before widening
  bool narrowing = true;      // one descending iteration
  bool assume_asserts = true; // reduce by undecided attached predicates
};

/// One predicate attached at a program point, identified by an opaque id
/// (the kernel's property id when driven by eva_main).
struct PropertySite {
  std::uint32_t id;
  const ast::Expr* predicate;
};

/// Supplies attached predicates to the analysis. The fixpoint reduces
/// environments by undecided predicates (assume-asserts) and tracks which
/// assumptions flow where.
class PropertyView {
 public:
  virtual ~PropertyView() = default;
  virtual std::vector<PropertySite> at_statement(NodeId stmt) const = 0;
  virtual std::vector<PropertySite> at_function_exit(std::string_view function) const = 0;
};

/// Source asserts only; used by the standalone analyze() overload.
class SourceAssertView : public PropertyView {
 public:
  explicit SourceAssertView(const ast::TranslationUnit& unit);
  std::vector<PropertySite> at_statement(NodeId stmt) const override;
  std::vector<PropertySite> at_function_exit(std::string_view function) const override;

 private:
  std::map<NodeId, std::vector<PropertySite>> sites_;
};

struct FunctionSummary {
  /// Bottom until some context reaches the exit; binds "\result".
  AbstractEnv exit_env = AbstractEnv::bottom();
  std::optional<std::set<std::uint32_t>> exit_hyps;
  bool analyzed = false;  // at least one inlined context
  bool escaped = false;   // some call was skipped (depth or recursion)
};

struct AnalysisResult {
  /// Entry environment per statement, joined over all contexts and
  /// iterations, before assume-asserts reductions at that statement.
  std::map<NodeId, AbstractEnv> stmt_env;
  std::map<NodeId, std::set<std::uint32_t>> stmt_hyps;
  /// Return-value interval per call expression node, joined over visits.
  std::map<NodeId, ai::Interval> call_results;
  /// Resolved targets at IndirectCall nodes, with the call's arity.
  std::map<NodeId, std::pair<TargetSet, int>> call_targets;
  std::map<std::string, FunctionSummary> functions;

  AbstractEnv env_at(NodeId stmt) const {
    auto it = stmt_env.find(stmt);
    return it == stmt_env.end() ? AbstractEnv::bottom() : it->second;
  }
  std::set<std::uint32_t> hyps_at(NodeId stmt) const {
    auto it = stmt_hyps.find(stmt);
    return it == stmt_hyps.end() ? std::set<std::uint32_t>{} : it->second;
  }
};

using LogSink = std::function<void(kernel::Severity, const std::string&)>;

/// Worklist interval analysis over each function's control-flow graph,
/// entering at `main`. Direct calls inline to depth 3; deeper or recursive
/// calls produce top plus a warning.
AnalysisResult analyze(const ast::TranslationUnit& unit, const EvaOptions& options,
                       const PropertyView& properties, LogSink log = {});
/// Same, with source asserts as the only attached predicates.
AnalysisResult analyze(const ast::TranslationUnit& unit, const EvaOptions& options);

/// Interval of an int-typed expression; calls evaluate to top.
ai::Interval eval_expr(const AbstractEnv& env, const ast::Expr& e);
/// Same with call results supplied by the caller (e.g. from a previous
/// analysis).
ai::Interval eval_expr(const AbstractEnv& env, const ast::Expr& e,
                       const std::function<ai::Interval(const ast::Expr&)>& calls);

enum class Truth { yes, no, unknown };

/// Definitely-true / definitely-false / undecidable under `env`.
/// A Bottom environment decides everything vacuously true.
Truth decide(const AbstractEnv& env, const ast::Expr& pred);

/// Constraint propagation: refines variables compared against one-sided
/// expressions; shapes it cannot express leave the environment unchanged.
AbstractEnv assume(AbstractEnv env, const ast::Expr& cond, bool truth);

}  // namespace miniverif::eva
