#include "rte.hpp"

#include <limits>

#include "miniverif/kernel_services/ast_visitor.hpp"

namespace miniverif::rte {

using namespace miniverif::ast;
using kernel::KernelContext;

std::pair<std::int64_t, std::int64_t> machine_range(int bits) {
  switch (bits) {
    case 16: return {-32768, 32767};
    case 32: return {-2147483647 - 1, 2147483647};
    default:
      return {std::numeric_limits<std::int64_t>::min(),
              std::numeric_limits<std::int64_t>::max()};
  }
}

namespace {

struct RteOptions {
  bool div = true;
  bool bounds = true;
  bool overflow = false;
  int machdep = 32;
};

ExprPtr make_int(std::int64_t value, const Location& loc) {
  auto e = std::make_unique<Expr>();
  e->loc = loc;
  e->node = Expr::IntLit{value};
  return e;
}

ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_unique<Expr>();
  e->loc = lhs->loc;
  e->node = Expr::Binary{op, std::move(lhs), std::move(rhs)};
  return e;
}

/// Generates guard assertions for one function in a deterministic order:
/// statements in id order, expressions pre-order, rules div < bounds <
/// overflow at each node.
class GuardGenerator {
 public:
  GuardGenerator(KernelContext& ctx, const RteOptions& options, const FunctionDef& fn)
      : ctx_(ctx), options_(options), fn_(fn) {}

  void run() {
    for (const auto& s : fn_.body) walk_stmt(*s);
  }

 private:
  void attach_guard(ExprPtr predicate, const Stmt& stmt) {
    Annotation ann;
    ann.kind = AnnotationKind::assertion;
    ann.predicate = std::move(predicate);
    ann.attach = stmt.id;
    ann.loc = stmt.loc;
    props::PropertyId id =
        ctx_.register_property(std::move(ann), props::PropertyKind::assertion, stmt.id);
    ctx_.emit_status(id, props::LocalStatus::Maybe, {});
  }

  void guard_division(const Expr& divisor, const Stmt& stmt) {
    attach_guard(make_binary(BinaryOp::ne, clone(divisor), make_int(0, stmt.loc)), stmt);
  }

  void guard_bounds(const std::string& array, const Expr& index, const Stmt& stmt) {
    const Local* local = fn_.find_local(array);
    if (!local || local->type.kind() != Type::Kind::array) return;
    ExprPtr low = make_binary(BinaryOp::le, make_int(0, stmt.loc), clone(index));
    ExprPtr high =
        make_binary(BinaryOp::lt, clone(index), make_int(local->type.array_size(), stmt.loc));
    attach_guard(make_binary(BinaryOp::land, std::move(low), std::move(high)), stmt);
  }

  void guard_overflow(const Expr& e, const Stmt& stmt) {
    auto [min, max] = machine_range(options_.machdep);
    ExprPtr low = make_binary(BinaryOp::le, make_int(min, stmt.loc), clone(e));
    ExprPtr high = make_binary(BinaryOp::le, clone(e), make_int(max, stmt.loc));
    attach_guard(make_binary(BinaryOp::land, std::move(low), std::move(high)), stmt);
  }

  void walk_expr(const Expr& e, const Stmt& stmt, bool parent_arith) {
    const auto* bin = e.as<Expr::Binary>();
    bool arith = bin && is_arithmetic(bin->op);
    if (bin && options_.div && (bin->op == BinaryOp::div || bin->op == BinaryOp::rem))
      guard_division(*bin->rhs, stmt);
    if (options_.bounds)
      if (const auto* read = e.as<Expr::ArrayRead>()) guard_bounds(read->array, *read->index, stmt);
    if (options_.overflow && arith && !parent_arith) guard_overflow(e, stmt);

    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Expr::ArrayRead>) {
            walk_expr(*n.index, stmt, false);
          } else if constexpr (std::is_same_v<T, Expr::Binary>) {
            walk_expr(*n.lhs, stmt, arith);
            walk_expr(*n.rhs, stmt, arith);
          } else if constexpr (std::is_same_v<T, Expr::Unary>) {
            walk_expr(*n.operand, stmt, false);
          } else if constexpr (std::is_same_v<T, Expr::Call>) {
            for (const auto& a : n.args) walk_expr(*a, stmt, false);
          }
        },
        e.node);
  }

  void walk_stmt(const Stmt& s) {
    if (const auto* n = s.as<Stmt::Assign>()) {
      walk_expr(*n->value, s, false);
    } else if (const auto* n = s.as<Stmt::ArrayAssign>()) {
      if (options_.bounds) guard_bounds(n->array, *n->index, s);
      walk_expr(*n->index, s, false);
      walk_expr(*n->value, s, false);
    } else if (const auto* n = s.as<Stmt::If>()) {
      walk_expr(*n->cond, s, false);
      walk_stmt(*n->then_branch);
      if (n->else_branch) walk_stmt(*n->else_branch);
    } else if (const auto* n = s.as<Stmt::While>()) {
      walk_expr(*n->cond, s, false);
      walk_stmt(*n->body);
    } else if (const auto* n = s.as<Stmt::Return>()) {
      walk_expr(*n->value, s, false);
    } else if (const auto* n = s.as<Stmt::ExprStmt>()) {
      walk_expr(*n->call, s, false);
    } else if (const auto* n = s.as<Stmt::Block>()) {
      for (const auto& inner : n->stmts) walk_stmt(*inner);
    }
  }

  KernelContext& ctx_;
  const RteOptions& options_;
  const FunctionDef& fn_;
};

void rte_main(KernelContext& ctx) {
  RteOptions options;
  options.div = ctx.config().on("-rte-div");
  options.bounds = ctx.config().on("-rte-bounds");
  options.overflow = ctx.config().on("-rte-overflow");
  options.machdep = static_cast<int>(std::stol(ctx.config().text("-machdep")));
  if (!options.div && !options.bounds && !options.overflow) {
    ctx.log(kernel::Severity::warning, "all rule classes are disabled; nothing to generate");
    return;
  }
  for (const auto& fn : ctx.unit().functions) GuardGenerator(ctx, options, fn).run();
}

}  // namespace

void register_self(kernel::Kernel& kernel) {
  kernel::PluginDescriptor desc;
  desc.name = "rte";
  desc.version = "1.0";
  desc.help = "generate a guard annotation for each potential runtime error";
  desc.parameters = {
      kernel::ParameterSpec::on_off("-rte-div", true, "guard divisions and remainders"),
      kernel::ParameterSpec::on_off("-rte-bounds", true, "guard array accesses"),
      kernel::ParameterSpec::on_off("-rte-overflow", false,
                                    "guard arithmetic against machine overflow"),
  };
  desc.main = rte_main;
  kernel.register_plugin(std::move(desc));
}

}  // namespace miniverif::rte
