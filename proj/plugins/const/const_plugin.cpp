#include "const_plugin.hpp"

#include "miniverif/libraries/checked_math.hpp"

namespace miniverif::constfold {

using namespace miniverif::ast;

namespace {

std::optional<std::int64_t> fold_int(const Expr& e);

std::optional<bool> fold_bool(const Expr& e) {
  if (const auto* n = e.as<Expr::Binary>()) {
    if (n->op == BinaryOp::land || n->op == BinaryOp::lor) {
      auto l = fold_bool(*n->lhs);
      auto r = fold_bool(*n->rhs);
      if (!l || !r) return std::nullopt;
      return n->op == BinaryOp::land ? (*l && *r) : (*l || *r);
    }
    if (is_comparison(n->op)) {
      auto l = fold_int(*n->lhs);
      auto r = fold_int(*n->rhs);
      if (!l || !r) return std::nullopt;
      switch (n->op) {
        case BinaryOp::lt: return *l < *r;
        case BinaryOp::le: return *l <= *r;
        case BinaryOp::gt: return *l > *r;
        case BinaryOp::ge: return *l >= *r;
        case BinaryOp::eq: return *l == *r;
        default: return *l != *r;
      }
    }
    return std::nullopt;
  }
  if (const auto* n = e.as<Expr::Unary>(); n && n->op == UnaryOp::lnot) {
    auto v = fold_bool(*n->operand);
    if (!v) return std::nullopt;
    return !*v;
  }
  return std::nullopt;
}

std::optional<std::int64_t> fold_int(const Expr& e) {
  if (const auto* n = e.as<Expr::IntLit>()) return n->value;
  if (const auto* n = e.as<Expr::Unary>(); n && n->op == UnaryOp::neg) {
    auto v = fold_int(*n->operand);
    if (!v) return std::nullopt;
    return num::checked_neg(*v);
  }
  if (const auto* n = e.as<Expr::Binary>()) {
    auto l = fold_int(*n->lhs);
    auto r = fold_int(*n->rhs);
    if (!l || !r) return std::nullopt;
    switch (n->op) {
      case BinaryOp::add: return num::checked_add(*l, *r);
      case BinaryOp::sub: return num::checked_sub(*l, *r);
      case BinaryOp::mul: return num::checked_mul(*l, *r);
      case BinaryOp::div: return num::checked_div(*l, *r);
      case BinaryOp::rem: return num::checked_rem(*l, *r);
      default: return std::nullopt;
    }
  }
  return std::nullopt;
}

void const_main(kernel::KernelContext& ctx) {
  const props::PropertyDb& db = ctx.properties();
  for (const auto& p : db.all()) {
    if (!is_literal_predicate(*p.annotation.predicate)) continue;
    auto verdict = fold_predicate(*p.annotation.predicate);
    if (!verdict) continue;  // e.g. a guard like `assert 1/0 == 1`
    ctx.emit_status(p.id, *verdict ? props::LocalStatus::True : props::LocalStatus::False,
                    {});
  }
}

}  // namespace

bool is_literal_predicate(const Expr& pred) {
  bool literal = true;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::IntLit>) {
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          literal = is_literal_predicate(*n.lhs) && is_literal_predicate(*n.rhs);
        } else if constexpr (std::is_same_v<T, Expr::Unary>) {
          literal = is_literal_predicate(*n.operand);
        } else {
          literal = false;  // Var, ArrayRead, Call, AddrOfFn, Result
        }
      },
      pred.node);
  return literal;
}

std::optional<bool> fold_predicate(const Expr& pred) { return fold_bool(pred); }

void register_self(kernel::Kernel& kernel) {
  kernel::PluginDescriptor desc;
  desc.name = "const";
  desc.version = "1.0";
  desc.help = "prove or refute annotation predicates that fold to a constant";
  desc.main = const_main;
  kernel.register_plugin(std::move(desc));
}

}  // namespace miniverif::constfold
