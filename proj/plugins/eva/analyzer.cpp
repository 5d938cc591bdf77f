#include "analyzer.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "miniverif/kernel_services/errors.hpp"

namespace miniverif::eva {

using namespace miniverif::ast;
using ai::Bound;
using ai::Interval;

namespace {

constexpr int kInlineDepth = 3;
constexpr int kVisitBudget = 1000;
const char* const kResultVar = "\\result";

using CallEval = std::function<Interval(const Expr&)>;

Interval eval_with(const AbstractEnv& env, const Expr& e, const CallEval& calls) {
  if (env.is_bottom()) return Interval::bottom();
  if (const auto* n = e.as<Expr::IntLit>()) return Interval::constant(n->value);
  if (const auto* n = e.as<Expr::Var>()) {
    if (e.type.kind() == Type::Kind::fnptr) return Interval::top();
    return env.get(n->name);
  }
  if (const auto* n = e.as<Expr::ArrayRead>()) {
    Interval idx = eval_with(env, *n->index, calls);
    if (idx.is_bottom()) return Interval::bottom();
    return env.get_array(n->array);
  }
  if (const auto* n = e.as<Expr::Binary>()) {
    if (!is_comparison(n->op) && n->op != BinaryOp::land && n->op != BinaryOp::lor) {
      Interval l = eval_with(env, *n->lhs, calls);
      Interval r = eval_with(env, *n->rhs, calls);
      switch (n->op) {
        case BinaryOp::add: return l + r;
        case BinaryOp::sub: return l - r;
        case BinaryOp::mul: return l * r;
        case BinaryOp::div: return Interval::div(l, r);
        case BinaryOp::rem: return Interval::rem(l, r);
        default: break;
      }
    }
    return Interval::top();  // boolean-valued: not an int expression
  }
  if (const auto* n = e.as<Expr::Unary>()) {
    if (n->op == UnaryOp::neg) return -eval_with(env, *n->operand, calls);
    return Interval::top();
  }
  if (e.as<Expr::Call>()) return calls ? calls(e) : Interval::top();
  if (e.as<Expr::Result>()) return env.get(kResultVar);
  return Interval::top();  // AddrOfFn
}

// --- deciding predicates ----------------------------------------------

Truth truth_and(Truth a, Truth b) {
  if (a == Truth::yes && b == Truth::yes) return Truth::yes;
  if (a == Truth::no || b == Truth::no) return Truth::no;
  return Truth::unknown;
}

Truth truth_or(Truth a, Truth b) {
  if (a == Truth::yes || b == Truth::yes) return Truth::yes;
  if (a == Truth::no && b == Truth::no) return Truth::no;
  return Truth::unknown;
}

Truth truth_not(Truth a) {
  if (a == Truth::yes) return Truth::no;
  if (a == Truth::no) return Truth::yes;
  return Truth::unknown;
}

Truth decide_comparison(BinaryOp op, const Interval& a, const Interval& b) {
  if (a.is_bottom() || b.is_bottom()) return Truth::unknown;
  switch (op) {
    case BinaryOp::lt:
      if (a.hi() < b.lo()) return Truth::yes;
      if (!(a.lo() < b.hi())) return Truth::no;
      return Truth::unknown;
    case BinaryOp::le:
      if (a.hi() <= b.lo()) return Truth::yes;
      if (!(a.lo() <= b.hi())) return Truth::no;
      return Truth::unknown;
    case BinaryOp::gt:
      return truth_not(decide_comparison(BinaryOp::le, a, b));
    case BinaryOp::ge:
      return truth_not(decide_comparison(BinaryOp::lt, a, b));
    case BinaryOp::eq: {
      if (meet(a, b).is_bottom()) return Truth::no;
      auto ca = a.as_constant();
      auto cb = b.as_constant();
      if (ca && cb && *ca == *cb) return Truth::yes;
      return Truth::unknown;
    }
    default: {  // ne
      if (meet(a, b).is_bottom()) return Truth::yes;
      auto ca = a.as_constant();
      auto cb = b.as_constant();
      if (ca && cb && *ca == *cb) return Truth::no;
      return Truth::unknown;
    }
  }
}

Truth decide_impl(const AbstractEnv& env, const Expr& pred) {
  if (env.is_bottom()) return Truth::yes;  // vacuously
  if (const auto* n = pred.as<Expr::Binary>()) {
    if (n->op == BinaryOp::land)
      return truth_and(decide_impl(env, *n->lhs), decide_impl(env, *n->rhs));
    if (n->op == BinaryOp::lor)
      return truth_or(decide_impl(env, *n->lhs), decide_impl(env, *n->rhs));
    if (is_comparison(n->op))
      return decide_comparison(n->op, eval_with(env, *n->lhs, nullptr),
                               eval_with(env, *n->rhs, nullptr));
  }
  if (const auto* n = pred.as<Expr::Unary>(); n && n->op == UnaryOp::lnot)
    return truth_not(decide_impl(env, *n->operand));
  // Int-valued condition: nonzero means true.
  Interval v = eval_with(env, pred, nullptr);
  if (v.is_bottom()) return Truth::unknown;
  if (!v.contains(0)) return Truth::yes;
  if (v.as_constant() && *v.as_constant() == 0) return Truth::no;
  return Truth::unknown;
}

// --- assuming conditions ------------------------------------------------

// `v != c` sharpens an endpoint when c sits on it.
Interval exclude_constant(const Interval& v, std::int64_t c) {
  if (v.is_bottom()) return v;
  if (auto k = v.as_constant(); k && *k == c) return Interval::bottom();
  if (v.lo().is_finite() && v.lo().value() == c)
    return Interval::range(Bound::of(c + 1), v.hi());
  if (v.hi().is_finite() && v.hi().value() == c)
    return Interval::range(v.lo(), Bound::of(c - 1));
  return v;
}

// Constraint on `v` for `v op other` having truth value `truth`.
Interval constrain(BinaryOp op, const Interval& v, const Interval& other, bool truth) {
  if (v.is_bottom() || other.is_bottom()) return v;
  if (!truth) {
    switch (op) {
      case BinaryOp::lt: op = BinaryOp::ge; break;
      case BinaryOp::le: op = BinaryOp::gt; break;
      case BinaryOp::gt: op = BinaryOp::le; break;
      case BinaryOp::ge: op = BinaryOp::lt; break;
      case BinaryOp::eq: op = BinaryOp::ne; break;
      default: op = BinaryOp::eq; break;  // ne
    }
  }
  switch (op) {
    case BinaryOp::lt: {
      Bound hi = other.hi().is_finite() ? Bound::of(other.hi().value() - 1) : other.hi();
      return meet(v, Interval::range(Bound::minus_inf(), hi));
    }
    case BinaryOp::le:
      return meet(v, Interval::range(Bound::minus_inf(), other.hi()));
    case BinaryOp::gt: {
      Bound lo = other.lo().is_finite() ? Bound::of(other.lo().value() + 1) : other.lo();
      return meet(v, Interval::range(lo, Bound::plus_inf()));
    }
    case BinaryOp::ge:
      return meet(v, Interval::range(other.lo(), Bound::plus_inf()));
    case BinaryOp::eq:
      return meet(v, other);
    default:  // ne
      if (auto c = other.as_constant()) return exclude_constant(v, *c);
      return v;
  }
}

BinaryOp mirror(BinaryOp op) {
  switch (op) {
    case BinaryOp::lt: return BinaryOp::gt;
    case BinaryOp::le: return BinaryOp::ge;
    case BinaryOp::gt: return BinaryOp::lt;
    case BinaryOp::ge: return BinaryOp::le;
    default: return op;  // eq, ne are symmetric
  }
}

AbstractEnv assume_impl(AbstractEnv env, const Expr& cond, bool truth) {
  if (env.is_bottom()) return env;
  if (const auto* n = cond.as<Expr::Binary>()) {
    if (n->op == BinaryOp::land) {
      if (truth) {
        env = assume_impl(std::move(env), *n->lhs, true);
        return assume_impl(std::move(env), *n->rhs, true);
      }
      return env;  // ¬(a && b) does not split into interval constraints
    }
    if (n->op == BinaryOp::lor) {
      if (!truth) {
        env = assume_impl(std::move(env), *n->lhs, false);
        return assume_impl(std::move(env), *n->rhs, false);
      }
      return env;
    }
    if (is_comparison(n->op)) {
      if (const auto* lv = n->lhs->as<Expr::Var>();
          lv && n->lhs->type.kind() != Type::Kind::fnptr) {
        Interval rhs = eval_with(env, *n->rhs, nullptr);
        env.set(lv->name, constrain(n->op, env.get(lv->name), rhs, truth));
        if (env.is_bottom()) return env;
      }
      if (const auto* rv = n->rhs->as<Expr::Var>();
          rv && n->rhs->type.kind() != Type::Kind::fnptr) {
        Interval lhs = eval_with(env, *n->lhs, nullptr);
        env.set(rv->name, constrain(mirror(n->op), env.get(rv->name), lhs, truth));
      }
      return env;
    }
  }
  if (const auto* n = cond.as<Expr::Unary>(); n && n->op == UnaryOp::lnot)
    return assume_impl(std::move(env), *n->operand, !truth);
  // Int-valued condition used for truthiness.
  if (cond.type.is_int()) {
    if (const auto* v = cond.as<Expr::Var>()) {
      Interval cur = env.get(v->name);
      env.set(v->name,
              truth ? exclude_constant(cur, 0) : meet(cur, Interval::constant(0)));
    }
  }
  return env;
}

}  // namespace

Interval eval_expr(const AbstractEnv& env, const Expr& e) {
  return eval_with(env, e, nullptr);
}

Interval eval_expr(const AbstractEnv& env, const Expr& e,
                   const std::function<Interval(const Expr&)>& calls) {
  return eval_with(env, e, calls);
}

Truth decide(const AbstractEnv& env, const Expr& pred) { return decide_impl(env, pred); }

AbstractEnv assume(AbstractEnv env, const Expr& cond, bool truth) {
  return assume_impl(std::move(env), cond, truth);
}

// ---------------------------------------------------------------------------
// SourceAssertView

SourceAssertView::SourceAssertView(const TranslationUnit& unit) {
  // Synthetic site ids in visit order; they only key hypothesis sets
  // inside one analysis.
  std::uint32_t next = 0;
  struct Walk {
    std::map<NodeId, std::vector<PropertySite>>& sites;
    std::uint32_t& next;
    void stmt(const Stmt& s) {
      for (const auto& a : s.asserts)
        sites[s.id].push_back(PropertySite{next++, a.predicate.get()});
      std::visit(
          [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Stmt::If>) {
              stmt(*n.then_branch);
              if (n.else_branch) stmt(*n.else_branch);
            } else if constexpr (std::is_same_v<T, Stmt::While>) {
              stmt(*n.body);
            } else if constexpr (std::is_same_v<T, Stmt::Block>) {
              for (const auto& inner : n.stmts) stmt(*inner);
            }
          },
          s.node);
    }
  } walk{sites_, next};
  for (const auto& f : unit.functions)
    for (const auto& s : f.body) walk.stmt(*s);
}

std::vector<PropertySite> SourceAssertView::at_statement(NodeId stmt) const {
  auto it = sites_.find(stmt);
  return it == sites_.end() ? std::vector<PropertySite>{} : it->second;
}

std::vector<PropertySite> SourceAssertView::at_function_exit(std::string_view) const {
  return {};
}

// ---------------------------------------------------------------------------
// Control-flow graphs

namespace {

struct Cfg {
  struct Edge {
    int to;
    const Expr* guard = nullptr;
    bool truth = true;
  };
  struct Node {
    const Stmt* stmt = nullptr;  // null: entry or exit
    bool loop_head = false;
    std::vector<Edge> out;
  };
  std::vector<Node> nodes;  // 0 = entry; exit is the last node
  int entry = 0;
  int exit = 0;
};

class CfgBuilder {
 public:
  Cfg build(const FunctionDef& fn) {
    cfg_.nodes.push_back(Cfg::Node{});  // entry
    auto out = build_seq(fn.body, {Pending{cfg_.entry, nullptr, true}});
    cfg_.exit = add_node(nullptr);
    connect(out, cfg_.exit);
    for (int r : returns_) cfg_.nodes[r].out.push_back(Cfg::Edge{cfg_.exit, nullptr, true});
    return std::move(cfg_);
  }

 private:
  struct Pending {
    int from;
    const Expr* guard;
    bool truth;
  };

  int add_node(const Stmt* stmt) {
    cfg_.nodes.push_back(Cfg::Node{stmt, false, {}});
    return static_cast<int>(cfg_.nodes.size()) - 1;
  }

  void connect(const std::vector<Pending>& pendings, int to) {
    for (const auto& p : pendings)
      cfg_.nodes[p.from].out.push_back(Cfg::Edge{to, p.guard, p.truth});
  }

  std::vector<Pending> build_seq(const std::vector<StmtPtr>& stmts,
                                 std::vector<Pending> in) {
    for (const auto& s : stmts) in = build_stmt(*s, std::move(in));
    return in;
  }

  std::vector<Pending> build_stmt(const Stmt& s, std::vector<Pending> in) {
    int node = add_node(&s);
    connect(in, node);
    if (const auto* n = s.as<Stmt::If>()) {
      auto out = build_stmt(*n->then_branch, {Pending{node, n->cond.get(), true}});
      if (n->else_branch) {
        auto else_out = build_stmt(*n->else_branch, {Pending{node, n->cond.get(), false}});
        out.insert(out.end(), else_out.begin(), else_out.end());
      } else {
        out.push_back(Pending{node, n->cond.get(), false});
      }
      return out;
    }
    if (const auto* n = s.as<Stmt::While>()) {
      cfg_.nodes[node].loop_head = true;
      auto body_out = build_stmt(*n->body, {Pending{node, n->cond.get(), true}});
      connect(body_out, node);  // back edge
      return {Pending{node, n->cond.get(), false}};
    }
    if (const auto* n = s.as<Stmt::Block>()) {
      return build_seq(n->stmts, {Pending{node, nullptr, true}});
    }
    if (s.as<Stmt::Return>()) {
      returns_.push_back(node);
      return {};
    }
    return {Pending{node, nullptr, true}};
  }

  Cfg cfg_;
  std::vector<int> returns_;
};

// ---------------------------------------------------------------------------
// The engine

struct State {
  AbstractEnv env;
  std::set<std::uint32_t> hyps;

  friend bool operator==(const State&, const State&) = default;
};

// Hypotheses assumed on one incoming path only are dropped at joins.
State join_states(const State& a, const State& b) {
  State out;
  out.env = join(a.env, b.env);
  std::set_intersection(a.hyps.begin(), a.hyps.end(), b.hyps.begin(), b.hyps.end(),
                        std::inserter(out.hyps, out.hyps.begin()));
  return out;
}

class Engine {
 public:
  Engine(const TranslationUnit& unit, const EvaOptions& options, const PropertyView& view,
         LogSink log)
      : unit_(unit), options_(options), view_(view), log_(std::move(log)) {}

  AnalysisResult run() {
    const FunctionDef* main_fn = unit_.find_function("main");
    if (!main_fn) return std::move(result_);
    AbstractEnv entry;
    if (main_fn->contract.requires_clause)
      entry = assume_impl(std::move(entry), *main_fn->contract.requires_clause->predicate,
                          true);
    analyze_function(*main_fn, std::move(entry), {}, 0);
    return std::move(result_);
  }

 private:
  void warn(const std::string& message) {
    if (log_) log_(kernel::Severity::warning, message);
  }

  const Cfg& cfg_of(const FunctionDef& fn) {
    auto it = cfgs_.find(fn.name);
    if (it == cfgs_.end()) it = cfgs_.emplace(fn.name, CfgBuilder().build(fn)).first;
    return it->second;
  }

  // Entry bounds from actual arguments; locals and arrays start top.
  static AbstractEnv bind_params(const FunctionDef& fn, const std::vector<Interval>& args) {
    AbstractEnv env;
    for (std::size_t i = 0; i < fn.params.size() && i < args.size(); ++i)
      env.set(fn.params[i].name, args[i]);
    return env;
  }

  Interval analyze_call(const std::string& callee, const std::vector<Interval>& args,
                        const std::set<std::uint32_t>& hyps, int depth) {
    const FunctionDef* fn = unit_.find_function(callee);
    if (!fn) return Interval::top();
    if (depth >= kInlineDepth ||
        std::find(stack_.begin(), stack_.end(), callee) != stack_.end()) {
      warn("call to '" + callee + "' exceeds the inlining depth; assuming full range");
      result_.functions[callee].escaped = true;
      return Interval::top();
    }
    for (const Interval& a : args)
      if (a.is_bottom()) return Interval::bottom();

    std::string key = callee;
    for (const Interval& a : args) key += "|" + a.to_string();
    // Hypotheses also shape the callee's recorded states; keep them in the
    // memo key so a hit is an exact replay.
    for (std::uint32_t h : hyps) key += "#" + std::to_string(h);
    if (auto it = call_cache_.find(key); it != call_cache_.end()) return it->second;

    State exit = analyze_function(*fn, bind_params(*fn, args), hyps, depth);
    Interval value = exit.env.is_bottom() ? Interval::bottom() : exit.env.get(kResultVar);
    call_cache_.emplace(std::move(key), value);
    return value;
  }

  State analyze_function(const FunctionDef& fn, AbstractEnv entry_env,
                         std::set<std::uint32_t> entry_hyps, int depth) {
    const Cfg& cfg = cfg_of(fn);
    stack_.push_back(fn.name);
    std::vector<std::optional<State>> states(cfg.nodes.size());
    std::vector<int> head_joins(cfg.nodes.size(), 0);
    states[cfg.entry] = State{std::move(entry_env), std::move(entry_hyps)};

    std::deque<int> worklist{cfg.entry};
    std::vector<char> queued(cfg.nodes.size(), 0);
    queued[cfg.entry] = 1;
    int visits = 0;

    auto merge_into = [&](int to, State next, bool widen_ok) -> bool {
      if (next.env.is_bottom()) return false;
      if (!states[to]) {
        states[to] = std::move(next);
        return true;
      }
      State joined = join_states(*states[to], next);
      if (widen_ok && cfg.nodes[to].loop_head && ++head_joins[to] > options_.wlevel)
        joined.env = widen(states[to]->env, joined.env);
      if (joined == *states[to]) return false;
      states[to] = std::move(joined);
      return true;
    };

    while (!worklist.empty()) {
      int n = worklist.front();
      worklist.pop_front();
      queued[n] = 0;
      if (++visits > kVisitBudget)
        throw kernel::KernelError(kernel::ErrorCode::internal,
                                  "iteration budget exceeded in '" + fn.name + "'");
      State out = transfer(cfg.nodes[n], *states[n], depth, nullptr);
      for (const Cfg::Edge& edge : cfg.nodes[n].out) {
        State next = out;
        if (edge.guard) next.env = assume_impl(std::move(next.env), *edge.guard, edge.truth);
        if (merge_into(edge.to, std::move(next), true) && !queued[edge.to]) {
          worklist.push_back(edge.to);
          queued[edge.to] = 1;
        }
      }
    }

    if (options_.narrowing) {
      // One descending iteration in node order (construction order is a
      // reverse postorder for this structured language).
      std::vector<std::vector<std::pair<int, const Cfg::Edge*>>> preds(cfg.nodes.size());
      for (int n = 0; n < static_cast<int>(cfg.nodes.size()); ++n)
        for (const Cfg::Edge& e : cfg.nodes[n].out) preds[e.to].push_back({n, &e});
      for (int n = 0; n < static_cast<int>(cfg.nodes.size()); ++n) {
        if (n == cfg.entry || !states[n]) continue;
        std::optional<State> fresh;
        for (auto [p, edge] : preds[n]) {
          if (!states[p]) continue;
          State out = transfer(cfg.nodes[p], *states[p], depth, nullptr);
          if (edge->guard)
            out.env = assume_impl(std::move(out.env), *edge->guard, edge->truth);
          if (out.env.is_bottom()) continue;
          fresh = fresh ? join_states(*fresh, out) : std::move(out);
        }
        if (!fresh) continue;  // all paths died in the descending pass
        if (cfg.nodes[n].loop_head) fresh->env = narrow(states[n]->env, fresh->env);
        states[n] = std::move(*fresh);
      }
    }

    // Fold this instance into the shared per-statement tables and replay
    // call effects under the final states (cache hits make this cheap).
    for (int n = 0; n < static_cast<int>(cfg.nodes.size()); ++n) {
      const Stmt* stmt = cfg.nodes[n].stmt;
      if (!stmt || !states[n]) continue;
      auto it = result_.stmt_env.find(stmt->id);
      if (it == result_.stmt_env.end()) {
        result_.stmt_env.emplace(stmt->id, states[n]->env);
        result_.stmt_hyps.emplace(stmt->id, states[n]->hyps);
      } else {
        it->second = join(it->second, states[n]->env);
        auto& hyps = result_.stmt_hyps[stmt->id];
        std::set<std::uint32_t> kept;
        std::set_intersection(hyps.begin(), hyps.end(), states[n]->hyps.begin(),
                              states[n]->hyps.end(), std::inserter(kept, kept.begin()));
        hyps = std::move(kept);
      }
    }

    State exit_state = states[cfg.exit] ? *states[cfg.exit] : State{AbstractEnv::bottom(), {}};
    FunctionSummary& summary = result_.functions[fn.name];
    summary.analyzed = true;
    summary.exit_env = join(summary.exit_env, exit_state.env);
    if (!summary.exit_hyps) {
      summary.exit_hyps = exit_state.hyps;
    } else {
      std::set<std::uint32_t> kept;
      std::set_intersection(summary.exit_hyps->begin(), summary.exit_hyps->end(),
                            exit_state.hyps.begin(), exit_state.hyps.end(),
                            std::inserter(kept, kept.begin()));
      summary.exit_hyps = std::move(kept);
    }
    stack_.pop_back();
    return exit_state;
  }

  // Applies attached predicates in site order, reducing the environment by
  // each undecided one (assume-asserts) and tracking the assumption.
  State apply_sites(State st, const std::vector<PropertySite>& sites) {
    for (const PropertySite& site : sites) {
      if (st.env.is_bottom()) break;
      Truth t = decide_impl(st.env, *site.predicate);
      if (t == Truth::yes || !options_.assume_asserts) continue;
      AbstractEnv reduced = assume_impl(st.env, *site.predicate, true);
      if (!(reduced == st.env)) {
        st.env = std::move(reduced);
        st.hyps.insert(site.id);
      }
    }
    return st;
  }

  Interval eval(const AbstractEnv& env, const Expr& e,
                const std::set<std::uint32_t>& hyps, int depth) {
    CallEval calls = [&](const Expr& call_expr) -> Interval {
      const auto* call = call_expr.as<Expr::Call>();
      std::vector<Interval> args;
      args.reserve(call->args.size());
      for (const auto& a : call->args) args.push_back(eval(env, *a, hyps, depth));
      Interval value = Interval::bottom();
      if (call->kind == CallKind::indirect) {
        TargetSet targets = env.targets(call->callee);
        int arity = static_cast<int>(call->args.size());
        record_targets(call_expr.id, targets, arity);
        for (const std::string& name : resolve_targets(targets, arity))
          value = join(value, analyze_call(name, args, hyps, depth + 1));
      } else {
        value = analyze_call(call->callee, args, hyps, depth + 1);
      }
      auto [it, inserted] = result_.call_results.emplace(call_expr.id, value);
      if (!inserted) it->second = join(it->second, value);
      return value;
    };
    return eval_with(env, e, calls);
  }

  std::vector<std::string> resolve_targets(const TargetSet& targets, int arity) const {
    std::vector<std::string> out;
    if (targets.is_any()) {
      for (const auto& f : unit_.functions)
        if (static_cast<int>(f.params.size()) == arity) out.push_back(f.name);
      return out;
    }
    for (const std::string& name : targets.names()) {
      const FunctionDef* fn = unit_.find_function(name);
      if (fn && static_cast<int>(fn->params.size()) == arity) out.push_back(name);
    }
    return out;
  }

  void record_targets(NodeId call_node, const TargetSet& targets, int arity) {
    auto [it, inserted] = result_.call_targets.emplace(call_node, std::pair{targets, arity});
    if (!inserted) it->second.first = join(it->second.first, targets);
  }

  // Fnptr value of an expression (assignment right-hand sides).
  static TargetSet eval_targets(const AbstractEnv& env, const Expr& e) {
    if (const auto* n = e.as<Expr::AddrOfFn>()) return TargetSet::of({n->function});
    if (const auto* n = e.as<Expr::Var>()) return env.targets(n->name);
    return TargetSet::any();
  }

  State transfer(const Cfg::Node& node, State in, int depth,
                 const std::vector<PropertySite>* precomputed_sites) {
    if (!node.stmt || in.env.is_bottom()) return in;
    const Stmt& s = *node.stmt;
    State st = apply_sites(std::move(in),
                           precomputed_sites ? *precomputed_sites
                                             : view_.at_statement(s.id));
    if (st.env.is_bottom()) return st;

    if (const auto* n = s.as<Stmt::Assign>()) {
      const auto* target = n->target->as<Expr::Var>();
      if (n->target->type.kind() == Type::Kind::fnptr) {
        st.env.set_targets(target->name, eval_targets(st.env, *n->value));
      } else {
        st.env.set(target->name, eval(st.env, *n->value, st.hyps, depth));
      }
    } else if (const auto* n = s.as<Stmt::ArrayAssign>()) {
      Interval idx = eval(st.env, *n->index, st.hyps, depth);
      Interval value = eval(st.env, *n->value, st.hyps, depth);
      if (idx.is_bottom() || value.is_bottom())
        st.env = AbstractEnv::bottom();
      else
        st.env.store_array(n->array, value);
    } else if (const auto* n = s.as<Stmt::If>()) {
      (void)eval(st.env, *n->cond, st.hyps, depth);  // analyze calls in the condition
    } else if (const auto* n = s.as<Stmt::While>()) {
      (void)eval(st.env, *n->cond, st.hyps, depth);
    } else if (const auto* n = s.as<Stmt::Return>()) {
      st.env.set(kResultVar, eval(st.env, *n->value, st.hyps, depth));
    } else if (const auto* n = s.as<Stmt::ExprStmt>()) {
      Interval v = eval(st.env, *n->call, st.hyps, depth);
      if (v.is_bottom()) st.env = AbstractEnv::bottom();
    }
    return st;
  }

  const TranslationUnit& unit_;
  const EvaOptions& options_;
  const PropertyView& view_;
  LogSink log_;
  AnalysisResult result_;
  std::map<std::string, Cfg> cfgs_;
  std::map<std::string, Interval> call_cache_;
  std::vector<std::string> stack_;
};

}  // namespace

AnalysisResult analyze(const TranslationUnit& unit, const EvaOptions& options,
                       const PropertyView& properties, LogSink log) {
  return Engine(unit, options, properties, std::move(log)).run();
}

AnalysisResult analyze(const TranslationUnit& unit, const EvaOptions& options) {
  SourceAssertView view(unit);
  return Engine(unit, options, view, {}).run();
}

}  // namespace miniverif::eva
