#include "miniverif/kernel_services/kernel.hpp"

#include <cctype>

#include "miniverif/kernel_internals/frontend.hpp"
#include "miniverif/kernel_services/ast_visitor.hpp"
#include "miniverif/kernel_services/report.hpp"

namespace miniverif::kernel {

namespace {

bool valid_plugin_name(const std::string& name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::islower(static_cast<unsigned char>(c)) &&
        !std::isdigit(static_cast<unsigned char>(c)) && c != '_')
      return false;
  return true;
}

}  // namespace

std::string HookPoint::to_string() const {
  switch (kind) {
    case Kind::after_load: return "AfterLoad";
    case Kind::before_mains: return "BeforeMains";
    case Kind::after_plugin_main: return "AfterPluginMain(" + plugin + ")";
    case Kind::at_exit: return "AtExit";
  }
  return "?";
}

Kernel::Kernel(std::ostream& log_output) : logger_(log_output), properties_(&logger_) {
  options_.add(ParameterSpec::choice("-machdep", {"16", "32", "64"}, "32",
                                     "width in bits of machine integers assumed by "
                                     "analyzers"));
  options_.add(ParameterSpec::flag("-quiet", "only show warnings and errors"));
  options_.add(ParameterSpec::flag("-verbose", "also show debug messages"));
  options_.add(ParameterSpec::choice("-report-format", {"text", "json"}, "text",
                                     "report rendering"));
  options_.add(ParameterSpec::flag("-report-unproved-exit",
                                   "exit with code 4 when unproved properties remain"));
  options_.add(ParameterSpec::flag("-help", "show this help"));
}

const PluginDescriptor* Kernel::find_plugin(std::string_view name) const {
  for (const auto& p : plugins_)
    if (p.name == name) return &p;
  return nullptr;
}

std::size_t Kernel::register_plugin(PluginDescriptor descriptor) {
  if (stage_ != Stage::boot)
    throw KernelError(ErrorCode::stage_violation,
                      "plugins can only be registered during Boot");
  if (!valid_plugin_name(descriptor.name))
    throw KernelError(ErrorCode::invalid_name,
                      "'" + descriptor.name + "' is not a valid plugin name");
  if (find_plugin(descriptor.name))
    throw KernelError(ErrorCode::duplicate_plugin,
                      "plugin '" + descriptor.name + "' is already registered");
  if (!descriptor.main)
    throw KernelError(ErrorCode::invalid_name,
                      "plugin '" + descriptor.name + "' has no main callback");

  const std::string enable_key = "-" + descriptor.name;
  const std::string scoped_prefix = enable_key + "-";
  if (options_.find(enable_key) || options_.has_key_with_prefix(scoped_prefix))
    throw KernelError(ErrorCode::invalid_name,
                      "plugin '" + descriptor.name +
                          "' collides with an existing option spelling");

  // Validate the whole descriptor before touching the option table.
  std::vector<std::string> new_keys{enable_key};
  for (const auto& p : descriptor.parameters) {
    if (p.key.rfind(scoped_prefix, 0) != 0 || p.key.size() <= scoped_prefix.size())
      throw KernelError(ErrorCode::invalid_name,
                        "option '" + p.key + "' of plugin '" + descriptor.name +
                            "' must be spelled '" + scoped_prefix + "...'");
    if (options_.find(p.key))
      throw KernelError(ErrorCode::invalid_name,
                        "option '" + p.key + "' collides with an existing option");
    for (const auto& k : new_keys)
      if (k == p.key)
        throw KernelError(ErrorCode::invalid_name, "option '" + p.key + "' listed twice");
    if (p.kind == ParamKind::choice) {
      const auto* def = std::get_if<std::string>(&p.default_value);
      bool ok = def != nullptr;
      if (ok) {
        ok = false;
        for (const auto& c : p.choices) ok = ok || c == *def;
      }
      if (!ok)
        throw KernelError(ErrorCode::invalid_name,
                          "option '" + p.key + "' has a default outside its choices");
    }
    new_keys.push_back(p.key);
  }

  ParameterSpec enable = ParameterSpec::flag(enable_key, "enable '" + descriptor.name + "'");
  enable.scope_plugin = descriptor.name;
  options_.add(std::move(enable));
  for (auto p : descriptor.parameters) {
    p.scope_plugin = descriptor.name;
    options_.add(std::move(p));
  }
  options_.add_plugin_name(descriptor.name);
  for (auto& [point, fn] : descriptor.hooks)
    hooks_.push_back(HookRegistration{point, descriptor.name, fn});

  plugins_.push_back(std::move(descriptor));
  return plugins_.size() - 1;
}

void Kernel::register_hook(HookPoint point, std::string owner, HookFn fn) {
  if (stage_ != Stage::boot && stage_ != Stage::configured)
    throw KernelError(ErrorCode::stage_violation,
                      "hooks can only be registered during Boot or Configure");
  hooks_.push_back(HookRegistration{std::move(point), std::move(owner), std::move(fn)});
}

std::vector<std::string> Kernel::list_plugins() const {
  std::vector<std::string> out;
  out.reserve(plugins_.size());
  for (const auto& p : plugins_) out.push_back(p.name);
  return out;
}

Config Kernel::parse_command_line(const std::vector<std::string>& args) {
  if (stage_ != Stage::boot)
    throw KernelError(ErrorCode::stage_violation, "command line already parsed");
  Config config = options_.parse(args);
  if (config.flag("-verbose"))
    logger_.set_verbosity(Severity::debug);
  else if (config.flag("-quiet"))
    logger_.set_verbosity(Severity::warning);
  stage_ = Stage::configured;
  return config;
}

std::string Kernel::help_text(std::string_view binary_name) const {
  return options_.help_text(binary_name);
}

void Kernel::fire_hooks(const HookPoint& point, const Config& config, ExitReport& report) {
  report.hook_trace.push_back(point);
  for (const auto& hook : hooks_) {
    if (!(hook.point == point)) continue;
    KernelContext ctx(*this, config, hook.owner);
    try {
      hook.fn(ctx);
    } catch (const std::exception& e) {
      logger_.log(Severity::error, hook.owner,
                  "hook at " + point.to_string() + " failed: " + e.what());
    } catch (...) {
      logger_.log(Severity::error, hook.owner, "hook at " + point.to_string() + " failed");
    }
  }
}

void Kernel::register_source_properties() {
  const ast::TranslationUnit& unit = *unit_;
  ast::Visitor visitor;
  visitor.on_annotation = [&](const ast::Annotation& ann) {
    if (ann.kind == ast::AnnotationKind::assertion) {
      properties_.register_property(ast::clone(ann), props::PropertyKind::assertion,
                                    ann.attach, "");
    } else if (ann.kind == ast::AnnotationKind::ensures_clause) {
      properties_.register_property(ast::clone(ann), props::PropertyKind::postcondition,
                                    ann.attach, "");
    }
    // requires clauses become per-call-site preconditions below
  };
  visitor.on_expr = [&](const ast::Expr& e) {
    const auto* call = e.as<ast::Expr::Call>();
    if (!call || call->kind != ast::CallKind::direct) return;
    const ast::FunctionDef* callee = unit.find_function(call->callee);
    if (!callee || !callee->contract.requires_clause) return;
    std::map<std::string, const ast::Expr*> args;
    for (std::size_t i = 0; i < callee->params.size() && i < call->args.size(); ++i)
      args[callee->params[i].name] = call->args[i].get();
    ast::Annotation instance;
    instance.kind = ast::AnnotationKind::requires_clause;
    instance.predicate =
        ast::substitute_vars(*callee->contract.requires_clause->predicate, args);
    instance.attach = e.id;
    instance.function = callee->name;
    instance.loc = unit.location_of(e.id);
    properties_.register_property(std::move(instance), props::PropertyKind::precondition,
                                  e.id, "");
  };
  ast::visit(unit, visitor);
}

void Kernel::run_stages(const Config& config, const std::vector<std::string>& sources,
                        ExitReport& report) {
  stage_ = Stage::load;
  logger_.log(Severity::debug, "kernel", "stage Load");
  frontend::LoadResult loaded = frontend::load_files(sources);
  if (!loaded.ok()) {
    for (const auto& d : loaded.diagnostics)
      logger_.log(Severity::error, "kernel",
                  std::string(frontend::diag_code_name(d.code)) + ": " + d.message, d.loc);
    stage_ = Stage::at_exit;
    fire_hooks(HookPoint::at_exit(), config, report);
    stage_ = Stage::done;
    report.exit_code = logger_.failed() ? 3 : 2;
    return;
  }
  unit_ = std::move(loaded.unit);
  properties_.bind_unit(unit_.get());
  register_source_properties();
  fire_hooks(HookPoint::after_load(), config, report);

  stage_ = Stage::mains;
  logger_.log(Severity::debug, "kernel", "stage Mains");
  fire_hooks(HookPoint::before_mains(), config, report);
  for (const std::string& name : config.enabled_plugins()) {
    const PluginDescriptor* plugin = find_plugin(name);
    if (!plugin) continue;  // unreachable: enabling flags come from the table
    logger_.log(Severity::debug, "kernel", "running main of '" + name + "'");
    KernelContext ctx(*this, config, name);
    try {
      plugin->main(ctx);
    } catch (const std::exception& e) {
      logger_.log(Severity::fatal, name, std::string("plugin main panicked: ") + e.what());
    } catch (...) {
      logger_.log(Severity::fatal, name, "plugin main panicked");
    }
    report.executed_mains.push_back(name);
    fire_hooks(HookPoint::after_plugin_main(name), config, report);
  }

  stage_ = Stage::report;
  logger_.log(Severity::debug, "kernel", "stage Report");
  std::vector<props::ConsolidatedStatus> statuses = properties_.consolidate();
  for (const auto& p : properties_.all()) {
    if (statuses[p.id.raw] == props::ConsolidatedStatus::inconsistent) {
      logger_.log(Severity::error, "kernel",
                  "conflicting verdicts on property #" + std::to_string(p.id.raw) + " (" +
                      p.predicate_text + ")",
                  p.location);
      logger_.force_failure();
    }
  }
  report.report = config.text("-report-format") == "json"
                      ? props::render_json(properties_, statuses)
                      : props::render_text(properties_, statuses);
  props::Summary summary = props::summarize(statuses);
  int unproved = summary.total - summary.valid;

  stage_ = Stage::at_exit;
  fire_hooks(HookPoint::at_exit(), config, report);
  stage_ = Stage::done;

  if (logger_.failed())
    report.exit_code = 3;
  else if (config.flag("-report-unproved-exit") && unproved > 0)
    report.exit_code = 4;
  else
    report.exit_code = 0;
}

ExitReport Kernel::run(const Config& config, const std::vector<std::string>& sources) {
  if (stage_ != Stage::configured)
    throw KernelError(ErrorCode::stage_violation, "run() requires a parsed configuration");
  ExitReport report;
  try {
    run_stages(config, sources, report);
  } catch (const std::exception& e) {
    logger_.log(Severity::fatal, "kernel", std::string("internal failure: ") + e.what());
    report.exit_code = 3;
  }
  return report;
}

}  // namespace miniverif::kernel
