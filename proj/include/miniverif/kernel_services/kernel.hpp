#pragma once

#include <any>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "miniverif/kernel_internals/option_parser.hpp"
#include "miniverif/kernel_services/ast.hpp"
#include "miniverif/kernel_services/errors.hpp"
#include "miniverif/kernel_services/log.hpp"
#include "miniverif/kernel_services/parameters.hpp"
#include "miniverif/kernel_services/plugin.hpp"
#include "miniverif/kernel_services/properties.hpp"
#include "miniverif/kernel_services/value_registry.hpp"

namespace miniverif::kernel {

/// Lifecycle stages in execution order. Plugins register during Boot;
/// hooks may still be added while Configured; everything later is driven
/// by the kernel alone.
enum class Stage { boot, configured, load, mains, report, at_exit, done };

struct ExitReport {
  int exit_code = 0;
  std::string report;  // rendered per -report-format, for stdout
  std::vector<std::string> executed_mains;
  std::vector<HookPoint> hook_trace;
};

class KernelContext;

/// The framework core. Owns plugin registration, the option table, the
/// staged lifecycle, uniform logging, the property database and the typed
/// plugin database. It knows no concrete plugin: analyzers self-register
/// through descriptors handed over at boot.
class Kernel {
 public:
  explicit Kernel(std::ostream& log_output = std::cerr);

  /// Boot only. Validates the descriptor (name shape, option key prefixes,
  /// collisions) and merges its parameters into the option table.
  std::size_t register_plugin(PluginDescriptor descriptor);

  /// Boot or Configured. Callbacks at one point run in registration order.
  void register_hook(HookPoint point, std::string owner, HookFn fn);

  std::vector<std::string> list_plugins() const;

  /// Once, after all registrations. On success the kernel is Configured
  /// and verbosity reflects -quiet/-verbose.
  Config parse_command_line(const std::vector<std::string>& args);

  std::string help_text(std::string_view binary_name = "miniverif") const;

  /// Load -> Mains -> Report -> AtExit. Returns the rendered report and
  /// the exit code (0 ok, 2 load failure, 3 internal/plugin failure,
  /// 4 unproved remaining under -report-unproved-exit).
  ExitReport run(const Config& config, const std::vector<std::string>& sources);

  Logger& logger() { return logger_; }
  ValueRegistry& registry() { return registry_; }
  props::PropertyDb& properties() { return properties_; }
  const ast::TranslationUnit* unit() const { return unit_.get(); }
  Stage stage() const { return stage_; }

 private:
  friend class KernelContext;

  struct HookRegistration {
    HookPoint point;
    std::string owner;
    HookFn fn;
  };

  const PluginDescriptor* find_plugin(std::string_view name) const;
  void fire_hooks(const HookPoint& point, const Config& config, ExitReport& report);
  void run_stages(const Config& config, const std::vector<std::string>& sources,
                  ExitReport& report);
  void register_source_properties();

  Logger logger_;
  Stage stage_ = Stage::boot;
  std::vector<PluginDescriptor> plugins_;
  std::vector<HookRegistration> hooks_;
  OptionTable options_;
  ValueRegistry registry_;
  props::PropertyDb properties_;
  std::unique_ptr<ast::TranslationUnit> unit_;
};

/// A plugin's window onto kernel services, bound to the plugin's name.
/// Logging is attributed, property emissions carry the plugin as emitter,
/// and registry writes are confined to the plugin's own prefix.
class KernelContext {
 public:
  KernelContext(Kernel& kernel, const Config& config, std::string owner)
      : kernel_(&kernel), config_(&config), owner_(std::move(owner)) {}

  const std::string& owner() const { return owner_; }
  const Config& config() const { return *config_; }

  const ast::TranslationUnit& unit() const {
    if (!kernel_->unit_)
      throw KernelError(ErrorCode::internal, "no translation unit loaded");
    return *kernel_->unit_;
  }

  void log(Severity severity, std::string message,
           std::optional<Location> location = std::nullopt) const {
    kernel_->logger_.log(severity, owner_, message, std::move(location));
  }

  // --- property database ---------------------------------------------
  props::PropertyId register_property(ast::Annotation annotation, props::PropertyKind kind,
                                      NodeId attach) {
    return kernel_->properties_.register_property(std::move(annotation), kind, attach,
                                                  owner_);
  }
  void emit_status(props::PropertyId property, props::LocalStatus local,
                   std::set<props::PropertyId> hypotheses) {
    kernel_->properties_.emit_status(property, owner_, local, std::move(hypotheses));
  }
  const props::PropertyDb& properties() const { return kernel_->properties_; }

  // --- typed plugin database -------------------------------------------
  void register_value(std::string name, TypeWitness witness, std::any payload) {
    kernel_->registry_.register_value(std::move(name), std::move(witness),
                                      std::move(payload), owner_);
  }
  template <typename T>
  void register_value_as(std::string name, T value) {
    kernel_->registry_.register_as(std::move(name), std::move(value), owner_);
  }
  ValueRegistry::Lookup get_value(std::string_view name, const TypeWitness& expected) const {
    return kernel_->registry_.get_value(name, expected);
  }
  template <typename T>
  ValueRegistry::TypedLookup<T> lookup(std::string_view name) const {
    return kernel_->registry_.lookup<T>(name);
  }

  // --- lifecycle ---------------------------------------------------------
  void register_hook(HookPoint point, HookFn fn) {
    kernel_->register_hook(std::move(point), owner_, std::move(fn));
  }
  /// Marks the session failed (exit code 3) without aborting it.
  void force_failure() { kernel_->logger_.force_failure(); }

 private:
  Kernel* kernel_;
  const Config* config_;
  std::string owner_;
};

}  // namespace miniverif::kernel
