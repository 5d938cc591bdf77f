#pragma once

#include <string>
#include <vector>

#include "miniverif/kernel_services/parameters.hpp"

namespace miniverif::kernel {

/// Command-line machinery behind Kernel::parse_command_line. Not for
/// plugin use; plugins describe their options through ParameterSpec and
/// read them back from the Config.
class OptionTable {
 public:
  /// Registration-time validation lives in Kernel; the table assumes
  /// specs are well formed and mutually collision-free.
  void add(ParameterSpec spec) { specs_.push_back(std::move(spec)); }
  void add_plugin_name(std::string name) { plugin_names_.push_back(std::move(name)); }

  const std::vector<ParameterSpec>& specs() const { return specs_; }
  const ParameterSpec* find(std::string_view key) const;
  bool has_key_with_prefix(std::string_view prefix) const;
  bool is_plugin(std::string_view name) const;

  /// Throws KernelError(unknown_option | bad_value). Non-dash arguments
  /// are source files; every spec receives its default when absent.
  Config parse(const std::vector<std::string>& args) const;

  /// Kernel options first, then one block per plugin sorted by name.
  std::string help_text(std::string_view binary_name) const;

 private:
  std::vector<ParameterSpec> specs_;
  std::vector<std::string> plugin_names_;  // registration order
};

}  // namespace miniverif::kernel
