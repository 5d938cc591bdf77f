#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "miniverif/kernel_services/parameters.hpp"

namespace miniverif::kernel {

class KernelContext;

/// A fixed lifecycle moment a plugin can hook into.
struct HookPoint {
  enum class Kind { after_load, before_mains, after_plugin_main, at_exit };

  Kind kind = Kind::after_load;
  std::string plugin;  // after_plugin_main only

  static HookPoint after_load() { return {Kind::after_load, {}}; }
  static HookPoint before_mains() { return {Kind::before_mains, {}}; }
  static HookPoint after_plugin_main(std::string name) {
    return {Kind::after_plugin_main, std::move(name)};
  }
  static HookPoint at_exit() { return {Kind::at_exit, {}}; }

  friend bool operator==(const HookPoint&, const HookPoint&) = default;

  std::string to_string() const;
};

using PluginMain = std::function<void(KernelContext&)>;
using HookFn = std::function<void(KernelContext&)>;

/// Everything the kernel needs to know about an analyzer. Plugins hand one
/// of these to the kernel at boot; the kernel source itself never names a
/// concrete plugin.
struct PluginDescriptor {
  std::string name;  // [a-z][a-z0-9_]*, unique
  std::string version;
  std::string help;
  std::vector<ParameterSpec> parameters;  // each key spelled "-<name>-..."
  PluginMain main;
  std::vector<std::pair<HookPoint, HookFn>> hooks;
};

}  // namespace miniverif::kernel
