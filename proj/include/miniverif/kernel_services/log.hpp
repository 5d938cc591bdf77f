#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "miniverif/kernel_services/location.hpp"

namespace miniverif::kernel {

enum class Severity { debug = 0, info, warning, error, fatal };

std::string_view severity_name(Severity s);

/// One message routed through the kernel. Plugins never print directly;
/// everything funnels through here so kernel and plugin output look alike.
struct LogEvent {
  Severity severity = Severity::info;
  std::string source = "kernel";  // plugin name or "kernel"
  std::string message;
  std::optional<Location> location;
};

/// Renders events as `[source] severity: message` (with an optional
/// `file:line:col:` prefix on the message) when severity passes the
/// configured verbosity. A fatal event latches the failure state that
/// drives exit code 3.
class Logger {
 public:
  explicit Logger(std::ostream& out) : out_(&out) {}

  void set_verbosity(Severity v) { verbosity_ = v; }
  Severity verbosity() const { return verbosity_; }

  void log(const LogEvent& event);
  void log(Severity severity, std::string_view source, std::string_view message,
           std::optional<Location> location = std::nullopt);

  bool failed() const { return failed_; }
  void force_failure() { failed_ = true; }

  static std::string render(const LogEvent& event);

 private:
  std::ostream* out_;
  Severity verbosity_ = Severity::info;
  bool failed_ = false;
};

}  // namespace miniverif::kernel
