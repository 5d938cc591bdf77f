#include "miniverif/kernel_services/log.hpp"

namespace miniverif::kernel {

std::string_view severity_name(Severity s) {
  switch (s) {
    case Severity::debug: return "debug";
    case Severity::info: return "info";
    case Severity::warning: return "warning";
    case Severity::error: return "error";
    case Severity::fatal: return "fatal";
  }
  return "info";
}

std::string Logger::render(const LogEvent& event) {
  std::string line = "[" + event.source + "] ";
  line += severity_name(event.severity);
  line += ": ";
  if (event.location) {
    line += event.location->to_string();
    line += ": ";
  }
  line += event.message;
  return line;
}

void Logger::log(const LogEvent& event) {
  if (event.severity == Severity::fatal) failed_ = true;
  if (static_cast<int>(event.severity) < static_cast<int>(verbosity_)) return;
  *out_ << render(event) << '\n';
}

void Logger::log(Severity severity, std::string_view source, std::string_view message,
                 std::optional<Location> location) {
  log(LogEvent{severity, std::string(source), std::string(message), std::move(location)});
}

}  // namespace miniverif::kernel
