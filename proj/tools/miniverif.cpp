// miniverif driver: registers the bundled plugins, hands the command line
// to the kernel, prints the consolidated report on stdout. Contains no
// analysis logic; the plugin lineup is generated by the build so any
// subset links and runs unchanged.

#include <iostream>

#include "miniverif/kernel_services/kernel.hpp"

namespace miniverif {
// Generated per build configuration (see tools/lineup.cpp.in).
void register_bundled_plugins(kernel::Kernel& kernel);
}  // namespace miniverif

int main(int argc, char** argv) {
  using namespace miniverif;

  kernel::Kernel kernel(std::cerr);
  register_bundled_plugins(kernel);

  kernel::Config config;
  try {
    config = kernel.parse_command_line(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const kernel::KernelError& e) {
    kernel.logger().log(kernel::Severity::error, "kernel", e.what());
    return 1;
  }

  if (config.help_requested()) {
    std::cout << kernel.help_text(argv[0] && argv[0][0] ? argv[0] : "miniverif");
    return 0;
  }
  if (config.sources().empty()) {
    kernel.logger().log(kernel::Severity::error, "kernel",
                        "no input files (use -help for usage)");
    return 1;
  }

  kernel::ExitReport report = kernel.run(config, config.sources());
  std::cout << report.report;
  return report.exit_code;
}
