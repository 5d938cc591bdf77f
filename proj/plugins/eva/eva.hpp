#pragma once

#include "analyzer.hpp"
#include "miniverif/kernel_services/kernel.hpp"

namespace miniverif::eva {

/// Registration entry point, invoked by the driver at Boot.
void register_self(kernel::Kernel& kernel);

}  // namespace miniverif::eva
