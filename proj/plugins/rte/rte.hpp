#pragma once

#include "miniverif/kernel_services/kernel.hpp"

namespace miniverif::rte {

/// Registration entry point, invoked by the driver at Boot.
void register_self(kernel::Kernel& kernel);

/// Signed range of a machine integer of `bits` width (16, 32 or 64).
std::pair<std::int64_t, std::int64_t> machine_range(int bits);

}  // namespace miniverif::rte
