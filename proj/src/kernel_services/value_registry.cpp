#include "miniverif/kernel_services/value_registry.hpp"

namespace miniverif::kernel {

void ValueRegistry::register_value(std::string name, TypeWitness witness, std::any payload,
                                   std::string_view owner) {
  std::string expected_prefix = std::string(owner) + ".";
  if (name.rfind(expected_prefix, 0) != 0 || name.size() == expected_prefix.size())
    throw KernelError(ErrorCode::foreign_prefix,
                      "'" + name + "' is not owned by plugin '" + std::string(owner) + "'");
  auto [it, inserted] = values_.emplace(
      name, RegisteredValue{name, std::move(witness), std::move(payload)});
  if (!inserted)
    throw KernelError(ErrorCode::duplicate_value, "'" + name + "' is already registered");
}

ValueRegistry::Lookup ValueRegistry::get_value(std::string_view name,
                                               const TypeWitness& expected) const {
  auto it = values_.find(name);
  if (it == values_.end()) return Lookup{LookupStatus::not_found, nullptr, nullptr};
  if (!(it->second.witness == expected))
    return Lookup{LookupStatus::type_mismatch, nullptr, &it->second.witness};
  return Lookup{LookupStatus::found, &it->second.payload, &it->second.witness};
}

}  // namespace miniverif::kernel
