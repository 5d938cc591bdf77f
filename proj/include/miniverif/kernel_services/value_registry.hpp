#pragma once

#include <any>
#include <map>
#include <string>
#include <string_view>

#include "miniverif/kernel_services/errors.hpp"
#include "miniverif/kernel_services/type_witness.hpp"

namespace miniverif::kernel {

/// A named, monomorphically-typed value published by a plugin.
struct RegisteredValue {
  std::string name;  // "plugin.item"
  TypeWitness witness;
  std::any payload;
};

enum class LookupStatus { found, not_found, type_mismatch };

/// The plugin database: the only channel through which plugins expose API
/// values (including functions) to each other. Retrieval succeeds exactly
/// when the requested witness structurally equals the stored one.
class ValueRegistry {
 public:
  struct Lookup {
    LookupStatus status = LookupStatus::not_found;
    const std::any* payload = nullptr;
    const TypeWitness* stored = nullptr;  // set on type_mismatch
  };

  /// `owner` must be the name prefix of `name` ("owner.item").
  void register_value(std::string name, TypeWitness witness, std::any payload,
                      std::string_view owner);

  Lookup get_value(std::string_view name, const TypeWitness& expected) const;

  template <typename T>
  void register_as(std::string name, T value, std::string_view owner) {
    register_value(std::move(name), witness_of<T>(), std::any(std::move(value)), owner);
  }

  template <typename T>
  struct TypedLookup {
    LookupStatus status = LookupStatus::not_found;
    const T* value = nullptr;
  };

  template <typename T>
  TypedLookup<T> lookup(std::string_view name) const {
    Lookup raw = get_value(name, witness_of<T>());
    TypedLookup<T> out;
    out.status = raw.status;
    if (raw.status == LookupStatus::found)
      out.value = std::any_cast<T>(raw.payload);
    return out;
  }

  std::size_t size() const { return values_.size(); }

 private:
  std::map<std::string, RegisteredValue, std::less<>> values_;
};

}  // namespace miniverif::kernel
