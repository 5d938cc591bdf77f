#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "miniverif/kernel_services/interval.hpp"
#include "miniverif/kernel_services/location.hpp"

namespace miniverif::kernel {

/// Structural descriptor of a registry value's type. The algebra is closed
/// over a fixed set of base kinds, so every witness is monomorphic and
/// equality stays decidable.
class TypeWitness {
 public:
  enum class Kind { integer, boolean, text, node_id, interval, list, pair, function };

  static TypeWitness integer() { return TypeWitness(Kind::integer); }
  static TypeWitness boolean() { return TypeWitness(Kind::boolean); }
  static TypeWitness text() { return TypeWitness(Kind::text); }
  static TypeWitness node_id() { return TypeWitness(Kind::node_id); }
  static TypeWitness interval() { return TypeWitness(Kind::interval); }
  static TypeWitness list_of(TypeWitness element) {
    TypeWitness w(Kind::list);
    w.children_.push_back(std::move(element));
    return w;
  }
  static TypeWitness pair_of(TypeWitness first, TypeWitness second) {
    TypeWitness w(Kind::pair);
    w.children_.push_back(std::move(first));
    w.children_.push_back(std::move(second));
    return w;
  }
  /// function(params... -> result); the result is stored last.
  static TypeWitness function_of(std::vector<TypeWitness> params, TypeWitness result) {
    TypeWitness w(Kind::function);
    w.children_ = std::move(params);
    w.children_.push_back(std::move(result));
    return w;
  }

  Kind kind() const { return kind_; }
  const TypeWitness& element() const { return children_[0]; }  // list
  const TypeWitness& first() const { return children_[0]; }    // pair
  const TypeWitness& second() const { return children_[1]; }   // pair
  std::size_t parameter_count() const { return children_.size() - 1; }  // function
  const TypeWitness& parameter(std::size_t i) const { return children_[i]; }
  const TypeWitness& result() const { return children_.back(); }  // function

  friend bool operator==(const TypeWitness& a, const TypeWitness& b) {
    return a.kind_ == b.kind_ && a.children_ == b.children_;
  }

  std::string to_string() const;

 private:
  explicit TypeWitness(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<TypeWitness> children_;
};

/// Witness of the C++ type used to move a value through the registry.
/// Exactly one C++ type corresponds to each witness shape:
///   int -> std::int64_t        bool -> bool          text -> std::string
///   node-id -> NodeId          interval -> ai::Interval
///   list-of(w) -> std::vector  pair -> std::pair     function -> std::function
template <typename T>
struct WitnessTraits;

template <>
struct WitnessTraits<std::int64_t> {
  static TypeWitness witness() { return TypeWitness::integer(); }
};
template <>
struct WitnessTraits<bool> {
  static TypeWitness witness() { return TypeWitness::boolean(); }
};
template <>
struct WitnessTraits<std::string> {
  static TypeWitness witness() { return TypeWitness::text(); }
};
template <>
struct WitnessTraits<NodeId> {
  static TypeWitness witness() { return TypeWitness::node_id(); }
};
template <>
struct WitnessTraits<ai::Interval> {
  static TypeWitness witness() { return TypeWitness::interval(); }
};
template <typename E>
struct WitnessTraits<std::vector<E>> {
  static TypeWitness witness() {
    return TypeWitness::list_of(WitnessTraits<E>::witness());
  }
};
template <typename A, typename B>
struct WitnessTraits<std::pair<A, B>> {
  static TypeWitness witness() {
    return TypeWitness::pair_of(WitnessTraits<A>::witness(), WitnessTraits<B>::witness());
  }
};
template <typename R, typename... As>
struct WitnessTraits<std::function<R(As...)>> {
  static TypeWitness witness() {
    return TypeWitness::function_of({WitnessTraits<As>::witness()...},
                                    WitnessTraits<R>::witness());
  }
};

template <typename T>
TypeWitness witness_of() {
  return WitnessTraits<T>::witness();
}

}  // namespace miniverif::kernel
