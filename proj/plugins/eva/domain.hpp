#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "miniverif/kernel_services/interval.hpp"

namespace miniverif::eva {

/// Possible targets of a function-pointer variable: a finite set of
/// function names, saturating to "any function of matching arity" past
/// four elements.
class TargetSet {
 public:
  static constexpr std::size_t kSaturation = 4;

  static TargetSet any() { return TargetSet(true, {}); }
  static TargetSet of(std::set<std::string> names) {
    if (names.size() > kSaturation) return any();
    return TargetSet(false, std::move(names));
  }

  bool is_any() const { return any_; }
  const std::set<std::string>& names() const { return names_; }  // pre: !is_any

  friend TargetSet join(const TargetSet& a, const TargetSet& b) {
    if (a.any_ || b.any_) return any();
    std::set<std::string> merged = a.names_;
    merged.insert(b.names_.begin(), b.names_.end());
    return of(std::move(merged));
  }

  friend bool operator==(const TargetSet&, const TargetSet&) = default;

 private:
  TargetSet(bool any, std::set<std::string> names) : any_(any), names_(std::move(names)) {}

  bool any_;
  std::set<std::string> names_;
};

/// Per-program-point map from variables to intervals (one summarizing
/// interval per array) and from fnptr variables to target sets. Absent
/// entries are top; a Bottom environment is unreachable.
class AbstractEnv {
 public:
  AbstractEnv() = default;  // everything top, reachable

  static AbstractEnv bottom() {
    AbstractEnv env;
    env.bottom_ = true;
    return env;
  }

  bool is_bottom() const { return bottom_; }

  ai::Interval get(std::string_view var) const;
  /// Binding any variable to Bottom makes the whole environment Bottom.
  void set(const std::string& var, ai::Interval value);

  ai::Interval get_array(std::string_view array) const;
  void set_array(const std::string& array, ai::Interval summary);
  /// Weak update: array stores join into the summary.
  void store_array(const std::string& array, const ai::Interval& value);

  TargetSet targets(std::string_view var) const;
  void set_targets(const std::string& var, TargetSet targets);

  friend AbstractEnv join(const AbstractEnv& a, const AbstractEnv& b);
  friend AbstractEnv widen(const AbstractEnv& older, const AbstractEnv& newer);
  friend AbstractEnv narrow(const AbstractEnv& older, const AbstractEnv& newer);

  friend bool operator==(const AbstractEnv&, const AbstractEnv&) = default;

  std::string to_string() const;

 private:
  bool bottom_ = false;
  std::map<std::string, ai::Interval> scalars_;
  std::map<std::string, ai::Interval> arrays_;
  std::map<std::string, TargetSet> fnptrs_;
};

}  // namespace miniverif::eva
