#include "domain.hpp"

#include <sstream>

namespace miniverif::eva {

using ai::Interval;

Interval AbstractEnv::get(std::string_view var) const {
  if (bottom_) return Interval::bottom();
  auto it = scalars_.find(std::string(var));
  return it == scalars_.end() ? Interval::top() : it->second;
}

void AbstractEnv::set(const std::string& var, Interval value) {
  if (bottom_) return;
  if (value.is_bottom()) {
    *this = bottom();
    return;
  }
  if (value.is_top())
    scalars_.erase(var);
  else
    scalars_[var] = value;
}

Interval AbstractEnv::get_array(std::string_view array) const {
  if (bottom_) return Interval::bottom();
  auto it = arrays_.find(std::string(array));
  return it == arrays_.end() ? Interval::top() : it->second;
}

void AbstractEnv::set_array(const std::string& array, Interval summary) {
  if (bottom_) return;
  if (summary.is_bottom()) {
    *this = bottom();
    return;
  }
  if (summary.is_top())
    arrays_.erase(array);
  else
    arrays_[array] = summary;
}

void AbstractEnv::store_array(const std::string& array, const Interval& value) {
  set_array(array, ai::join(get_array(array), value));
}

TargetSet AbstractEnv::targets(std::string_view var) const {
  auto it = fnptrs_.find(std::string(var));
  return it == fnptrs_.end() ? TargetSet::any() : it->second;
}

void AbstractEnv::set_targets(const std::string& var, TargetSet targets) {
  if (bottom_) return;
  if (targets.is_any())
    fnptrs_.erase(var);
  else
    fnptrs_.insert_or_assign(var, std::move(targets));
}

namespace {

template <typename V, typename Join>
std::map<std::string, V> merge_pointwise(const std::map<std::string, V>& a,
                                         const std::map<std::string, V>& b, Join merge,
                                         const V& top) {
  // Keys missing on one side are top there; top results are dropped.
  std::map<std::string, V> out;
  for (const auto& [key, va] : a) {
    auto it = b.find(key);
    if (it == b.end()) continue;
    V merged = merge(va, it->second);
    if (!(merged == top)) out.emplace(key, std::move(merged));
  }
  return out;
}

}  // namespace

AbstractEnv join(const AbstractEnv& a, const AbstractEnv& b) {
  if (a.bottom_) return b;
  if (b.bottom_) return a;
  AbstractEnv out;
  out.scalars_ = merge_pointwise(
      a.scalars_, b.scalars_, [](const Interval& x, const Interval& y) { return join(x, y); },
      Interval::top());
  out.arrays_ = merge_pointwise(
      a.arrays_, b.arrays_, [](const Interval& x, const Interval& y) { return join(x, y); },
      Interval::top());
  out.fnptrs_ = merge_pointwise(
      a.fnptrs_, b.fnptrs_,
      [](const TargetSet& x, const TargetSet& y) { return join(x, y); }, TargetSet::any());
  return out;
}

AbstractEnv widen(const AbstractEnv& older, const AbstractEnv& newer) {
  if (older.bottom_) return newer;
  if (newer.bottom_) return older;
  AbstractEnv out;
  out.scalars_ = merge_pointwise(
      older.scalars_, newer.scalars_,
      [](const Interval& x, const Interval& y) { return widen(x, y); }, Interval::top());
  out.arrays_ = merge_pointwise(
      older.arrays_, newer.arrays_,
      [](const Interval& x, const Interval& y) { return widen(x, y); }, Interval::top());
  out.fnptrs_ = merge_pointwise(
      older.fnptrs_, newer.fnptrs_,
      [](const TargetSet& x, const TargetSet& y) { return join(x, y); }, TargetSet::any());
  return out;
}

AbstractEnv narrow(const AbstractEnv& older, const AbstractEnv& newer) {
  if (older.bottom_ || newer.bottom_) return AbstractEnv::bottom();
  AbstractEnv out;
  // Narrowing refines entries of `older`; keys only in `newer` were top
  // before and tighten to the new value.
  out.scalars_ = newer.scalars_;
  for (const auto& [key, old_value] : older.scalars_) {
    auto it = newer.scalars_.find(key);
    Interval refined =
        it == newer.scalars_.end() ? old_value : narrow(old_value, it->second);
    if (refined.is_bottom()) return AbstractEnv::bottom();
    if (refined.is_top())
      out.scalars_.erase(key);
    else
      out.scalars_[key] = refined;
  }
  out.arrays_ = newer.arrays_;
  for (const auto& [key, old_value] : older.arrays_) {
    auto it = newer.arrays_.find(key);
    Interval refined =
        it == newer.arrays_.end() ? old_value : narrow(old_value, it->second);
    if (refined.is_bottom()) return AbstractEnv::bottom();
    if (refined.is_top())
      out.arrays_.erase(key);
    else
      out.arrays_[key] = refined;
  }
  out.fnptrs_ = newer.fnptrs_;
  return out;
}

std::string AbstractEnv::to_string() const {
  if (bottom_) return "{bottom}";
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [key, value] : scalars_) {
    if (!first) out << ", ";
    first = false;
    out << key << ":" << value.to_string();
  }
  for (const auto& [key, value] : arrays_) {
    if (!first) out << ", ";
    first = false;
    out << key << "[]:" << value.to_string();
  }
  for (const auto& [key, value] : fnptrs_) {
    if (!first) out << ", ";
    first = false;
    out << key << ":{";
    bool f2 = true;
    for (const auto& n : value.names()) {
      if (!f2) out << ",";
      f2 = false;
      out << n;
    }
    out << "}";
  }
  out << "}";
  return out.str();
}

}  // namespace miniverif::eva
