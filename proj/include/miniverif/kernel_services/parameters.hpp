#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace miniverif::kernel {

enum class ParamKind { flag, integer, text, choice };

using ParamValue = std::variant<bool, std::int64_t, std::string>;

/// One command-line option. Plugin-scoped keys are spelled `-<plugin>-*`;
/// the single enabling flag `-<plugin>` is added by the kernel itself.
struct ParameterSpec {
  std::string key;  // full spelling, e.g. "-eva-wlevel"
  ParamKind kind = ParamKind::flag;
  ParamValue default_value = false;
  std::vector<std::string> choices;  // choice kind only
  std::string scope_plugin;          // empty = kernel scope
  std::string help;

  static ParameterSpec flag(std::string key, std::string help) {
    return ParameterSpec{std::move(key), ParamKind::flag, false, {}, {}, std::move(help)};
  }
  static ParameterSpec integer(std::string key, std::int64_t def, std::string help) {
    return ParameterSpec{std::move(key), ParamKind::integer, def, {}, {}, std::move(help)};
  }
  static ParameterSpec text(std::string key, std::string def, std::string help) {
    return ParameterSpec{std::move(key),   ParamKind::text, std::move(def),
                         {},               {},              std::move(help)};
  }
  static ParameterSpec choice(std::string key, std::vector<std::string> values,
                              std::string def, std::string help) {
    return ParameterSpec{std::move(key),     ParamKind::choice, std::move(def),
                         std::move(values),  {},                std::move(help)};
  }
  /// `{on,off}` choices are common enough to deserve a shorthand.
  static ParameterSpec on_off(std::string key, bool def, std::string help) {
    return choice(std::move(key), {"on", "off"}, def ? "on" : "off", std::move(help));
  }
};

/// The total option valuation after command-line parsing: every registered
/// parameter has exactly one value, plus the enabled-plugin order and the
/// positional source files.
class Config {
 public:
  bool flag(std::string_view key) const;
  std::int64_t integer(std::string_view key) const;
  const std::string& text(std::string_view key) const;
  bool on(std::string_view key) const { return text(key) == "on"; }
  bool has(std::string_view key) const { return values_.count(key) != 0; }

  const std::vector<std::string>& enabled_plugins() const { return enabled_plugins_; }
  const std::vector<std::string>& sources() const { return sources_; }
  bool help_requested() const { return flag("-help"); }

  std::size_t value_count() const { return values_.size(); }

  // Filled by the option parser.
  void set(std::string key, ParamValue value) { values_[std::move(key)] = std::move(value); }
  void enable_plugin(const std::string& name);
  void add_source(std::string path) { sources_.push_back(std::move(path)); }

 private:
  std::map<std::string, ParamValue, std::less<>> values_;
  std::vector<std::string> enabled_plugins_;  // flag order, first occurrence
  std::vector<std::string> sources_;
};

}  // namespace miniverif::kernel
