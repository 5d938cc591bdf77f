#include "miniverif/kernel_internals/option_parser.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "miniverif/kernel_services/errors.hpp"

namespace miniverif::kernel {

const ParameterSpec* OptionTable::find(std::string_view key) const {
  for (const auto& s : specs_)
    if (s.key == key) return &s;
  return nullptr;
}

bool OptionTable::has_key_with_prefix(std::string_view prefix) const {
  for (const auto& s : specs_)
    if (s.key.rfind(prefix, 0) == 0) return true;
  return false;
}

bool OptionTable::is_plugin(std::string_view name) const {
  return std::find(plugin_names_.begin(), plugin_names_.end(), name) != plugin_names_.end();
}

Config OptionTable::parse(const std::vector<std::string>& args) const {
  Config config;
  for (const auto& spec : specs_) config.set(spec.key, spec.default_value);

  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& arg = args[i];
    if (arg.empty() || arg[0] != '-') {
      config.add_source(arg);
      continue;
    }
    const ParameterSpec* spec = find(arg);
    if (!spec)
      throw KernelError(ErrorCode::unknown_option, "unknown option '" + arg + "'");
    if (spec->kind == ParamKind::flag) {
      config.set(spec->key, true);
      if (!spec->scope_plugin.empty() && arg == "-" + spec->scope_plugin)
        config.enable_plugin(spec->scope_plugin);
      continue;
    }
    if (i + 1 >= args.size())
      throw KernelError(ErrorCode::bad_value, "option '" + arg + "' expects a value");
    const std::string& value = args[++i];
    switch (spec->kind) {
      case ParamKind::integer: {
        std::int64_t parsed = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
        if (ec != std::errc() || ptr != value.data() + value.size())
          throw KernelError(ErrorCode::bad_value,
                            "option '" + arg + "' expects an integer, got '" + value + "'");
        config.set(spec->key, parsed);
        break;
      }
      case ParamKind::choice: {
        if (std::find(spec->choices.begin(), spec->choices.end(), value) ==
            spec->choices.end()) {
          std::string allowed;
          for (const auto& c : spec->choices) {
            if (!allowed.empty()) allowed += "|";
            allowed += c;
          }
          throw KernelError(ErrorCode::bad_value, "option '" + arg + "' expects one of {" +
                                                      allowed + "}, got '" + value + "'");
        }
        config.set(spec->key, value);
        break;
      }
      default:
        config.set(spec->key, value);
        break;
    }
  }
  return config;
}

namespace {

std::string spell_usage(const ParameterSpec& spec) {
  switch (spec.kind) {
    case ParamKind::flag:
      return spec.key;
    case ParamKind::integer:
      return spec.key + " <n>";
    case ParamKind::text:
      return spec.key + " <value>";
    case ParamKind::choice: {
      std::string out = spec.key + " {";
      for (std::size_t i = 0; i < spec.choices.size(); ++i) {
        if (i) out += "|";
        out += spec.choices[i];
      }
      return out + "}";
    }
  }
  return spec.key;
}

std::string spell_default(const ParameterSpec& spec) {
  if (spec.kind == ParamKind::flag) return "";
  if (const auto* n = std::get_if<std::int64_t>(&spec.default_value))
    return " (default: " + std::to_string(*n) + ")";
  if (const auto* s = std::get_if<std::string>(&spec.default_value))
    return " (default: " + *s + ")";
  return "";
}

void print_spec(std::ostream& out, const ParameterSpec& spec) {
  std::string usage = spell_usage(spec);
  out << "  " << usage;
  for (std::size_t pad = usage.size(); pad < 34; ++pad) out << ' ';
  out << ' ' << spec.help << spell_default(spec) << "\n";
}

}  // namespace

std::string OptionTable::help_text(std::string_view binary_name) const {
  std::ostringstream out;
  out << "Usage: " << binary_name << " [options] <files...>\n\n";
  out << "Kernel options:\n";
  for (const auto& spec : specs_)
    if (spec.scope_plugin.empty()) print_spec(out, spec);
  std::vector<std::string> names = plugin_names_;
  std::sort(names.begin(), names.end());
  for (const auto& name : names) {
    out << "\nPlugin '" << name << "':\n";
    for (const auto& spec : specs_)
      if (spec.scope_plugin == name) print_spec(out, spec);
  }
  return out.str();
}

}  // namespace miniverif::kernel
