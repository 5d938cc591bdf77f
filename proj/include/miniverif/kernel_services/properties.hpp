#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "miniverif/kernel_services/ast.hpp"
#include "miniverif/kernel_services/log.hpp"

namespace miniverif::props {

using miniverif::Location;
using miniverif::NodeId;

/// Dense identifier, allocated in registration order.
struct PropertyId {
  std::uint32_t raw = 0;
  auto operator<=>(const PropertyId&) const = default;
};

enum class PropertyKind { assertion, precondition, postcondition };
std::string_view property_kind_name(PropertyKind kind);

/// An analyzer's local verdict on one property.
enum class LocalStatus { True, False, Maybe };
std::string_view local_status_name(LocalStatus s);

/// The kernel's global verdict after consolidation.
enum class ConsolidatedStatus { valid, invalid, unknown, inconsistent };
std::string_view consolidated_status_name(ConsolidatedStatus s);

struct Property {
  PropertyId id;
  PropertyKind kind = PropertyKind::assertion;
  ast::Annotation annotation;
  NodeId attach;
  Location location;
  std::string predicate_text;  // canonical print form, part of the dedup key
  std::string generator;       // empty = source annotation

  std::string origin_text() const {
    return generator.empty() ? "source" : "generated(" + generator + ")";
  }
};

struct EmittedStatus {
  PropertyId property;
  std::string emitter;
  LocalStatus local = LocalStatus::Maybe;
  std::set<PropertyId> hypotheses;
};

/// Kernel service holding every proof obligation, the statuses emitted by
/// analyzers with their hypothesis sets, and the consolidation fixpoint.
class PropertyDb {
 public:
  explicit PropertyDb(kernel::Logger* logger) : logger_(logger) {}

  void bind_unit(const ast::TranslationUnit* unit) { unit_ = unit; }

  /// Idempotent per (attach, kind, predicate print form, generator):
  /// re-registering an identical property returns the existing id.
  PropertyId register_property(ast::Annotation annotation, PropertyKind kind, NodeId attach,
                               std::string generator);

  /// At most one status per (property, emitter); re-emission overwrites and
  /// logs a warning. A property may never be its own hypothesis.
  void emit_status(PropertyId property, std::string emitter, LocalStatus local,
                   std::set<PropertyId> hypotheses);

  /// Least-fixpoint consolidation: a property is justified when some True
  /// emission has all hypotheses justified (cycles never justify); refuted
  /// when some False emission has all hypotheses justified.
  std::vector<ConsolidatedStatus> consolidate() const;

  /// Everything not Valid, sorted by location then id.
  std::vector<PropertyId> remaining() const;

  const std::vector<Property>& all() const { return properties_; }
  const Property& get(PropertyId id) const { return properties_[id.raw]; }
  const std::vector<EmittedStatus>& emissions(PropertyId id) const {
    return emissions_[id.raw];
  }
  std::size_t size() const { return properties_.size(); }

  /// Properties attached at `node` in id order (assertions and
  /// preconditions; postconditions attach to function nodes).
  std::vector<PropertyId> at_node(NodeId node) const;

 private:
  kernel::Logger* logger_;
  const ast::TranslationUnit* unit_ = nullptr;
  std::vector<Property> properties_;
  std::vector<std::vector<EmittedStatus>> emissions_;  // indexed by property id
  std::map<std::string, PropertyId> dedup_;
  std::map<NodeId, std::vector<PropertyId>> by_attach_;
};

}  // namespace miniverif::props
