#include "miniverif/kernel_services/properties.hpp"

#include <algorithm>
#include <deque>

#include "miniverif/kernel_services/ast_printer.hpp"
#include "miniverif/kernel_services/errors.hpp"

namespace miniverif::props {

using kernel::ErrorCode;
using kernel::KernelError;

std::string_view property_kind_name(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::assertion: return "assertion";
    case PropertyKind::precondition: return "precondition";
    case PropertyKind::postcondition: return "postcondition";
  }
  return "assertion";
}

std::string_view local_status_name(LocalStatus s) {
  switch (s) {
    case LocalStatus::True: return "True";
    case LocalStatus::False: return "False";
    case LocalStatus::Maybe: return "Maybe";
  }
  return "Maybe";
}

std::string_view consolidated_status_name(ConsolidatedStatus s) {
  switch (s) {
    case ConsolidatedStatus::valid: return "Valid";
    case ConsolidatedStatus::invalid: return "Invalid";
    case ConsolidatedStatus::unknown: return "Unknown";
    case ConsolidatedStatus::inconsistent: return "Inconsistent";
  }
  return "Unknown";
}

PropertyId PropertyDb::register_property(ast::Annotation annotation, PropertyKind kind,
                                         NodeId attach, std::string generator) {
  if (!unit_ || !unit_->has_node(attach))
    throw KernelError(ErrorCode::bad_attach_point,
                      "no AST node #" + std::to_string(attach.raw));
  std::string predicate_text = ast::to_string(*annotation.predicate);
  std::string key = std::to_string(attach.raw) + "|" +
                    std::string(property_kind_name(kind)) + "|" + predicate_text + "|" +
                    generator;
  if (auto it = dedup_.find(key); it != dedup_.end()) return it->second;

  Property p;
  p.id = PropertyId{static_cast<std::uint32_t>(properties_.size())};
  p.kind = kind;
  p.attach = attach;
  // Source annotations keep their own position; generated ones inherit the
  // attach node's.
  p.location = annotation.from_source() && !annotation.loc.file.empty()
                   ? annotation.loc
                   : unit_->location_of(attach);
  p.predicate_text = std::move(predicate_text);
  p.generator = std::move(generator);
  p.annotation = std::move(annotation);
  p.annotation.generator = p.generator;

  dedup_.emplace(std::move(key), p.id);
  by_attach_[attach].push_back(p.id);
  properties_.push_back(std::move(p));
  emissions_.emplace_back();
  return properties_.back().id;
}

void PropertyDb::emit_status(PropertyId property, std::string emitter, LocalStatus local,
                             std::set<PropertyId> hypotheses) {
  if (property.raw >= properties_.size())
    throw KernelError(ErrorCode::unknown_property,
                      "property #" + std::to_string(property.raw) + " is not registered");
  for (PropertyId h : hypotheses) {
    if (h.raw >= properties_.size())
      throw KernelError(ErrorCode::unknown_property,
                        "hypothesis #" + std::to_string(h.raw) + " is not registered");
    if (h == property)
      throw KernelError(ErrorCode::self_hypothesis,
                        "property #" + std::to_string(property.raw) +
                            " cannot justify itself");
  }
  auto& list = emissions_[property.raw];
  for (auto& e : list) {
    if (e.emitter == emitter) {
      if (logger_)
        logger_->log(kernel::Severity::warning, "kernel",
                     "'" + emitter + "' re-emitted a status on property #" +
                         std::to_string(property.raw) + "; overwriting");
      e.local = local;
      e.hypotheses = std::move(hypotheses);
      return;
    }
  }
  list.push_back(EmittedStatus{property, std::move(emitter), local, std::move(hypotheses)});
}

std::vector<ConsolidatedStatus> PropertyDb::consolidate() const {
  const std::size_t n = properties_.size();
  std::vector<char> justified(n, 0);

  // Worklist over True emissions: an emission fires once all its
  // hypotheses are justified; firing justifies its target, which may
  // unblock emissions depending on it. Starting from hypothesis-free
  // emissions computes the least fixpoint, so cyclic support never fires.
  struct PendingEmission {
    PropertyId target;
    std::size_t unmet;
  };
  std::vector<PendingEmission> pending;
  std::map<PropertyId, std::vector<std::size_t>> dependents;  // hypothesis -> emissions
  std::deque<PropertyId> queue;

  for (std::size_t p = 0; p < n; ++p) {
    for (const auto& e : emissions_[p]) {
      if (e.local != LocalStatus::True) continue;
      std::size_t index = pending.size();
      pending.push_back(PendingEmission{e.property, e.hypotheses.size()});
      if (e.hypotheses.empty()) {
        if (!justified[p]) {
          justified[p] = 1;
          queue.push_back(e.property);
        }
      } else {
        for (PropertyId h : e.hypotheses) dependents[h].push_back(index);
      }
    }
  }
  while (!queue.empty()) {
    PropertyId ready = queue.front();
    queue.pop_front();
    auto it = dependents.find(ready);
    if (it == dependents.end()) continue;
    for (std::size_t index : it->second) {
      auto& em = pending[index];
      if (--em.unmet == 0 && !justified[em.target.raw]) {
        justified[em.target.raw] = 1;
        queue.push_back(em.target);
      }
    }
  }

  // Refutation needs only the justified set: a False emission counts when
  // every hypothesis it relies on is justified.
  std::vector<char> refuted(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    for (const auto& e : emissions_[p]) {
      if (e.local != LocalStatus::False) continue;
      bool ok = true;
      for (PropertyId h : e.hypotheses)
        if (!justified[h.raw]) {
          ok = false;
          break;
        }
      if (ok) refuted[p] = 1;
    }
  }

  std::vector<ConsolidatedStatus> out(n, ConsolidatedStatus::unknown);
  for (std::size_t p = 0; p < n; ++p) {
    if (justified[p] && refuted[p]) {
      out[p] = ConsolidatedStatus::inconsistent;
    } else if (justified[p]) {
      out[p] = ConsolidatedStatus::valid;
    } else if (refuted[p]) {
      out[p] = ConsolidatedStatus::invalid;
    }
  }
  return out;
}

std::vector<PropertyId> PropertyDb::remaining() const {
  std::vector<ConsolidatedStatus> statuses = consolidate();
  std::vector<PropertyId> out;
  for (const auto& p : properties_)
    if (statuses[p.id.raw] != ConsolidatedStatus::valid) out.push_back(p.id);
  std::sort(out.begin(), out.end(), [&](PropertyId a, PropertyId b) {
    const auto& pa = properties_[a.raw];
    const auto& pb = properties_[b.raw];
    if (pa.location != pb.location) return pa.location < pb.location;
    return a < b;
  });
  return out;
}

std::vector<PropertyId> PropertyDb::at_node(NodeId node) const {
  auto it = by_attach_.find(node);
  if (it == by_attach_.end()) return {};
  return it->second;
}

}  // namespace miniverif::props
