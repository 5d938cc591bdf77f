#include "miniverif/kernel_services/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace miniverif::props {

Summary summarize(const std::vector<ConsolidatedStatus>& statuses) {
  Summary s;
  s.total = static_cast<int>(statuses.size());
  for (ConsolidatedStatus st : statuses) {
    switch (st) {
      case ConsolidatedStatus::valid: ++s.valid; break;
      case ConsolidatedStatus::invalid: ++s.invalid; break;
      case ConsolidatedStatus::unknown: ++s.unknown; break;
      case ConsolidatedStatus::inconsistent: ++s.inconsistent; break;
    }
  }
  return s;
}

namespace {

std::vector<const EmittedStatus*> sorted_emissions(const PropertyDb& db, PropertyId id) {
  std::vector<const EmittedStatus*> out;
  for (const auto& e : db.emissions(id)) out.push_back(&e);
  std::sort(out.begin(), out.end(), [](const EmittedStatus* a, const EmittedStatus* b) {
    return a->emitter < b->emitter;
  });
  return out;
}

}  // namespace

std::string render_text(const PropertyDb& db,
                        const std::vector<ConsolidatedStatus>& statuses) {
  std::ostringstream out;
  for (const auto& p : db.all()) {
    out << p.location.file << ":" << p.location.line << " ["
        << property_kind_name(p.kind) << "] " << p.predicate_text << " : "
        << consolidated_status_name(statuses[p.id.raw]) << " (by ";
    auto emitted = sorted_emissions(db, p.id);
    if (emitted.empty()) {
      out << "none";
    } else {
      for (std::size_t i = 0; i < emitted.size(); ++i) {
        if (i) out << ", ";
        out << emitted[i]->emitter;
      }
    }
    out << ")\n";
  }
  Summary s = summarize(statuses);
  out << "summary: total=" << s.total << " valid=" << s.valid << " invalid=" << s.invalid
      << " unknown=" << s.unknown << " inconsistent=" << s.inconsistent << "\n";
  return out.str();
}

std::string render_json(const PropertyDb& db,
                        const std::vector<ConsolidatedStatus>& statuses) {
  nlohmann::ordered_json doc;
  doc["properties"] = nlohmann::ordered_json::array();
  for (const auto& p : db.all()) {
    nlohmann::ordered_json jp;
    jp["id"] = p.id.raw;
    jp["file"] = p.location.file;
    jp["line"] = p.location.line;
    jp["kind"] = property_kind_name(p.kind);
    jp["predicate"] = p.predicate_text;
    jp["origin"] = p.origin_text();
    jp["emitted"] = nlohmann::ordered_json::array();
    for (const EmittedStatus* e : sorted_emissions(db, p.id)) {
      nlohmann::ordered_json je;
      je["emitter"] = e->emitter;
      je["status"] = local_status_name(e->local);
      je["hypotheses"] = nlohmann::ordered_json::array();
      for (PropertyId h : e->hypotheses) je["hypotheses"].push_back(h.raw);
      jp["emitted"].push_back(std::move(je));
    }
    jp["consolidated"] = consolidated_status_name(statuses[p.id.raw]);
    doc["properties"].push_back(std::move(jp));
  }
  Summary s = summarize(statuses);
  doc["summary"] = {{"total", s.total},
                    {"valid", s.valid},
                    {"invalid", s.invalid},
                    {"unknown", s.unknown},
                    {"inconsistent", s.inconsistent}};
  return doc.dump(2) + "\n";
}

}  // namespace miniverif::props
