#pragma once

#include <string>
#include <vector>

#include "miniverif/kernel_services/properties.hpp"

namespace miniverif::props {

struct Summary {
  int total = 0;
  int valid = 0;
  int invalid = 0;
  int unknown = 0;
  int inconsistent = 0;
};

Summary summarize(const std::vector<ConsolidatedStatus>& statuses);

/// One line per property:
///   <file>:<line> [<kind>] <predicate> : <consolidated> (by <emitters>)
/// followed by a summary line. Properties appear in id order; emitters are
/// sorted, so the output is byte-stable.
std::string render_text(const PropertyDb& db, const std::vector<ConsolidatedStatus>& statuses);

/// {"properties":[...],"summary":{...}} with stable field and element
/// order.
std::string render_json(const PropertyDb& db, const std::vector<ConsolidatedStatus>& statuses);

}  // namespace miniverif::props
