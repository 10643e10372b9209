#pragma once

// Invariant reports for a single graph.

#include <string>

#include "curvecount/graph.hpp"

namespace curvecount {

/// Everything the invariants command prints, as pretty JSON with a fixed
/// key order. Quantities whose hypotheses fail are null and listed under
/// "unavailable" with the reason.
std::string invariants_json(const Multigraph& g);
/// Text rendering of an invariants_json document.
std::string invariants_text(const std::string& json_report);
/// Cache key: a format tag followed by the canonical graph JSON.
std::string invariants_cache_key(const Multigraph& g);

}  // namespace curvecount
