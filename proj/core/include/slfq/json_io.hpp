#pragma once

#include <stdexcept>
#include <string>

#include "slfq/rep.hpp"

namespace slfq {

// Parse failure or schema violation. `pointer` is the JSON path of the
// offending field ("/tails/0/period"; "" for the document root), and it
// is already baked into what().
struct JsonError : std::runtime_error {
  std::string pointer;
  JsonError(std::string ptr, const std::string& msg);
};

// Strict schema: {"core": {"vertices": [...], "arrows": [{"id","from",
// "to"}]}, "tails": [{"attach", "preperiod", "period"}]}. Unknown fields
// are rejected; words are kept as written so validation can report a
// non-normal form instead of silently fixing it.
QuiverPresentation quiver_from_json_text(const std::string& text);
std::string quiver_to_json_text(const QuiverPresentation& qp);

// Strict schema: {"window_depths": {tail: d}, "dims": {vertex: n},
// "maps": {arrow: [[rational strings]]}, "tags": {tail: "zero" |
// {"stable": m}}}. Tail keys are decimal indices. Omitted dims, maps and
// tags default to zero; every tail needs a window depth. There is no
// stabilization-depth field: the minimal one is recomputed, and the full
// representation invariants are enforced before it is.
// The quiver must be structurally valid (its window gets materialized).
StableRep rep_from_json_text(const QuiverPresentation& qp, const std::string& text);
std::string rep_to_json_text(const StableRep& m);

}  // namespace slfq
