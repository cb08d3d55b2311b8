#pragma once

#include <string>

#include "slfq/knit.hpp"
#include "slfq/quiver.hpp"

namespace slfq {

// Deterministic digraph text in stored order, one line per vertex and
// per arrow, all identifiers quoted.
std::string to_dot(const FiniteQuiver& q, const std::string& name = "quiver");

// Present cells carry their dimension vector as the label, Unresolved
// ones are dashed gray question marks, Absent ones are omitted.
std::string to_dot(const KnittedComponent& k,
                   const std::string& name = "component");

}  // namespace slfq
