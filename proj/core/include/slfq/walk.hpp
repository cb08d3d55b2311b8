#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slfq/window.hpp"

namespace slfq {

struct WalkStep {
  std::string arrow_id;
  bool inverted = false;
  std::string from;  // traversal source after applying the sign
  std::string to;
};

// A walk is given by its finite visited vertex sequence plus optional
// infinite continuations outward along a tail at either end. The front
// continuation enters from infinity and arrives at vertices.front(); the
// back one leaves vertices.back() toward infinity.
struct WalkSpec {
  std::optional<int> extend_front;
  std::vector<std::string> vertices;
  std::optional<int> extend_back;
};

struct Walk {
  WalkSpec spec;
  std::vector<WalkStep> steps;
  // (tail, anchor depth) of each continuation, when present.
  std::optional<std::pair<int, int>> front_anchor;
  std::optional<std::pair<int, int>> back_anchor;
  bool simple = false;
  bool reduced = false;
  // Whether an infinite end eventually runs along arrows of one direction.
  bool front_eventually_path = false;
  bool back_eventually_path = false;
  bool is_infinite() const { return spec.extend_front || spec.extend_back; }
};

// Resolves steps between consecutive vertices (exactly one connecting
// arrow required) and computes the simplicity and reducedness flags.
// Throws std::invalid_argument when the sequence cannot be resolved.
Walk make_walk(const QuiverPresentation& qp, const WalkSpec& spec);

// Convenience form: a walk listed as signed arrow ids. The traversal
// starts at `start` and each step must depart from the current vertex.
Walk make_walk_from_arrows(const QuiverPresentation& qp, const std::string& start,
                           const std::vector<std::pair<std::string, bool>>& signed_arrows);

}  // namespace slfq
