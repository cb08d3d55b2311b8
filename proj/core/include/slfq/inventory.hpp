#pragma once

#include <string>

#include "slfq/classify.hpp"

namespace slfq {

// Number of wing-shaped components: 0, 1, or 2 for the three infinite
// Dynkin shapes, Omega (one per finite wing size) otherwise.
enum class WingCount { Zero, One, Two, Omega };

// Which wing shapes can occur: right-infinite wings need infinite sinked
// paths, left-infinite ones need infinite sourced paths, finite ones
// need both.
struct WingConstraints {
  bool right_infinite = false;
  bool left_infinite = false;
  bool finite = false;
  bool operator==(const WingConstraints&) const = default;
};

// Census of the components the category of eventually-stable
// representations admits, derived from the quiver classification alone.
struct ComponentInventory {
  bool preprojective_full = false;  // every mesh slice completes
  bool preinjective_full = false;
  WingCount quasi_wings = WingCount::Zero;
  WingConstraints wing_constraints;
  bool linear_components = false;  // extra linear chains occur
};

// Requires a valid, infinite, connected presentation; throws
// std::invalid_argument otherwise. The projective side is full exactly
// when no infinite sourced path exists, the injective side dually.
ComponentInventory component_inventory(const QuiverPresentation& qp);

// {"preprojective_full": .., "preinjective_full": .., "quasi_wings":
// 0|1|2|"omega", "wing_constraints": {"right_infinite": ..,
// "left_infinite": .., "finite": ..}, "linear_components": ..}
std::string inventory_to_json_text(const ComponentInventory& inv);

}  // namespace slfq
