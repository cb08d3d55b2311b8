#include "slfq/inventory.hpp"

#include <json.hpp>

namespace slfq {

ComponentInventory component_inventory(const QuiverPresentation& qp) {
  ClassificationReport cls = classify_quiver(qp);
  ComponentInventory inv;
  inv.preprojective_full = !cls.has_infinite_sourced_paths;
  inv.preinjective_full = !cls.has_infinite_sinked_paths;
  switch (cls.dynkin) {
    case Dynkin::AInf: inv.quasi_wings = WingCount::Zero; break;
    case Dynkin::DInf: inv.quasi_wings = WingCount::One; break;
    case Dynkin::AInfInf: inv.quasi_wings = WingCount::Two; break;
    case Dynkin::NotInfiniteDynkin: inv.quasi_wings = WingCount::Omega; break;
  }
  inv.wing_constraints.right_infinite = cls.has_infinite_sinked_paths;
  inv.wing_constraints.left_infinite = cls.has_infinite_sourced_paths;
  inv.wing_constraints.finite =
      cls.has_infinite_sourced_paths && cls.has_infinite_sinked_paths;
  inv.linear_components = !cls.is_star;
  return inv;
}

std::string inventory_to_json_text(const ComponentInventory& inv) {
  nlohmann::ordered_json j;
  j["preprojective_full"] = inv.preprojective_full;
  j["preinjective_full"] = inv.preinjective_full;
  if (inv.quasi_wings == WingCount::Omega)
    j["quasi_wings"] = "omega";
  else
    j["quasi_wings"] = static_cast<int>(inv.quasi_wings);
  j["wing_constraints"] = {{"right_infinite", inv.wing_constraints.right_infinite},
                           {"left_infinite", inv.wing_constraints.left_infinite},
                           {"finite", inv.wing_constraints.finite}};
  j["linear_components"] = inv.linear_components;
  return j.dump(2) + "\n";
}

}  // namespace slfq
