#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slfq/window.hpp"

namespace slfq {

enum class Dynkin { AInf, DInf, AInfInf, NotInfiniteDynkin };

std::string dynkin_name(Dynkin d);  // "A_inf", "D_inf", "A_inf_inf", "none"

// Witness for the star property: a finite convex subquiver gamma such
// that the whole quiver is gamma plus outgoing rays at the `sourced`
// vertices and incoming corays at the `sinked` ones. The window
// materializes gamma to depth max(preperiod, 1) for inspection; gamma
// itself lists core vertices plus each tail's preperiod segment.
struct StarWitness {
  Window window;
  std::vector<std::string> gamma;
  std::vector<std::string> sourced;
  std::vector<std::string> sinked;
};

struct ClassificationReport {
  bool is_star = false;
  std::optional<StarWitness> star_witness;
  Dynkin dynkin = Dynkin::NotInfiniteDynkin;
  bool has_infinite_sourced_paths = false;
  bool has_infinite_sinked_paths = false;
};

// Classifies a valid, infinite, connected presentation. The Dynkin type
// is a property of the underlying undirected graph. Throws
// std::invalid_argument on finite or disconnected input.
ClassificationReport classify_quiver(const QuiverPresentation& qp);

}  // namespace slfq
