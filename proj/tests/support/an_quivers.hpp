#pragma once

#include <string>

#include "slfq/quiver.hpp"

namespace slfq::testsupport {

// Linear quiver on vertices "1".."n"; edge k joins k and k+1 and points
// right unless bit k-1 of mask is set. mask = 0 is the linear orientation
// 1 -> 2 -> ... -> n; there are 2^(n-1) orientations in total.
inline QuiverPresentation linear_an(int n, unsigned mask = 0) {
  QuiverPresentation qp;
  for (int v = 1; v <= n; ++v) qp.core.vertices.push_back(std::to_string(v));
  for (int k = 1; k < n; ++k) {
    std::string a = std::to_string(k);
    std::string b = std::to_string(k + 1);
    if (mask & (1u << (k - 1)))
      qp.core.arrows.push_back({"a" + std::to_string(k), b, a});
    else
      qp.core.arrows.push_back({"a" + std::to_string(k), a, b});
  }
  return qp;
}

}  // namespace slfq::testsupport
