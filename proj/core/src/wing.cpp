#include "slfq/wing.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace slfq {

namespace {

std::string wing_vertex_name(long long z, int l) {
  return "z" + std::to_string(z) + "l" + std::to_string(l);
}

}  // namespace

FiniteQuiver quasi_wing(const WingInterval& I, const WingViewport& view) {
  if (I.lo && I.hi && *I.lo > *I.hi)
    throw std::invalid_argument("empty wing interval");
  long long z_lo, z_hi;
  if (I.lo && I.hi) {
    z_lo = *I.lo;
    z_hi = *I.hi;
  } else {
    if (view.orbit_lo > view.orbit_hi || view.max_level < 1)
      throw std::invalid_argument("degenerate wing viewport");
    z_lo = I.lo ? std::max(*I.lo, view.orbit_lo) : view.orbit_lo;
    z_hi = I.hi ? std::min(*I.hi, view.orbit_hi) : view.orbit_hi;
  }

  auto level_cap = [&](long long z) -> long long {
    long long cap = I.hi ? (*I.hi - z + 1) : std::numeric_limits<int>::max();
    if (!(I.lo && I.hi)) cap = std::min<long long>(cap, view.max_level);
    return cap;
  };

  FiniteQuiver q;
  std::map<std::pair<long long, int>, bool> member;
  for (long long z = z_lo; z <= z_hi; ++z)
    for (long long l = 1; l <= level_cap(z); ++l) {
      q.vertices.push_back(wing_vertex_name(z, static_cast<int>(l)));
      member[{z, static_cast<int>(l)}] = true;
    }
  for (long long z = z_lo; z <= z_hi; ++z)
    for (long long l = 1; l <= level_cap(z); ++l) {
      std::string src = wing_vertex_name(z, static_cast<int>(l));
      if (member.count({z, static_cast<int>(l + 1)}))
        q.arrows.push_back({"u" + src, src, wing_vertex_name(z, static_cast<int>(l + 1))});
      if (l >= 2 && member.count({z + 1, static_cast<int>(l - 1)}))
        q.arrows.push_back({"d" + src, src, wing_vertex_name(z + 1, static_cast<int>(l - 1))});
    }
  return q;
}

FiniteQuiver quasi_wing(const WingInterval& I) {
  if (!(I.lo && I.hi))
    throw std::invalid_argument("unbounded wing interval needs a viewport");
  return quasi_wing(I, WingViewport{});
}

}  // namespace slfq
