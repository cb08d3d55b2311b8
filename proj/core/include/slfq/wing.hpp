#pragma once

#include <optional>
#include <string>

#include "slfq/quiver.hpp"

namespace slfq {

// Integer interval, possibly unbounded on either side; both bounds set
// requires lo <= hi.
struct WingInterval {
  std::optional<long long> lo;
  std::optional<long long> hi;
};

// Finite viewport into the doubly infinite mesh lattice: orbit
// coordinates in [orbit_lo, orbit_hi], levels in [1, max_level].
struct WingViewport {
  long long orbit_lo = 0;
  long long orbit_hi = 0;
  int max_level = 1;
};

// The ambient lattice has vertices (z, l) with z any integer and l >= 1,
// arrows (z,l) -> (z,l+1) and (z,l+1) -> (z+1,l), and translate
// (z,l) -> (z-1,l). The wing of an interval I is its full convex
// subquiver generated by the level-one vertices {(i,1) : i in I}, namely
// {(z,l) : z >= min I, z+l-1 <= max I}.
//
// A finite interval yields the whole wing, |I| = m giving m(m+1)/2
// vertices; an unbounded one yields its intersection with `view`.
// Vertex (z,l) is named "z<z>l<l>", its outgoing arrows "u..." (level
// up) and "d..." (level down), both keyed by the source name. Throws
// std::invalid_argument on an empty interval, or when the interval is
// unbounded and no viewport is given.
FiniteQuiver quasi_wing(const WingInterval& I, const WingViewport& view);
FiniteQuiver quasi_wing(const WingInterval& I);

}  // namespace slfq
