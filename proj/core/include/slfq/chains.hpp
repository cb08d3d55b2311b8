#pragma once

#include <vector>

#include "slfq/hom.hpp"

namespace slfq {

// Why one side of the exploration stopped.
enum class ChainStop { StepLimit, NoNeighbor, Ambiguous };

// Segment of a linear component: modules listed left to right, every
// connecting map pointing right, maps[i] : modules[i] -> modules[i+1]
// presented on the common window of the pair it joins.
struct Chain {
  std::vector<StableRep> modules;
  std::vector<RepMorphism> maps;
  int seed_index = 0;
  ChainStop left_stop = ChainStop::StepLimit;
  ChainStop right_stop = ChainStop::StepLimit;
  int left_candidates = 0;  // surviving count when a side stops Ambiguous
  int right_candidates = 0;
};

// The thin representations carried by simple walks inside the radius-R
// window: every finite walk plus every walk extending outward along a
// tail at either end (two distinct tails when both ends extend), one
// walk per reversal class. On a quiver whose underlying graph is a tree
// the family lists each isomorphism class exactly once.
std::vector<StableRep> thin_family(const QuiverPresentation& qp, int radius);

// Grows a chain from the seed with at most `steps` new members per
// side, searching thin_family on a radius derived from the seed window
// and the step budget. A right neighbor of the end E is a family member
// N, not isomorphic to any current member, with dim Hom(E,N) = 1 and
// dim Hom(N,E) = 0, whose connecting map is a mono with fp cokernel or
// an epi with fcp kernel and does not factor with nonzero composite
// through a third family member; left neighbors mirror this. A side
// stops at the step budget, when no candidate survives (NoNeighbor), or
// when several do (Ambiguous; reported, never tie-broken). Throws
// std::invalid_argument unless the seed is indecomposable with
// is_in_rrep false.
Chain chain_explore(const QuiverPresentation& qp, const StableRep& seed, int steps);

// The chain as a linear quiver: vertices "m0".."mk" left to right,
// arrows "e<i>": m<i> -> m<i+1>.
FiniteQuiver chain_quiver(const Chain& c);

}  // namespace slfq
