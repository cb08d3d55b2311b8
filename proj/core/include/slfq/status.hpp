#pragma once

#include <string>
#include <vector>

#include "slfq/hom.hpp"

namespace slfq {

struct TopRadical {
  StableRep radical;
  RepMorphism inclusion;  // radical -> M
  StableRep top;
  RepMorphism projection;  // M -> top
};

// Vertexwise sum of incoming images, including the identity feeding the
// window boundary from outside when a positive-rank tail points inward
// there. Throws std::domain_error when some positive-rank tail never
// settles on one direction: the radical then has no eventually constant
// dimension and cannot be returned in this model.
TopRadical top_and_radical(const StableRep& m);

struct CoverData {
  StableRep cover;    // direct sum of projectives, one per generator
  RepMorphism onto;   // cover -> M, an epimorphism
  std::vector<std::string> generators;  // base vertex of each summand, in order
};

// Projective cover built on a basis of top M, lifted through standard
// coordinates. Requires a finitely generated input (std::invalid_argument
// otherwise).
CoverData projective_cover(const StableRep& m);

struct StatusFlags {
  bool fg = false;
  bool fcg = false;
  bool fp = false;
  bool fcp = false;
  bool operator==(const StatusFlags& o) const = default;
};

// fg: no positive-rank tail escapes along a word that is not eventually
// outward; fcg dually; fp additionally needs the cover kernel finitely
// generated; fcp is fp of the dual.
StatusFlags presentation_status(const StableRep& m);

struct SimplePresentation {
  StableRep simple;
  StableRep cover;   // the projective at the vertex
  StableRep kernel;  // direct sum over successor arrows
  RepMorphism inclusion;   // kernel -> cover
  RepMorphism projection;  // cover -> simple
  std::vector<std::string> successor_heads;
};

// The standard presentation 0 -> ⊕ P_{head(α)} -> P_a -> S_a -> 0 over
// the successor arrows of a, with verified morphisms.
SimplePresentation simple_presentation(const QuiverPresentation& qp, const std::string& a);

// Endomorphism-algebra test: the trace form of the window action has
// rad End as its radical (characteristic zero), so the quotient is one
// dimensional exactly for local endomorphism algebras. The zero
// representation counts as decomposable.
bool is_indecomposable(const StableRep& m);

// Searches hom_space(m, n) for an invertible element: single basis
// elements, prefix sums, then seeded random combinations. Exact rank
// checks; deterministic.
bool is_isomorphic(const StableRep& m, const StableRep& n);

// True when every positive-rank tail eventually keeps one direction.
bool is_in_rrep(const StableRep& m);

}  // namespace slfq
