#pragma once

#include <string>
#include <vector>

#include "slfq/rep.hpp"

namespace slfq {

// A morphism between representations presented on one shared window:
// comps[v] is a dim_target(v) x dim_source(v) matrix. Off-window tail
// components are the boundary component of that tail; commutation inside
// the window forces exactly that continuation, so the window data is the
// whole morphism.
struct RepMorphism {
  StableRep source;
  StableRep target;
  std::vector<Mat> comps;
};

// Violations of the morphism contract: matching windows, component
// shapes, and the commutation square of every window arrow. Empty means
// valid.
std::vector<std::string> check_morphism(const RepMorphism& f);

RepMorphism zero_morphism(const StableRep& m, const StableRep& n);
RepMorphism identity_morphism(const StableRep& m);

// Reinterprets f on a deeper window; new tail components repeat the old
// boundary component.
RepMorphism extend_morphism(const RepMorphism& f, const std::vector<int>& depths);

RepMorphism add(const RepMorphism& f, const RepMorphism& g);
RepMorphism scale(const Rat& c, const RepMorphism& f);
// g after f. Throws std::invalid_argument when f's target is not g's
// source.
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);
bool same_morphism(const RepMorphism& f, const RepMorphism& g);

bool is_zero_morphism(const RepMorphism& f);
bool is_mono(const RepMorphism& f);
bool is_epi(const RepMorphism& f);
bool is_iso(const RepMorphism& f);

// The full solution space of the commutation system on the common
// window. basis[i][v] is the component of the i-th basis morphism at
// window vertex v; the basis is canonical for the given inputs.
struct HomSpace {
  StableRep source;
  StableRep target;
  std::vector<std::vector<Mat>> basis;
  int dim() const { return static_cast<int>(basis.size()); }
  RepMorphism at(int i) const;
};

HomSpace hom_space(const StableRep& m, const StableRep& n);
int hom_dim(const StableRep& m, const StableRep& n);

struct KernelData {
  StableRep rep;
  RepMorphism inclusion;  // rep -> source
};
struct ImageData {
  StableRep rep;
  RepMorphism inclusion;   // rep -> target
  RepMorphism projection;  // source -> rep
};
struct CokernelData {
  StableRep rep;
  RepMorphism projection;  // target -> rep
};

// Vertexwise with canonical bases; outputs stabilize no later than the
// inputs. Throw std::invalid_argument on an invalid morphism.
KernelData kernel_of(const RepMorphism& f);
ImageData image_of(const RepMorphism& f);
CokernelData cokernel_of(const RepMorphism& f);

struct MorphismParts {
  KernelData kernel;
  ImageData image;
  CokernelData cokernel;
};
MorphismParts morphism_parts(const RepMorphism& f);

}  // namespace slfq
