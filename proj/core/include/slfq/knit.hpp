#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slfq/window.hpp"

namespace slfq {

// A cell is Present with exact windowed dimensions, Absent (its mesh
// produced a negative entry, or its translate was already Absent), or
// Unresolved (its mesh touches data outside the window).
enum class KnitState { Present, Absent, Unresolved };

struct KnitVertex {
  int slice = 0;
  std::string vertex;  // window vertex name of the base quiver
  KnitState state = KnitState::Absent;
  std::vector<int> dims;  // indexed like the window vertices; Present only
};

struct KnitArrow {
  int from = 0;  // indices into KnittedComponent::vertices
  int to = 0;
  std::string via;  // id of the base arrow inducing this mesh arrow
};

// Slices 0..depth of the mesh extension grown from the projectives (or,
// via knit_preinjective, from the injectives). Cells are slice-major,
// one per (slice, window vertex) pair, in window vertex order. Arrows
// join Present cells only: the base arrow a: y -> x induces
// (n,x) -> (n,y) and (n,y) -> (n+1,x), listed by (source slice, window
// arrow order, within-slice before slice-crossing).
struct KnittedComponent {
  Window window;
  int depth = 0;
  std::vector<KnitVertex> vertices;
  std::vector<KnitArrow> arrows;

  int cell(int slice, const std::string& vertex) const;  // -1 off range
  // One slice toward slice 0; nullopt on slice 0. Present cells beyond
  // slice 0 always have a Present translate.
  std::optional<int> translate(int v) const;
  bool fully_resolved() const;
  int present_count() const;
};

// Grows the component slice by slice: slice 0 holds the path-count
// dimensions of every window vertex, and cell (n+1,x) is filled by mesh
// additivity dim(n+1,x) = sum over {(n,y) : y->x} and {(n+1,z) : x->z}
// minus dim(n,x), taking Absent terms as zero. Cells whose mesh reads a
// tail vertex beyond the window, or any Unresolved term, are Unresolved;
// a negative entry means Absent. An all-zero mesh result is Absent for a
// finite quiver and Unresolved otherwise (the data could sit past the
// window). `radius` is the window depth used on every tail; it is
// ignored when the quiver is finite.
KnittedComponent knit_preprojective(const QuiverPresentation& qp, int depth,
                                    int radius);

// Mirror image: slice 0 holds the injectives and arrows point toward it.
// Computed by knitting the reversed quiver and flipping every arrow; the
// stored window belongs to the input presentation, and translate() steps
// toward slice 0 as always (for this side that is the inverse translate).
KnittedComponent knit_preinjective(const QuiverPresentation& qp, int depth,
                                   int radius);

}  // namespace slfq
