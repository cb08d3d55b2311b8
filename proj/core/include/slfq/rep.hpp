#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slfq/matrix.hpp"
#include "slfq/walk.hpp"
#include "slfq/window.hpp"

namespace slfq {

enum class TagKind { Zero, Stable };

// Eventual behavior of a representation along one tail: beyond stab_depth
// the dimension is constantly `rank` (0 for Zero) and every deeper map is
// an identity. The window must reach depth stab_depth + 1.
struct TailTag {
  TagKind kind = TagKind::Zero;
  int rank = 0;
  int stab_depth = 0;
  bool operator==(const TailTag& o) const = default;
};

// Representation with exact rational matrices on a finite window plus
// per-tail eventual-behavior tags; beyond the window it continues with
// constant dimension and identity maps (or zeros).
struct StableRep {
  Window window;
  std::vector<int> dims;  // per window vertex
  std::vector<Mat> maps;  // per window arrow, dims[to] x dims[from]
  std::vector<TailTag> tags;

  int dim(int v) const { return dims[static_cast<std::size_t>(v)]; }
  const Mat& map(int a) const { return maps[static_cast<std::size_t>(a)]; }
  int total_window_dim() const;
  bool is_zero() const;
};

// Invariant violations, empty when the value is a well-formed StableRep.
std::vector<std::string> check_stable_rep(const StableRep& m);

// Canonical form: Stable tags of rank 0 become Zero and every stab_depth
// is minimal for the stored data.
StableRep minimize_stab(StableRep m);

// Window enlargement following the tag semantics; depths must dominate
// the current ones vertex for vertex.
StableRep extend_rep(const StableRep& m, const std::vector<int>& depths);

// Both representations extended onto the elementwise-max window.
std::pair<StableRep, StableRep> common_window(const StableRep& m, const StableRep& n);

StableRep zero_rep(const QuiverPresentation& qp);

// Smallest window depths on which the path-count representation at a
// exhibits its eventual pattern.
std::vector<int> projective_window_depths(const QuiverPresentation& qp, const std::string& a);

// Path-count representation at a vertex: dim at b = number of directed
// paths a -> b, maps act by appending an arrow to a path. The optional
// depths must dominate the constructor's own minimum.
StableRep projective_at(const QuiverPresentation& qp, const std::string& a);
StableRep projective_at(const QuiverPresentation& qp, const std::string& a,
                        std::vector<int> depths);
StableRep injective_at(const QuiverPresentation& qp, const std::string& a);
StableRep injective_at(const QuiverPresentation& qp, const std::string& a,
                       std::vector<int> depths);
StableRep simple_at(const QuiverPresentation& qp, const std::string& a);

// Thin representation of a simple walk: dimension one on its vertices,
// identity on its arrows. Rejects non-simple walks.
StableRep walk_rep(const QuiverPresentation& qp, const Walk& w);

StableRep direct_sum(const StableRep& m, const StableRep& n);

// Same dimensions, transposed matrices, over the opposite presentation.
StableRep dualize(const StableRep& m);

}  // namespace slfq
