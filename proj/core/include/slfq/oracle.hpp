#pragma once

#include <string>
#include <vector>

#include "slfq/status.hpp"

namespace slfq {

// One interval module: support = positions lo..hi of the underlying path,
// 1-based in path order.
struct CatalogModule {
  int lo = 0;
  int hi = 0;
  StableRep rep;
};

// Every indecomposable over a linear type A quiver (Gabriel: exactly the
// n(n+1)/2 intervals) plus a hom basis for each ordered pair. All hom
// spaces are at most one dimensional and every endomorphism algebra is
// the scalars; build_catalog asserts both, and several routines below
// lean on them.
struct IndecomposableCatalog {
  QuiverPresentation qp;
  std::vector<std::string> order;  // vertex names in path order
  std::vector<CatalogModule> modules;
  std::vector<std::vector<HomSpace>> hom;  // [source][target]
  std::vector<int> projectives;  // catalog index of P_v, per order position
  std::vector<int> injectives;   // catalog index of I_v, per order position

  int size() const { return static_cast<int>(modules.size()); }
  int index_of(int lo, int hi) const;
  // Interval with exactly this dimension vector, -1 when there is none.
  int index_with_dims(const StableRep& m) const;
  int index_with_dims(const std::vector<int>& dims) const;
  bool is_projective(int idx) const;
  bool is_injective(int idx) const;
};

// Rejects any input that is not a tail-less connected quiver whose
// underlying graph is a path on 1..12 vertices.
IndecomposableCatalog build_catalog(const QuiverPresentation& qp);

// rad(M,N) = Hom(M,N) for distinct intervals, 0 on the diagonal; rad2 is
// spanned by composites through every catalog object with both factors
// radical. arrows = dim rad - dim rad2 is the AR quiver arrow count.
struct RadicalFiltration {
  std::vector<std::vector<int>> rad;
  std::vector<std::vector<int>> rad2;
  std::vector<std::vector<int>> arrows;
};
RadicalFiltration radical_filtration(const IndecomposableCatalog& cat);

struct AlmostSplitSequence {
  int left = -1;              // catalog index of L; tau(right) = left
  std::vector<int> middle;    // catalog indices of the summands of E
  int right = -1;             // catalog index of N
  StableRep middle_rep;       // E as one representation
  RepMorphism to_middle;      // L -> E (source: the computed kernel)
  RepMorphism from_middle;    // E -> N
};

// E is assembled from the AR arrow counts into N, the connecting maps
// from the stored hom bases, and L from the kernel. Exactness, mesh
// additivity, and the left/right factorization properties over the whole
// catalog are all verified before returning (std::logic_error on any
// failure). Projective end terms are rejected with std::invalid_argument.
AlmostSplitSequence almost_split_sequence_ending_at(const IndecomposableCatalog& cat, int n_idx);

// True exactly when f lies in rad minus rad2. Source and target must have
// interval dimension vectors over the catalog's quiver. The result is
// cross-checked against the definitional test (not a section, not a
// retraction, and no factorization with a non-section first factor and a
// non-retraction second factor); disagreement is a std::logic_error.
bool certify_irreducible(const IndecomposableCatalog& cat, const RepMorphism& f);

struct CheckResult {
  std::string name;
  int instances = 0;
  std::vector<std::string> violations;
};

// Batch falsification surface over one catalog: almost split sequences
// with end-term statuses and factorization, irreducible mono/epi
// kernel-cokernel statuses, composite statuses, certification agreement,
// AR quiver acyclicity, and tau bijectivity. Expected clean everywhere.
std::vector<CheckResult> verify_structure_theorems(const IndecomposableCatalog& cat);

// {"checks": [{"name", "instances", "violations": []}]}
std::string report_to_json_text(const std::vector<CheckResult>& checks);
bool report_clean(const std::vector<CheckResult>& checks);

}  // namespace slfq
