#pragma once

#include <map>
#include <string>
#include <vector>

#include "slfq/quiver.hpp"

namespace slfq {

struct WVertex {
  std::string name;
  int tail = -1;  // -1 when the vertex lies in the core
  int depth = 0;  // tail depth; 0 for core vertices
};

struct WArrow {
  std::string id;
  int from = 0;  // vertex indices
  int to = 0;
  int tail = -1;  // -1 for core arrows
  int depth = 0;  // tail edge depth (joins depth-1 and depth)
};

// Finite full convex subquiver: the core plus each tail truncated at a
// per-tail depth >= 1. Vertex order is core input order followed by tail
// vertices in (tail, depth) order; arrows likewise. Always a DAG.
class Window {
 public:
  const QuiverPresentation& qp() const { return qp_; }
  const std::vector<int>& depths() const { return depths_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const WVertex& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
  const WArrow& arrow(int i) const { return arrows_[static_cast<std::size_t>(i)]; }

  int index_of(const std::string& name) const;  // -1 when absent
  int tail_vertex(int tail, int depth) const;   // depth 0 yields the attachment
  int boundary_vertex(int tail) const;          // deepest window vertex of the tail
  const std::vector<int>& out_arrows(int v) const;
  const std::vector<int>& in_arrows(int v) const;
  const std::vector<int>& topo_order() const { return topo_; }

  // Directed path counts, counting the trivial path when u == v.
  long long count_paths(int u, int v) const;
  // All directed paths u -> v as vertex index sequences.
  std::vector<std::vector<int>> enumerate_paths(int u, int v) const;
  // The same paths as arrow index sequences, in the same canonical order
  // (depth-first by arrow index). u == v yields one empty path.
  std::vector<std::vector<int>> enumerate_arrow_paths(int u, int v) const;

  friend Window materialize_window(const QuiverPresentation& qp,
                                   const std::vector<int>& depths);

 private:
  QuiverPresentation qp_;
  std::vector<int> depths_;
  std::vector<WVertex> vertices_;
  std::vector<WArrow> arrows_;
  std::map<std::string, int> vindex_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<int> topo_;
};

// Builds the window. Throws std::invalid_argument on an invalid
// presentation, a depth list of the wrong length, or any depth < 1.
Window materialize_window(const QuiverPresentation& qp, const std::vector<int>& depths);

// Convenience: the same depth for every tail.
Window materialize_window(const QuiverPresentation& qp, int depth);

}  // namespace slfq
