#include "slfq/knit.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace slfq {

int KnittedComponent::cell(int slice, const std::string& vertex) const {
  if (slice < 0 || slice > depth) return -1;
  int v = window.index_of(vertex);
  if (v < 0) return -1;
  return slice * window.vertex_count() + v;
}

std::optional<int> KnittedComponent::translate(int v) const {
  const KnitVertex& kv = vertices[static_cast<std::size_t>(v)];
  if (kv.slice == 0) return std::nullopt;
  return v - window.vertex_count();
}

bool KnittedComponent::fully_resolved() const {
  return std::none_of(vertices.begin(), vertices.end(), [](const KnitVertex& kv) {
    return kv.state == KnitState::Unresolved;
  });
}

int KnittedComponent::present_count() const {
  return static_cast<int>(
      std::count_if(vertices.begin(), vertices.end(), [](const KnitVertex& kv) {
        return kv.state == KnitState::Present;
      }));
}

namespace {

std::vector<int> path_count_dims(const Window& win, int v) {
  std::vector<int> dims(static_cast<std::size_t>(win.vertex_count()), 0);
  for (int w = 0; w < win.vertex_count(); ++w) {
    long long c = win.count_paths(v, w);
    if (c > std::numeric_limits<int>::max())
      throw std::overflow_error("path count exceeds int range");
    dims[static_cast<std::size_t>(w)] = static_cast<int>(c);
  }
  return dims;
}

}  // namespace

KnittedComponent knit_preprojective(const QuiverPresentation& qp, int depth,
                                    int radius) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  if (!qp.tails.empty() && radius < 1)
    throw std::invalid_argument("radius must be positive");
  std::vector<int> depths(qp.tails.size(), radius);
  Window win = materialize_window(qp, depths);
  const int nv = win.vertex_count();

  std::vector<bool> boundary(static_cast<std::size_t>(nv), false);
  for (int t = 0; t < static_cast<int>(qp.tails.size()); ++t)
    boundary[static_cast<std::size_t>(win.boundary_vertex(t))] = true;

  KnittedComponent out{win, depth, {}, {}};
  out.vertices.reserve(static_cast<std::size_t>((depth + 1) * nv));
  for (int v = 0; v < nv; ++v)
    out.vertices.push_back(
        {0, win.vertex(v).name, KnitState::Present, path_count_dims(win, v)});

  std::vector<int> order(win.topo_order());
  std::reverse(order.begin(), order.end());

  for (int n = 0; n < depth; ++n) {
    out.vertices.resize(static_cast<std::size_t>((n + 2) * nv));
    auto at = [&](int slice, int v) -> KnitVertex& {
      return out.vertices[static_cast<std::size_t>(slice * nv + v)];
    };
    for (int v : order) at(n + 1, v) = {n + 1, win.vertex(v).name, KnitState::Absent, {}};
    for (int v : order) {
      KnitVertex& kv = at(n + 1, v);
      const KnitVertex& base = at(n, v);
      if (base.state == KnitState::Absent) continue;
      if (base.state == KnitState::Unresolved || boundary[static_cast<std::size_t>(v)]) {
        kv.state = KnitState::Unresolved;
        continue;
      }
      std::vector<long long> acc(static_cast<std::size_t>(nv), 0);
      bool unresolved = false;
      auto add = [&](const KnitVertex& term) {
        if (term.state == KnitState::Unresolved) unresolved = true;
        if (term.state != KnitState::Present) return;
        for (int w = 0; w < nv; ++w)
          acc[static_cast<std::size_t>(w)] += term.dims[static_cast<std::size_t>(w)];
      };
      for (int a : win.in_arrows(v)) add(at(n, win.arrow(a).from));
      for (int a : win.out_arrows(v)) add(at(n + 1, win.arrow(a).to));
      if (unresolved) {
        kv.state = KnitState::Unresolved;
        continue;
      }
      bool negative = false, zero = true;
      std::vector<int> dims(static_cast<std::size_t>(nv), 0);
      for (int w = 0; w < nv; ++w) {
        long long d = acc[static_cast<std::size_t>(w)] -
                      base.dims[static_cast<std::size_t>(w)];
        if (d < 0) negative = true;
        if (d != 0) zero = false;
        if (d > std::numeric_limits<int>::max())
          throw std::overflow_error("mesh dimension exceeds int range");
        dims[static_cast<std::size_t>(w)] = static_cast<int>(d);
      }
      if (negative) continue;
      if (zero) {
        if (!qp.tails.empty()) kv.state = KnitState::Unresolved;
        continue;
      }
      kv.state = KnitState::Present;
      kv.dims = std::move(dims);
    }
  }

  auto present = [&](int slice, int v) {
    return out.vertices[static_cast<std::size_t>(slice * nv + v)].state ==
           KnitState::Present;
  };
  for (int n = 0; n <= depth; ++n) {
    for (int a = 0; a < win.arrow_count(); ++a) {
      const WArrow& wa = win.arrow(a);  // wa: y -> x
      int y = wa.from, x = wa.to;
      if (present(n, x) && present(n, y))
        out.arrows.push_back({n * nv + x, n * nv + y, wa.id});
      if (n + 1 <= depth && present(n, y) && present(n + 1, x))
        out.arrows.push_back({n * nv + y, (n + 1) * nv + x, wa.id});
    }
  }
  return out;
}

KnittedComponent knit_preinjective(const QuiverPresentation& qp, int depth,
                                   int radius) {
  KnittedComponent k = knit_preprojective(opposite(qp), depth, radius);
  KnittedComponent out{materialize_window(qp, k.window.depths()), k.depth,
                       std::move(k.vertices), {}};
  out.arrows.reserve(k.arrows.size());
  for (const KnitArrow& a : k.arrows) out.arrows.push_back({a.to, a.from, a.via});
  return out;
}

}  // namespace slfq
