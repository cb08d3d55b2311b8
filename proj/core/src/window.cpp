#include "slfq/window.hpp"

#include <cassert>
#include <stdexcept>

namespace slfq {

int Window::index_of(const std::string& name) const {
  auto it = vindex_.find(name);
  return it == vindex_.end() ? -1 : it->second;
}

int Window::tail_vertex(int tail, int depth) const {
  assert(tail >= 0 && tail < static_cast<int>(qp_.tails.size()));
  assert(depth >= 0 && depth <= depths_[static_cast<std::size_t>(tail)]);
  if (depth == 0) return index_of(qp_.tails[static_cast<std::size_t>(tail)].attach);
  return index_of(tail_vertex_name(tail, depth));
}

int Window::boundary_vertex(int tail) const {
  return tail_vertex(tail, depths_[static_cast<std::size_t>(tail)]);
}

const std::vector<int>& Window::out_arrows(int v) const {
  return out_[static_cast<std::size_t>(v)];
}

const std::vector<int>& Window::in_arrows(int v) const {
  return in_[static_cast<std::size_t>(v)];
}

long long Window::count_paths(int u, int v) const {
  std::vector<long long> c(vertices_.size(), 0);
  c[static_cast<std::size_t>(u)] = 1;
  for (int x : topo_) {
    if (c[static_cast<std::size_t>(x)] == 0) continue;
    for (int ai : out_[static_cast<std::size_t>(x)])
      c[static_cast<std::size_t>(arrows_[static_cast<std::size_t>(ai)].to)] +=
          c[static_cast<std::size_t>(x)];
  }
  return c[static_cast<std::size_t>(v)];
}

std::vector<std::vector<int>> Window::enumerate_paths(int u, int v) const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur{u};
  auto rec = [&](auto&& self, int x) -> void {
    if (x == v) out.push_back(cur);
    for (int ai : out_[static_cast<std::size_t>(x)]) {
      int y = arrows_[static_cast<std::size_t>(ai)].to;
      cur.push_back(y);
      self(self, y);
      cur.pop_back();
    }
  };
  rec(rec, u);
  return out;
}

std::vector<std::vector<int>> Window::enumerate_arrow_paths(int u, int v) const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int x) -> void {
    if (x == v) out.push_back(cur);
    for (int ai : out_[static_cast<std::size_t>(x)]) {
      cur.push_back(ai);
      self(self, arrows_[static_cast<std::size_t>(ai)].to);
      cur.pop_back();
    }
  };
  rec(rec, u);
  return out;
}

Window materialize_window(const QuiverPresentation& qp, const std::vector<int>& depths) {
  ValidationReport vr = validate_presentation(qp);
  if (!vr.valid())
    throw std::invalid_argument("invalid presentation: " +
                                (vr.structural.empty() ? vr.violations.front()
                                                       : vr.structural.front()));
  if (depths.size() != qp.tails.size())
    throw std::invalid_argument("depth list length does not match tail count");
  for (int d : depths)
    if (d < 1) throw std::invalid_argument("window depth must be >= 1");

  Window w;
  w.qp_ = qp;
  w.depths_ = depths;
  for (const auto& v : qp.core.vertices) w.vertices_.push_back({v, -1, 0});
  for (int i = 0; i < static_cast<int>(qp.tails.size()); ++i)
    for (int d = 1; d <= depths[static_cast<std::size_t>(i)]; ++d)
      w.vertices_.push_back({tail_vertex_name(i, d), i, d});
  for (int i = 0; i < static_cast<int>(w.vertices_.size()); ++i)
    w.vindex_[w.vertices_[static_cast<std::size_t>(i)].name] = i;

  for (const auto& a : qp.core.arrows)
    w.arrows_.push_back({a.id, w.index_of(a.from), w.index_of(a.to), -1, 0});
  for (int i = 0; i < static_cast<int>(qp.tails.size()); ++i) {
    const TailSpec& t = qp.tails[static_cast<std::size_t>(i)];
    int prev = w.index_of(t.attach);
    for (int d = 1; d <= depths[static_cast<std::size_t>(i)]; ++d) {
      int cur = w.index_of(tail_vertex_name(i, d));
      if (t.word.at(d) == Dir::Out)
        w.arrows_.push_back({tail_arrow_id(i, d), prev, cur, i, d});
      else
        w.arrows_.push_back({tail_arrow_id(i, d), cur, prev, i, d});
      prev = cur;
    }
  }

  w.out_.resize(w.vertices_.size());
  w.in_.resize(w.vertices_.size());
  for (int ai = 0; ai < static_cast<int>(w.arrows_.size()); ++ai) {
    w.out_[static_cast<std::size_t>(w.arrows_[static_cast<std::size_t>(ai)].from)].push_back(ai);
    w.in_[static_cast<std::size_t>(w.arrows_[static_cast<std::size_t>(ai)].to)].push_back(ai);
  }

  // Kahn order; the window is acyclic because the core is and tails are linear.
  std::vector<int> indeg(w.vertices_.size(), 0);
  for (const auto& a : w.arrows_) ++indeg[static_cast<std::size_t>(a.to)];
  std::vector<int> queue;
  for (int v = 0; v < static_cast<int>(w.vertices_.size()); ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    w.topo_.push_back(v);
    for (int ai : w.out_[static_cast<std::size_t>(v)]) {
      int y = w.arrows_[static_cast<std::size_t>(ai)].to;
      if (--indeg[static_cast<std::size_t>(y)] == 0) queue.push_back(y);
    }
  }
  assert(w.topo_.size() == w.vertices_.size());
  return w;
}

Window materialize_window(const QuiverPresentation& qp, int depth) {
  return materialize_window(qp, std::vector<int>(qp.tails.size(), depth));
}

}  // namespace slfq
