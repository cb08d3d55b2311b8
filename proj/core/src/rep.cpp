#include "slfq/rep.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace slfq {

int StableRep::total_window_dim() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

bool StableRep::is_zero() const {
  for (int d : dims)
    if (d != 0) return false;
  for (const auto& t : tags)
    if (t.kind == TagKind::Stable && t.rank > 0) return false;
  return true;
}

std::vector<std::string> check_stable_rep(const StableRep& m) {
  std::vector<std::string> bad;
  const Window& w = m.window;
  if (static_cast<int>(m.dims.size()) != w.vertex_count()) {
    bad.push_back("dims length does not match window vertex count");
    return bad;
  }
  if (static_cast<int>(m.maps.size()) != w.arrow_count()) {
    bad.push_back("maps length does not match window arrow count");
    return bad;
  }
  if (m.tags.size() != w.qp().tails.size()) {
    bad.push_back("tag count does not match tail count");
    return bad;
  }
  for (int v = 0; v < w.vertex_count(); ++v)
    if (m.dim(v) < 0) bad.push_back("negative dimension at " + w.vertex(v).name);
  for (int a = 0; a < w.arrow_count(); ++a) {
    const WArrow& ar = w.arrow(a);
    if (m.map(a).rows() != m.dim(ar.to) || m.map(a).cols() != m.dim(ar.from))
      bad.push_back("map shape mismatch on arrow " + ar.id);
  }
  for (int t = 0; t < static_cast<int>(m.tags.size()); ++t) {
    const TailTag& tag = m.tags[static_cast<std::size_t>(t)];
    int depth = w.depths()[static_cast<std::size_t>(t)];
    std::string label = "tail " + std::to_string(t);
    if (tag.stab_depth < 0) bad.push_back(label + ": negative stab depth");
    if (depth < tag.stab_depth + 1) bad.push_back(label + ": window shallower than stab + 1");
    int want = 0;
    if (tag.kind == TagKind::Stable) {
      if (tag.rank < 1) bad.push_back(label + ": stable rank must be positive; use the zero tag");
      want = tag.rank;
    }
    for (int d = tag.stab_depth + 1; d <= depth; ++d)
      if (m.dim(w.tail_vertex(t, d)) != want)
        bad.push_back(label + ": dimension at depth " + std::to_string(d) +
                      " disagrees with the tag");
    if (tag.kind == TagKind::Stable)
      for (int a = 0; a < w.arrow_count(); ++a) {
        const WArrow& ar = w.arrow(a);
        if (ar.tail == t && ar.depth >= tag.stab_depth + 2 && !m.map(a).is_identity())
          bad.push_back(label + ": map at depth " + std::to_string(ar.depth) +
                        " is not an identity");
      }
  }
  return bad;
}

StableRep minimize_stab(StableRep m) {
  const Window& w = m.window;
  for (int t = 0; t < static_cast<int>(m.tags.size()); ++t) {
    TailTag& tag = m.tags[static_cast<std::size_t>(t)];
    if (tag.kind == TagKind::Stable && tag.rank == 0) tag = {TagKind::Zero, 0, tag.stab_depth};
    int depth = w.depths()[static_cast<std::size_t>(t)];
    int want = tag.kind == TagKind::Stable ? tag.rank : 0;
    int s = 0;
    for (int d = 1; d <= depth; ++d)
      if (m.dim(w.tail_vertex(t, d)) != want) s = std::max(s, d);
    if (tag.kind == TagKind::Stable)
      for (int a = 0; a < w.arrow_count(); ++a) {
        const WArrow& ar = w.arrow(a);
        if (ar.tail == t && !m.map(a).is_identity()) s = std::max(s, ar.depth - 1);
      }
    assert(s <= tag.stab_depth);
    tag.stab_depth = s;
  }
  return m;
}

StableRep extend_rep(const StableRep& m, const std::vector<int>& depths) {
  const Window& ow = m.window;
  assert(depths.size() == ow.depths().size());
  for (std::size_t i = 0; i < depths.size(); ++i) assert(depths[i] >= ow.depths()[i]);

  StableRep r;
  r.window = materialize_window(ow.qp(), depths);
  r.tags = m.tags;
  r.dims.resize(static_cast<std::size_t>(r.window.vertex_count()));
  for (int v = 0; v < r.window.vertex_count(); ++v) {
    const WVertex& wv = r.window.vertex(v);
    int old = ow.index_of(wv.name);
    if (old >= 0) {
      r.dims[static_cast<std::size_t>(v)] = m.dim(old);
    } else {
      const TailTag& tag = m.tags[static_cast<std::size_t>(wv.tail)];
      r.dims[static_cast<std::size_t>(v)] = tag.kind == TagKind::Stable ? tag.rank : 0;
    }
  }
  r.maps.resize(static_cast<std::size_t>(r.window.arrow_count()));
  for (int a = 0; a < r.window.arrow_count(); ++a) {
    const WArrow& ar = r.window.arrow(a);
    if (ar.tail < 0 || ar.depth <= ow.depths()[static_cast<std::size_t>(ar.tail)]) {
      // Arrow ids are stable across extensions; find the old index.
      int old = -1;
      for (int b = 0; b < ow.arrow_count(); ++b)
        if (ow.arrow(b).id == ar.id) {
          old = b;
          break;
        }
      assert(old >= 0);
      r.maps[static_cast<std::size_t>(a)] = m.map(old);
    } else {
      const TailTag& tag = m.tags[static_cast<std::size_t>(ar.tail)];
      r.maps[static_cast<std::size_t>(a)] =
          tag.kind == TagKind::Stable ? Mat::identity(tag.rank) : Mat(0, 0);
    }
  }
  return r;
}

std::pair<StableRep, StableRep> common_window(const StableRep& m, const StableRep& n) {
  assert(same_presentation(m.window.qp(), n.window.qp()));
  std::vector<int> depths = m.window.depths();
  for (std::size_t i = 0; i < depths.size(); ++i)
    depths[i] = std::max(depths[i], n.window.depths()[i]);
  return {extend_rep(m, depths), extend_rep(n, depths)};
}

StableRep zero_rep(const QuiverPresentation& qp) {
  StableRep r;
  r.window = materialize_window(qp, std::vector<int>(qp.tails.size(), 1));
  r.dims.assign(static_cast<std::size_t>(r.window.vertex_count()), 0);
  for (int a = 0; a < r.window.arrow_count(); ++a) r.maps.emplace_back(0, 0);
  r.tags.assign(qp.tails.size(), TailTag{TagKind::Zero, 0, 0});
  return r;
}

namespace {

// (tail, depth) of a vertex name when it lies on a tail; depth 0 core
// positions report as core.
std::pair<int, int> vertex_tail_position(const QuiverPresentation& qp, const std::string& a) {
  if (auto p = parse_tail_vertex_name(a, static_cast<int>(qp.tails.size()))) return *p;
  return {-1, 0};
}

}  // namespace

std::vector<int> projective_window_depths(const QuiverPresentation& qp, const std::string& a) {
  auto [atail, adepth] = vertex_tail_position(qp, a);
  std::vector<int> depths;
  for (int t = 0; t < static_cast<int>(qp.tails.size()); ++t) {
    const TailWord& word = qp.tails[static_cast<std::size_t>(t)].word;
    int d = static_cast<int>(word.preperiod().size()) + static_cast<int>(word.period().size()) + 2;
    if (t == atail) d += adepth;
    depths.push_back(d);
  }
  return depths;
}

StableRep projective_at(const QuiverPresentation& qp, const std::string& a) {
  return projective_at(qp, a, projective_window_depths(qp, a));
}

StableRep projective_at(const QuiverPresentation& qp, const std::string& a,
                        std::vector<int> depths) {
  std::vector<int> need = projective_window_depths(qp, a);
  for (std::size_t i = 0; i < depths.size(); ++i) depths[i] = std::max(depths[i], need[i]);

  StableRep r;
  r.window = materialize_window(qp, depths);
  const Window& w = r.window;
  int ai = w.index_of(a);
  if (ai < 0) throw std::invalid_argument("unknown vertex '" + a + "'");

  std::vector<std::vector<std::vector<int>>> paths;
  paths.reserve(static_cast<std::size_t>(w.vertex_count()));
  for (int v = 0; v < w.vertex_count(); ++v) paths.push_back(w.enumerate_arrow_paths(ai, v));
  for (int v = 0; v < w.vertex_count(); ++v)
    r.dims.push_back(static_cast<int>(paths[static_cast<std::size_t>(v)].size()));

  for (int e = 0; e < w.arrow_count(); ++e) {
    const WArrow& ar = w.arrow(e);
    const auto& pu = paths[static_cast<std::size_t>(ar.from)];
    const auto& pv = paths[static_cast<std::size_t>(ar.to)];
    Mat mat(static_cast<int>(pv.size()), static_cast<int>(pu.size()));
    for (int j = 0; j < static_cast<int>(pu.size()); ++j) {
      std::vector<int> extended = pu[static_cast<std::size_t>(j)];
      extended.push_back(e);
      for (int i = 0; i < static_cast<int>(pv.size()); ++i)
        if (pv[static_cast<std::size_t>(i)] == extended) mat.at(i, j) = 1;
    }
    r.maps.push_back(std::move(mat));
  }

  for (int t = 0; t < static_cast<int>(qp.tails.size()); ++t) {
    int b = r.dim(w.boundary_vertex(t));
    int d = w.depths()[static_cast<std::size_t>(t)];
    if (b == 0)
      r.tags.push_back({TagKind::Zero, 0, d - 1});
    else
      r.tags.push_back({TagKind::Stable, b, d - 1});
  }
  return minimize_stab(std::move(r));
}

StableRep injective_at(const QuiverPresentation& qp, const std::string& a) {
  return dualize(projective_at(opposite(qp), a));
}

StableRep injective_at(const QuiverPresentation& qp, const std::string& a,
                       std::vector<int> depths) {
  return dualize(projective_at(opposite(qp), a, std::move(depths)));
}

StableRep simple_at(const QuiverPresentation& qp, const std::string& a) {
  auto [atail, adepth] = vertex_tail_position(qp, a);
  std::vector<int> depths(qp.tails.size(), 1);
  if (atail >= 0) depths[static_cast<std::size_t>(atail)] = adepth + 1;

  StableRep r;
  r.window = materialize_window(qp, depths);
  int ai = r.window.index_of(a);
  if (ai < 0) throw std::invalid_argument("unknown vertex '" + a + "'");
  r.dims.assign(static_cast<std::size_t>(r.window.vertex_count()), 0);
  r.dims[static_cast<std::size_t>(ai)] = 1;
  for (int e = 0; e < r.window.arrow_count(); ++e) {
    const WArrow& ar = r.window.arrow(e);
    r.maps.emplace_back(r.dim(ar.to), r.dim(ar.from));
  }
  for (std::size_t t = 0; t < qp.tails.size(); ++t)
    r.tags.push_back({TagKind::Zero, 0, depths[t] - 1});
  return minimize_stab(std::move(r));
}

StableRep walk_rep(const QuiverPresentation& qp, const Walk& w) {
  if (!w.simple) throw std::invalid_argument("walk representations require a simple walk");

  std::vector<int> depths(qp.tails.size(), 1);
  auto bump = [&](int t, int d) {
    depths[static_cast<std::size_t>(t)] = std::max(depths[static_cast<std::size_t>(t)], d);
  };
  for (const auto& name : w.spec.vertices)
    if (auto p = parse_tail_vertex_name(name, static_cast<int>(qp.tails.size())))
      bump(p->first, p->second + 1);
  if (w.front_anchor) bump(w.front_anchor->first, w.front_anchor->second + 2);
  if (w.back_anchor) bump(w.back_anchor->first, w.back_anchor->second + 2);

  StableRep r;
  r.window = materialize_window(qp, depths);
  const Window& win = r.window;

  std::set<int> support;
  for (const auto& name : w.spec.vertices) support.insert(win.index_of(name));
  auto add_continuation = [&](const std::pair<int, int>& anchor) {
    for (int d = anchor.second + 1; d <= depths[static_cast<std::size_t>(anchor.first)]; ++d)
      support.insert(win.tail_vertex(anchor.first, d));
  };
  if (w.front_anchor) add_continuation(*w.front_anchor);
  if (w.back_anchor) add_continuation(*w.back_anchor);

  std::set<std::string> walked;
  for (const auto& s : w.steps) walked.insert(s.arrow_id);
  auto walk_covers = [&](const WArrow& ar) {
    if (walked.count(ar.id)) return true;
    auto covered = [&](const std::pair<int, int>& anchor) {
      return ar.tail == anchor.first && ar.depth > anchor.second;
    };
    if (w.front_anchor && covered(*w.front_anchor)) return true;
    if (w.back_anchor && covered(*w.back_anchor)) return true;
    return false;
  };

  for (int v = 0; v < win.vertex_count(); ++v) r.dims.push_back(support.count(v) ? 1 : 0);
  for (int e = 0; e < win.arrow_count(); ++e) {
    const WArrow& ar = win.arrow(e);
    Mat mat(r.dim(ar.to), r.dim(ar.from));
    if (mat.rows() == 1 && mat.cols() == 1 && walk_covers(ar)) mat.at(0, 0) = 1;
    r.maps.push_back(std::move(mat));
  }

  for (int t = 0; t < static_cast<int>(qp.tails.size()); ++t) {
    bool continued = (w.front_anchor && w.front_anchor->first == t) ||
                     (w.back_anchor && w.back_anchor->first == t);
    if (continued)
      r.tags.push_back({TagKind::Stable, 1, depths[static_cast<std::size_t>(t)] - 1});
    else
      r.tags.push_back({TagKind::Zero, 0, depths[static_cast<std::size_t>(t)] - 1});
  }
  return minimize_stab(std::move(r));
}

StableRep direct_sum(const StableRep& m, const StableRep& n) {
  auto [a, b] = common_window(m, n);
  StableRep r;
  r.window = a.window;
  for (int v = 0; v < r.window.vertex_count(); ++v) r.dims.push_back(a.dim(v) + b.dim(v));
  for (int e = 0; e < r.window.arrow_count(); ++e)
    r.maps.push_back(block_diag({a.map(e), b.map(e)}));
  for (std::size_t t = 0; t < a.tags.size(); ++t) {
    const TailTag& ta = a.tags[t];
    const TailTag& tb = b.tags[t];
    TailTag tag;
    tag.stab_depth = std::max(ta.stab_depth, tb.stab_depth);
    tag.rank = (ta.kind == TagKind::Stable ? ta.rank : 0) +
               (tb.kind == TagKind::Stable ? tb.rank : 0);
    tag.kind = tag.rank > 0 ? TagKind::Stable : TagKind::Zero;
    r.tags.push_back(tag);
  }
  return minimize_stab(std::move(r));
}

StableRep dualize(const StableRep& m) {
  StableRep r;
  r.window = materialize_window(opposite(m.window.qp()), m.window.depths());
  r.dims = m.dims;
  r.tags = m.tags;
  for (int e = 0; e < r.window.arrow_count(); ++e) {
    assert(r.window.arrow(e).id == m.window.arrow(e).id);
    r.maps.push_back(m.map(e).transpose());
  }
  return r;
}

}  // namespace slfq
