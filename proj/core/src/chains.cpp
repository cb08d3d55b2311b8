#include "slfq/chains.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "slfq/status.hpp"

namespace slfq {

namespace {

// Supported core vertices plus one interval hull per tail; hi of
// kLimitless marks support running out along the tail. Overlap of hulls
// is necessary for a nonzero morphism between thin walk modules.
constexpr long long kLimitless = std::numeric_limits<long long>::max();

struct SupportHull {
  std::set<std::string> core;
  std::vector<std::pair<long long, long long>> tails;  // lo > hi means empty
};

SupportHull support_hull(const StableRep& m) {
  const Window& w = m.window;
  SupportHull h;
  h.tails.assign(w.qp().tails.size(), {1, 0});
  for (int v = 0; v < w.vertex_count(); ++v) {
    if (m.dim(v) == 0) continue;
    const WVertex& wv = w.vertex(v);
    if (wv.tail < 0) {
      h.core.insert(wv.name);
    } else {
      auto& iv = h.tails[static_cast<std::size_t>(wv.tail)];
      if (iv.first > iv.second) iv = {wv.depth, wv.depth};
      iv.first = std::min<long long>(iv.first, wv.depth);
      iv.second = std::max<long long>(iv.second, wv.depth);
    }
  }
  for (std::size_t t = 0; t < m.tags.size(); ++t)
    if (m.tags[t].rank > 0) {
      auto& iv = h.tails[t];
      if (iv.first > iv.second) iv.first = m.tags[t].stab_depth + 1;
      iv.second = kLimitless;
    }
  return h;
}

bool hulls_overlap(const SupportHull& a, const SupportHull& b) {
  for (const auto& v : a.core)
    if (b.core.count(v)) return true;
  for (std::size_t t = 0; t < a.tails.size(); ++t) {
    const auto& x = a.tails[t];
    const auto& y = b.tails[t];
    if (x.first > x.second || y.first > y.second) continue;
    if (std::max(x.first, y.first) <= std::min(x.second, y.second)) return true;
  }
  return false;
}

struct WalkVariant {
  int front = -1;  // tail index, -1 for none
  std::vector<int> seq;
  int back = -1;
};

// Keeps one representative per reversal class.
bool reversal_canonical(const WalkVariant& v) {
  if (v.front != v.back) return v.front < v.back;
  const std::size_t n = v.seq.size();
  for (std::size_t i = 0; i < n; ++i) {
    int a = v.seq[i], b = v.seq[n - 1 - i];
    if (a != b) return a < b;
  }
  return true;
}

struct FamilyBuilder {
  const QuiverPresentation& qp;
  const Window& win;
  int radius;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<int>> attached;  // tails per core vertex index
  std::vector<char> on;
  std::vector<int> cur;
  std::vector<WalkVariant> variants;

  FamilyBuilder(const QuiverPresentation& q, const Window& w, int r)
      : qp(q), win(w), radius(r) {
    const int nv = win.vertex_count();
    adj.assign(static_cast<std::size_t>(nv), {});
    std::map<std::pair<int, int>, int> multi;
    for (int a = 0; a < win.arrow_count(); ++a) {
      const WArrow& wa = win.arrow(a);
      ++multi[{std::min(wa.from, wa.to), std::max(wa.from, wa.to)}];
    }
    for (int a = 0; a < win.arrow_count(); ++a) {
      const WArrow& wa = win.arrow(a);
      if (multi[{std::min(wa.from, wa.to), std::max(wa.from, wa.to)}] != 1) continue;
      adj[static_cast<std::size_t>(wa.from)].push_back(wa.to);
      adj[static_cast<std::size_t>(wa.to)].push_back(wa.from);
    }
    for (auto& l : adj) std::sort(l.begin(), l.end());
    attached.assign(static_cast<std::size_t>(nv), {});
    for (int t = 0; t < static_cast<int>(qp.tails.size()); ++t)
      attached[static_cast<std::size_t>(
                   win.index_of(qp.tails[static_cast<std::size_t>(t)].attach))]
          .push_back(t);
    on.assign(static_cast<std::size_t>(nv), 0);
  }

  // Tails along which the walk may leave the window at vertex v, given
  // the vertex preceding v on the walk (-1 at a walk end of length one).
  // The continuation must be fresh (its first vertex off the walk) and
  // canonical (a walk already arriving along the tail re-enumerates as
  // the shorter anchored walk).
  std::vector<int> extensions(int v, int prev) const {
    const WVertex& wv = win.vertex(v);
    std::vector<int> out;
    auto admit = [&](int t, int d) {
      int next = d + 1 <= radius ? win.tail_vertex(t, d + 1) : -1;
      if (next >= 0 && on[static_cast<std::size_t>(next)]) return;
      if (d >= 1 && prev >= 0 && prev == win.tail_vertex(t, d - 1)) return;
      out.push_back(t);
    };
    if (wv.tail >= 0)
      admit(wv.tail, wv.depth);
    else
      for (int t : attached[static_cast<std::size_t>(v)]) admit(t, 0);
    return out;
  }

  void record() {
    int head = cur.front(), tail_v = cur.back();
    int head_prev = cur.size() > 1 ? cur[1] : -1;
    int tail_prev = cur.size() > 1 ? cur[cur.size() - 2] : -1;
    std::vector<int> fronts = extensions(head, head_prev);
    std::vector<int> backs = extensions(tail_v, tail_prev);
    fronts.push_back(-1);
    backs.push_back(-1);
    for (int f : fronts)
      for (int b : backs) {
        if (f >= 0 && f == b) continue;  // one tail cannot carry both ends
        WalkVariant v{f, cur, b};
        if (reversal_canonical(v)) variants.push_back(std::move(v));
      }
  }

  void dfs(int v) {
    record();
    for (int u : adj[static_cast<std::size_t>(v)])
      if (!on[static_cast<std::size_t>(u)]) {
        on[static_cast<std::size_t>(u)] = 1;
        cur.push_back(u);
        dfs(u);
        cur.pop_back();
        on[static_cast<std::size_t>(u)] = 0;
      }
  }

  void run() {
    for (int s = 0; s < win.vertex_count(); ++s) {
      on[static_cast<std::size_t>(s)] = 1;
      cur = {s};
      dfs(s);
      on[static_cast<std::size_t>(s)] = 0;
    }
  }
};

}  // namespace

std::vector<StableRep> thin_family(const QuiverPresentation& qp, int radius) {
  if (!qp.tails.empty() && radius < 1)
    throw std::invalid_argument("radius must be positive");
  std::vector<int> depths(qp.tails.size(), radius);
  Window win = materialize_window(qp, depths);
  FamilyBuilder fb(qp, win, radius);
  fb.run();
  std::vector<StableRep> family;
  family.reserve(fb.variants.size());
  for (const WalkVariant& v : fb.variants) {
    WalkSpec spec;
    if (v.front >= 0) spec.extend_front = v.front;
    if (v.back >= 0) spec.extend_back = v.back;
    for (int idx : v.seq) spec.vertices.push_back(win.vertex(idx).name);
    family.push_back(walk_rep(qp, make_walk(qp, spec)));
  }
  return family;
}

namespace {

struct NeighborSearch {
  const std::vector<StableRep>& family;
  std::vector<SupportHull> hulls;
  std::map<std::pair<const StableRep*, const StableRep*>, int> dim_cache;

  explicit NeighborSearch(const std::vector<StableRep>& fam) : family(fam) {
    hulls.reserve(family.size());
    for (const StableRep& m : family) hulls.push_back(support_hull(m));
  }

  int dim(const StableRep& a, const StableRep& b) {
    auto key = std::make_pair(&a, &b);
    auto it = dim_cache.find(key);
    if (it != dim_cache.end()) return it->second;
    int d = hom_dim(a, b);
    dim_cache.emplace(key, d);
    return d;
  }

  // Some composite through a third family member is nonzero, so the
  // unique-up-to-scalar map src -> tgt factors and is not irreducible.
  bool factors_through_family(const StableRep& src, const StableRep& tgt,
                              const SupportHull& hsrc, const SupportHull& htgt) {
    for (std::size_t x = 0; x < family.size(); ++x) {
      const StableRep& X = family[x];
      if (!hulls_overlap(hsrc, hulls[x]) || !hulls_overlap(hulls[x], htgt)) continue;
      if (dim(src, X) == 0 || dim(X, tgt) == 0) continue;
      if (is_isomorphic(X, src) || is_isomorphic(X, tgt)) continue;
      auto [s1, x1] = common_window(src, X);
      auto [x2, t2] = common_window(x1, tgt);
      StableRep s2 = extend_rep(s1, x2.window.depths());
      HomSpace in = hom_space(s2, x2);
      HomSpace outp = hom_space(x2, t2);
      for (int i = 0; i < in.dim(); ++i)
        for (int j = 0; j < outp.dim(); ++j)
          if (!is_zero_morphism(compose(outp.at(j), in.at(i)))) return true;
    }
    return false;
  }

  struct Found {
    std::size_t index;
    RepMorphism map;
  };

  // Surviving neighbors of `end` on one side; `members` excludes
  // revisits by isomorphism class.
  std::vector<Found> survivors(const StableRep& end, const SupportHull& hend,
                               bool rightward, const std::vector<StableRep>& members) {
    std::vector<Found> out;
    for (std::size_t c = 0; c < family.size(); ++c) {
      const StableRep& C = family[c];
      if (!hulls_overlap(hend, hulls[c])) continue;
      const StableRep& src = rightward ? end : C;
      const StableRep& tgt = rightward ? C : end;
      if (dim(src, tgt) != 1) continue;
      if (dim(tgt, src) != 0) continue;
      bool revisit = false;
      for (const StableRep& m : members)
        if (is_isomorphic(C, m)) {
          revisit = true;
          break;
        }
      if (revisit) continue;
      RepMorphism f = hom_space(src, tgt).at(0);
      bool admissible = false;
      if (is_mono(f)) admissible = presentation_status(cokernel_of(f).rep).fp;
      if (!admissible && is_epi(f))
        admissible = presentation_status(kernel_of(f).rep).fcp;
      if (!admissible) continue;
      const SupportHull& hsrc = rightward ? hend : hulls[c];
      const SupportHull& htgt = rightward ? hulls[c] : hend;
      if (factors_through_family(src, tgt, hsrc, htgt)) continue;
      out.push_back({c, std::move(f)});
    }
    return out;
  }
};

}  // namespace

Chain chain_explore(const QuiverPresentation& qp, const StableRep& seed, int steps) {
  if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
  if (!is_indecomposable(seed))
    throw std::invalid_argument("chain seed must be indecomposable");
  if (is_in_rrep(seed))
    throw std::invalid_argument("chain seed must lie outside the finitely "
                                "presented/copresented part");

  int seed_depth = 1;
  for (int d : seed.window.depths()) seed_depth = std::max(seed_depth, d);
  std::vector<StableRep> family = thin_family(qp, seed_depth + 2 * steps + 4);
  NeighborSearch search(family);

  Chain out;
  out.modules.push_back(seed);
  const StableRep* right_end = &seed;
  const StableRep* left_end = &seed;

  for (int k = 0; k < steps; ++k) {
    auto sv = search.survivors(*right_end, support_hull(*right_end), true, out.modules);
    if (sv.empty()) {
      out.right_stop = ChainStop::NoNeighbor;
      break;
    }
    if (sv.size() > 1) {
      out.right_stop = ChainStop::Ambiguous;
      out.right_candidates = static_cast<int>(sv.size());
      break;
    }
    const StableRep& C = family[sv[0].index];
    if (!is_indecomposable(C))
      throw std::logic_error("chain step accepted a decomposable module");
    out.modules.push_back(C);
    out.maps.push_back(std::move(sv[0].map));
    right_end = &family[sv[0].index];
  }

  for (int k = 0; k < steps; ++k) {
    auto sv = search.survivors(*left_end, support_hull(*left_end), false, out.modules);
    if (sv.empty()) {
      out.left_stop = ChainStop::NoNeighbor;
      break;
    }
    if (sv.size() > 1) {
      out.left_stop = ChainStop::Ambiguous;
      out.left_candidates = static_cast<int>(sv.size());
      break;
    }
    const StableRep& C = family[sv[0].index];
    if (!is_indecomposable(C))
      throw std::logic_error("chain step accepted a decomposable module");
    out.modules.insert(out.modules.begin(), C);
    out.maps.insert(out.maps.begin(), std::move(sv[0].map));
    ++out.seed_index;
    left_end = &family[sv[0].index];
  }
  return out;
}

FiniteQuiver chain_quiver(const Chain& c) {
  FiniteQuiver q;
  for (std::size_t i = 0; i < c.modules.size(); ++i)
    q.vertices.push_back("m" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < c.modules.size(); ++i)
    q.arrows.push_back({"e" + std::to_string(i), "m" + std::to_string(i),
                        "m" + std::to_string(i + 1)});
  return q;
}

}  // namespace slfq
