#include "slfq/status.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <stdexcept>

namespace slfq {

namespace {

bool positive_stable(const TailTag& t) { return t.kind == TagKind::Stable && t.rank > 0; }

bool tails_fg(const StableRep& m) {
  for (std::size_t t = 0; t < m.tags.size(); ++t)
    if (positive_stable(m.tags[t]) && !m.window.qp().tails[t].word.eventually_out())
      return false;
  return true;
}

bool tails_fcg(const StableRep& m) {
  for (std::size_t t = 0; t < m.tags.size(); ++t)
    if (positive_stable(m.tags[t]) && !m.window.qp().tails[t].word.eventually_in())
      return false;
  return true;
}

}  // namespace

TopRadical top_and_radical(const StableRep& m0) {
  for (std::size_t t = 0; t < m0.tags.size(); ++t)
    if (positive_stable(m0.tags[t]) && !m0.window.qp().tails[t].word.eventually_constant())
      throw std::domain_error("radical is not eventually constant along tail " +
                              std::to_string(t));

  // Deep enough that the radical's eventual pattern shows inside the
  // window: past both the stabilization and the word preperiod.
  std::vector<int> depths = m0.window.depths();
  for (std::size_t t = 0; t < depths.size(); ++t) {
    int settle = std::max(m0.tags[t].stab_depth,
                          static_cast<int>(m0.window.qp().tails[t].word.preperiod().size()));
    depths[t] = std::max(depths[t], settle + 2);
  }
  StableRep m = extend_rep(m0, depths);
  const Window& w = m.window;

  TopRadical tr;
  tr.radical.window = w;
  std::vector<Mat> incl;
  for (int v = 0; v < w.vertex_count(); ++v) {
    std::vector<Mat> images;
    for (int e : w.in_arrows(v)) images.push_back(m.map(e));
    const WVertex& wv = w.vertex(v);
    if (wv.tail >= 0 && v == w.boundary_vertex(wv.tail)) {
      const TailTag& tag = m.tags[static_cast<std::size_t>(wv.tail)];
      if (positive_stable(tag) &&
          w.qp().tails[static_cast<std::size_t>(wv.tail)].word.at(wv.depth + 1) == Dir::In)
        images.push_back(Mat::identity(tag.rank));
    }
    Mat z = colspace(hstack(m.dim(v), images));
    tr.radical.dims.push_back(z.cols());
    incl.push_back(std::move(z));
  }
  for (int e = 0; e < w.arrow_count(); ++e) {
    const WArrow& ar = w.arrow(e);
    auto x = solve(incl[static_cast<std::size_t>(ar.to)],
                   m.map(e) * incl[static_cast<std::size_t>(ar.from)]);
    assert(x.has_value());
    tr.radical.maps.push_back(std::move(*x));
  }
  for (std::size_t t = 0; t < m.tags.size(); ++t) {
    int b = tr.radical.dims[static_cast<std::size_t>(
        tr.radical.window.boundary_vertex(static_cast<int>(t)))];
    int d = depths[t];
    tr.radical.tags.push_back(
        b == 0 ? TailTag{TagKind::Zero, 0, d - 1} : TailTag{TagKind::Stable, b, d - 1});
  }
  tr.radical = minimize_stab(std::move(tr.radical));
  assert(check_stable_rep(tr.radical).empty());
  tr.inclusion = {tr.radical, m, std::move(incl)};

  CokernelData co = cokernel_of(tr.inclusion);
  tr.top = std::move(co.rep);
  tr.projection = std::move(co.projection);
  return tr;
}

CoverData projective_cover(const StableRep& m0) {
  if (!tails_fg(m0))
    throw std::invalid_argument("projective cover requires a finitely generated input");
  TopRadical tr = top_and_radical(m0);
  StableRep m = tr.inclusion.target;  // the extension used internally
  const Window& w = m.window;
  const QuiverPresentation& qp = w.qp();

  // Generators: standard coordinates completing the radical at each
  // vertex, in window order.
  std::vector<std::pair<int, int>> gens;  // (vertex, coordinate)
  for (int v = 0; v < w.vertex_count(); ++v)
    for (int i : complement(tr.inclusion.comps[static_cast<std::size_t>(v)]))
      gens.push_back({v, i});

  // A window deep enough for every summand.
  std::vector<int> depths = w.depths();
  for (const auto& [v, i] : gens) {
    std::vector<int> need = projective_window_depths(qp, w.vertex(v).name);
    for (std::size_t t = 0; t < depths.size(); ++t) depths[t] = std::max(depths[t], need[t]);
  }

  CoverData cd;
  cd.cover = zero_rep(qp);
  cd.cover = extend_rep(cd.cover, depths);
  StableRep mx = extend_rep(m, depths);
  const Window& wx = mx.window;
  std::vector<Mat> comps;
  for (int u = 0; u < wx.vertex_count(); ++u) comps.emplace_back(mx.dim(u), 0);

  for (const auto& [v, i] : gens) {
    const std::string& base = w.vertex(v).name;
    cd.generators.push_back(base);
    StableRep p = projective_at(qp, base, depths);
    assert(p.window.depths() == depths);
    cd.cover = direct_sum(cd.cover, p);
    int vi = wx.index_of(base);
    for (int u = 0; u < wx.vertex_count(); ++u) {
      auto paths = wx.enumerate_arrow_paths(vi, u);
      Mat block(mx.dim(u), static_cast<int>(paths.size()));
      for (int c = 0; c < static_cast<int>(paths.size()); ++c) {
        Mat col(mx.dim(vi), 1);
        col.at(i, 0) = 1;
        for (int e : paths[static_cast<std::size_t>(c)]) col = mx.map(e) * col;
        for (int r = 0; r < block.rows(); ++r) block.at(r, c) = col.at(r, 0);
      }
      comps[static_cast<std::size_t>(u)] =
          hstack(mx.dim(u), {comps[static_cast<std::size_t>(u)], block});
    }
  }

  cd.onto = {cd.cover, mx, std::move(comps)};
  assert(check_morphism(cd.onto).empty());
  assert(is_epi(cd.onto));
  return cd;
}

StatusFlags presentation_status(const StableRep& m) {
  StatusFlags f;
  f.fg = tails_fg(m);
  f.fcg = tails_fcg(m);
  if (f.fg) f.fp = tails_fg(kernel_of(projective_cover(m).onto).rep);
  if (f.fcg) {
    StableRep d = dualize(m);
    f.fcp = tails_fg(kernel_of(projective_cover(d).onto).rep);
  }
  return f;
}

SimplePresentation simple_presentation(const QuiverPresentation& qp, const std::string& a) {
  SimplePresentation sp;
  sp.simple = simple_at(qp, a);
  sp.cover = projective_at(qp, a);
  const Window& w = sp.cover.window;
  int ai = w.index_of(a);

  // Successor arrows in window order; each contributes the projective at
  // its head, included by prepending the arrow to every path.
  std::vector<int> succ = w.out_arrows(ai);
  std::vector<int> depths = w.depths();
  for (int e : succ) {
    std::vector<int> need = projective_window_depths(qp, w.vertex(w.arrow(e).to).name);
    for (std::size_t t = 0; t < depths.size(); ++t) depths[t] = std::max(depths[t], need[t]);
  }

  StableRep cover = extend_rep(sp.cover, depths);
  const Window& wx = cover.window;
  int axi = wx.index_of(a);
  std::vector<std::vector<std::vector<int>>> apaths;
  for (int u = 0; u < wx.vertex_count(); ++u) apaths.push_back(wx.enumerate_arrow_paths(axi, u));

  sp.kernel = extend_rep(zero_rep(qp), depths);
  std::vector<Mat> incl;
  for (int u = 0; u < wx.vertex_count(); ++u) incl.emplace_back(cover.dim(u), 0);

  for (int e0 : succ) {
    // The same arrow in the deeper window.
    int e = -1;
    for (int c = 0; c < wx.arrow_count(); ++c)
      if (wx.arrow(c).id == w.arrow(e0).id) {
        e = c;
        break;
      }
    assert(e >= 0);
    const std::string& head = wx.vertex(wx.arrow(e).to).name;
    sp.successor_heads.push_back(head);
    StableRep p = projective_at(qp, head, depths);
    assert(p.window.depths() == depths);
    sp.kernel = direct_sum(sp.kernel, p);
    int hi = wx.index_of(head);
    for (int u = 0; u < wx.vertex_count(); ++u) {
      auto hp = wx.enumerate_arrow_paths(hi, u);
      const auto& ap = apaths[static_cast<std::size_t>(u)];
      Mat block(static_cast<int>(ap.size()), static_cast<int>(hp.size()));
      for (int j = 0; j < block.cols(); ++j) {
        std::vector<int> ext = {e};
        ext.insert(ext.end(), hp[static_cast<std::size_t>(j)].begin(),
                   hp[static_cast<std::size_t>(j)].end());
        for (int r = 0; r < block.rows(); ++r)
          if (ap[static_cast<std::size_t>(r)] == ext) block.at(r, j) = 1;
      }
      incl[static_cast<std::size_t>(u)] =
          hstack(cover.dim(u), {incl[static_cast<std::size_t>(u)], block});
    }
  }

  sp.cover = cover;
  sp.inclusion = {sp.kernel, sp.cover, std::move(incl)};
  assert(check_morphism(sp.inclusion).empty());

  StableRep simple = extend_rep(sp.simple, depths);
  std::vector<Mat> proj;
  for (int u = 0; u < wx.vertex_count(); ++u) {
    Mat c(simple.dim(u), cover.dim(u));
    if (u == axi) c.at(0, 0) = 1;  // the empty path coordinate
    proj.push_back(std::move(c));
  }
  sp.simple = simple;
  sp.projection = {sp.cover, sp.simple, std::move(proj)};
  assert(check_morphism(sp.projection).empty());
  return sp;
}

bool is_indecomposable(const StableRep& m) {
  if (m.is_zero()) return false;
  HomSpace h = hom_space(m, m);
  int n = h.dim();
  Mat gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat s = 0;
      for (std::size_t v = 0; v < h.basis[static_cast<std::size_t>(i)].size(); ++v)
        s += (h.basis[static_cast<std::size_t>(i)][v] * h.basis[static_cast<std::size_t>(j)][v])
                 .trace();
      gram.at(i, j) = s;
    }
  return rank(gram) == 1;
}

bool is_isomorphic(const StableRep& m, const StableRep& n) {
  if (!same_presentation(m.window.qp(), n.window.qp()))
    throw std::invalid_argument("is_isomorphic: presentations differ");
  auto [a, b] = common_window(m, n);
  if (a.dims != b.dims) return false;
  for (std::size_t t = 0; t < a.tags.size(); ++t) {
    int ra = a.tags[t].kind == TagKind::Stable ? a.tags[t].rank : 0;
    int rb = b.tags[t].kind == TagKind::Stable ? b.tags[t].rank : 0;
    if (ra != rb) return false;
  }
  if (a.is_zero()) return true;

  HomSpace h = hom_space(a, b);
  if (h.dim() == 0) return false;
  auto invertible = [&](const std::vector<Mat>& comps) {
    for (const auto& c : comps)
      if (rank(c) != c.rows()) return false;
    return true;
  };
  for (const auto& elem : h.basis)
    if (invertible(elem)) return true;

  std::vector<Mat> acc = h.basis[0];
  for (std::size_t i = 1; i < h.basis.size(); ++i) {
    for (std::size_t v = 0; v < acc.size(); ++v) acc[v] = acc[v] + h.basis[i][v];
    if (invertible(acc)) return true;
  }

  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rat> cs;
    for (int i = 0; i < h.dim(); ++i) cs.push_back(coeff(rng));
    std::vector<Mat> cand;
    for (std::size_t v = 0; v < h.basis[0].size(); ++v) {
      Mat s = cs[0] * h.basis[0][v];
      for (std::size_t i = 1; i < h.basis.size(); ++i) s = s + cs[i] * h.basis[i][v];
      cand.push_back(std::move(s));
    }
    if (invertible(cand)) return true;
  }
  return false;
}

bool is_in_rrep(const StableRep& m) {
  for (std::size_t t = 0; t < m.tags.size(); ++t)
    if (positive_stable(m.tags[t]) && !m.window.qp().tails[t].word.eventually_constant())
      return false;
  return true;
}

}  // namespace slfq
