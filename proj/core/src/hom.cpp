#include "slfq/hom.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace slfq {

namespace {

void require_same_presentation(const StableRep& m, const StableRep& n, const char* what) {
  if (!same_presentation(m.window.qp(), n.window.qp()))
    throw std::invalid_argument(std::string(what) + ": presentations differ");
}

// Dimensions, maps and eventual behavior agree; stab depths may differ.
bool same_rep_data(const StableRep& a, const StableRep& b) {
  if (a.dims != b.dims) return false;
  for (int e = 0; e < a.window.arrow_count(); ++e)
    if (!(a.map(e) == b.map(e))) return false;
  for (std::size_t t = 0; t < a.tags.size(); ++t)
    if (a.tags[t].kind != b.tags[t].kind || a.tags[t].rank != b.tags[t].rank) return false;
  return true;
}

std::vector<int> max_depths(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> d = a;
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::max(d[i], b[i]);
  return d;
}

RepMorphism reject_invalid(RepMorphism f, const char* what) {
  auto bad = check_morphism(f);
  if (!bad.empty()) throw std::invalid_argument(std::string(what) + ": " + bad.front());
  return f;
}

}  // namespace

std::vector<std::string> check_morphism(const RepMorphism& f) {
  std::vector<std::string> bad;
  if (!same_presentation(f.source.window.qp(), f.target.window.qp())) {
    bad.push_back("source and target live over different presentations");
    return bad;
  }
  if (f.source.window.depths() != f.target.window.depths()) {
    bad.push_back("source and target windows have different depths");
    return bad;
  }
  if (!check_stable_rep(f.source).empty()) bad.push_back("source representation is invalid");
  if (!check_stable_rep(f.target).empty()) bad.push_back("target representation is invalid");
  if (!bad.empty()) return bad;
  const Window& w = f.source.window;
  if (static_cast<int>(f.comps.size()) != w.vertex_count()) {
    bad.push_back("component count does not match window vertex count");
    return bad;
  }
  for (int v = 0; v < w.vertex_count(); ++v) {
    const Mat& c = f.comps[static_cast<std::size_t>(v)];
    if (c.rows() != f.target.dim(v) || c.cols() != f.source.dim(v))
      bad.push_back("component shape mismatch at " + w.vertex(v).name);
  }
  if (!bad.empty()) return bad;
  for (int e = 0; e < w.arrow_count(); ++e) {
    const WArrow& ar = w.arrow(e);
    Mat lhs = f.comps[static_cast<std::size_t>(ar.to)] * f.source.map(e);
    Mat rhs = f.target.map(e) * f.comps[static_cast<std::size_t>(ar.from)];
    if (!(lhs == rhs)) bad.push_back("square does not commute on arrow " + ar.id);
  }
  return bad;
}

RepMorphism zero_morphism(const StableRep& m, const StableRep& n) {
  require_same_presentation(m, n, "zero_morphism");
  RepMorphism f;
  std::tie(f.source, f.target) = common_window(m, n);
  for (int v = 0; v < f.source.window.vertex_count(); ++v)
    f.comps.emplace_back(f.target.dim(v), f.source.dim(v));
  return f;
}

RepMorphism identity_morphism(const StableRep& m) {
  RepMorphism f;
  f.source = m;
  f.target = m;
  for (int d : m.dims) f.comps.push_back(Mat::identity(d));
  return f;
}

RepMorphism extend_morphism(const RepMorphism& f, const std::vector<int>& depths) {
  const Window& ow = f.source.window;
  RepMorphism g;
  g.source = extend_rep(f.source, depths);
  g.target = extend_rep(f.target, depths);
  const Window& nw = g.source.window;
  g.comps.reserve(static_cast<std::size_t>(nw.vertex_count()));
  for (int v = 0; v < nw.vertex_count(); ++v) {
    const WVertex& wv = nw.vertex(v);
    int old = ow.index_of(wv.name);
    if (old < 0) old = ow.boundary_vertex(wv.tail);
    g.comps.push_back(f.comps[static_cast<std::size_t>(old)]);
  }
  return g;
}

RepMorphism add(const RepMorphism& f, const RepMorphism& g) {
  std::vector<int> d = max_depths(f.source.window.depths(), g.source.window.depths());
  RepMorphism a = extend_morphism(f, d);
  RepMorphism b = extend_morphism(g, d);
  if (!same_rep_data(a.source, b.source) || !same_rep_data(a.target, b.target))
    throw std::invalid_argument("add: morphisms have different endpoints");
  for (std::size_t v = 0; v < a.comps.size(); ++v) a.comps[v] = a.comps[v] + b.comps[v];
  return a;
}

RepMorphism scale(const Rat& c, const RepMorphism& f) {
  RepMorphism g = f;
  for (auto& m : g.comps) m = c * m;
  return g;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  require_same_presentation(f.source, g.source, "compose");
  std::vector<int> d = max_depths(f.source.window.depths(), g.source.window.depths());
  RepMorphism a = extend_morphism(f, d);
  RepMorphism b = extend_morphism(g, d);
  if (!same_rep_data(a.target, b.source))
    throw std::invalid_argument("compose: target of the inner morphism differs from the source "
                                "of the outer one");
  RepMorphism r;
  r.source = std::move(a.source);
  r.target = std::move(b.target);
  for (std::size_t v = 0; v < a.comps.size(); ++v) r.comps.push_back(b.comps[v] * a.comps[v]);
  return r;
}

bool same_morphism(const RepMorphism& f, const RepMorphism& g) {
  if (!same_presentation(f.source.window.qp(), g.source.window.qp())) return false;
  std::vector<int> d = max_depths(f.source.window.depths(), g.source.window.depths());
  RepMorphism a = extend_morphism(f, d);
  RepMorphism b = extend_morphism(g, d);
  if (!same_rep_data(a.source, b.source) || !same_rep_data(a.target, b.target)) return false;
  for (std::size_t v = 0; v < a.comps.size(); ++v)
    if (!(a.comps[v] == b.comps[v])) return false;
  return true;
}

bool is_zero_morphism(const RepMorphism& f) {
  for (const auto& c : f.comps)
    if (!c.is_zero()) return false;
  return true;
}

bool is_mono(const RepMorphism& f) {
  for (const auto& c : f.comps)
    if (rank(c) != c.cols()) return false;
  return true;
}

bool is_epi(const RepMorphism& f) {
  for (const auto& c : f.comps)
    if (rank(c) != c.rows()) return false;
  return true;
}

bool is_iso(const RepMorphism& f) {
  for (const auto& c : f.comps)
    if (c.rows() != c.cols() || rank(c) != c.rows()) return false;
  return true;
}

RepMorphism HomSpace::at(int i) const {
  RepMorphism f;
  f.source = source;
  f.target = target;
  f.comps = basis[static_cast<std::size_t>(i)];
  return f;
}

HomSpace hom_space(const StableRep& m, const StableRep& n) {
  require_same_presentation(m, n, "hom_space");
  HomSpace h;
  std::tie(h.source, h.target) = common_window(m, n);
  const Window& w = h.source.window;

  // Unknowns: the entries of every component, vertex by vertex in window
  // order, each matrix row-major.
  std::vector<int> off(static_cast<std::size_t>(w.vertex_count()) + 1, 0);
  for (int v = 0; v < w.vertex_count(); ++v)
    off[static_cast<std::size_t>(v) + 1] =
        off[static_cast<std::size_t>(v)] + h.target.dim(v) * h.source.dim(v);
  int unknowns = off.back();

  int rows = 0;
  for (int e = 0; e < w.arrow_count(); ++e) {
    const WArrow& ar = w.arrow(e);
    rows += h.target.dim(ar.to) * h.source.dim(ar.from);
  }

  Mat sys(rows, unknowns);
  int row = 0;
  for (int e = 0; e < w.arrow_count(); ++e) {
    const WArrow& ar = w.arrow(e);
    const Mat& a = h.source.map(e);
    const Mat& b = h.target.map(e);
    int dmu = h.source.dim(ar.from);
    int dmv = h.source.dim(ar.to);
    int dnu = h.target.dim(ar.from);
    int dnv = h.target.dim(ar.to);
    for (int i = 0; i < dnv; ++i)
      for (int j = 0; j < dmu; ++j) {
        for (int k = 0; k < dmv; ++k)
          sys.at(row, off[static_cast<std::size_t>(ar.to)] + i * dmv + k) += a.at(k, j);
        for (int l = 0; l < dnu; ++l)
          sys.at(row, off[static_cast<std::size_t>(ar.from)] + l * dmu + j) -= b.at(i, l);
        ++row;
      }
  }
  assert(row == rows);

  Mat ns = nullspace(sys);
  for (int c = 0; c < ns.cols(); ++c) {
    std::vector<Mat> comps;
    comps.reserve(static_cast<std::size_t>(w.vertex_count()));
    for (int v = 0; v < w.vertex_count(); ++v) {
      Mat cm(h.target.dim(v), h.source.dim(v));
      int base = off[static_cast<std::size_t>(v)];
      for (int i = 0; i < cm.rows(); ++i)
        for (int j = 0; j < cm.cols(); ++j) cm.at(i, j) = ns.at(base + i * cm.cols() + j, c);
      comps.push_back(std::move(cm));
    }
    h.basis.push_back(std::move(comps));
  }
  return h;
}

int hom_dim(const StableRep& m, const StableRep& n) { return hom_space(m, n).dim(); }

namespace {

// Output tags: the boundary carries the stable data, stabilization no
// later than the inputs'.
std::vector<TailTag> subquotient_tags(const StableRep& rep, const StableRep& m,
                                      const StableRep& n) {
  std::vector<TailTag> tags;
  for (int t = 0; t < static_cast<int>(m.tags.size()); ++t) {
    int b = rep.dims[static_cast<std::size_t>(rep.window.boundary_vertex(t))];
    int stab = std::max(m.tags[static_cast<std::size_t>(t)].stab_depth,
                        n.tags[static_cast<std::size_t>(t)].stab_depth);
    if (b == 0)
      tags.push_back({TagKind::Zero, 0, stab});
    else
      tags.push_back({TagKind::Stable, b, stab});
  }
  return tags;
}

Mat solve_or_die(const Mat& a, const Mat& b) {
  auto x = solve(a, b);
  assert(x.has_value());
  return std::move(*x);
}

}  // namespace

KernelData kernel_of(const RepMorphism& morphism) {
  RepMorphism f = reject_invalid(morphism, "kernel_of");
  const Window& w = f.source.window;
  KernelData k;
  k.rep.window = w;
  std::vector<Mat> basis;
  for (int v = 0; v < w.vertex_count(); ++v) {
    basis.push_back(nullspace(f.comps[static_cast<std::size_t>(v)]));
    k.rep.dims.push_back(basis.back().cols());
  }
  for (int e = 0; e < w.arrow_count(); ++e) {
    const WArrow& ar = w.arrow(e);
    k.rep.maps.push_back(solve_or_die(basis[static_cast<std::size_t>(ar.to)],
                                      f.source.map(e) * basis[static_cast<std::size_t>(ar.from)]));
  }
  k.rep.tags = subquotient_tags(k.rep, f.source, f.target);
  k.rep = minimize_stab(std::move(k.rep));
  assert(check_stable_rep(k.rep).empty());
  k.inclusion = {k.rep, f.source, std::move(basis)};
  return k;
}

ImageData image_of(const RepMorphism& morphism) {
  RepMorphism f = reject_invalid(morphism, "image_of");
  const Window& w = f.source.window;
  ImageData im;
  im.rep.window = w;
  std::vector<Mat> basis;
  std::vector<Mat> onto;
  for (int v = 0; v < w.vertex_count(); ++v) {
    basis.push_back(colspace(f.comps[static_cast<std::size_t>(v)]));
    onto.push_back(solve_or_die(basis.back(), f.comps[static_cast<std::size_t>(v)]));
    im.rep.dims.push_back(basis.back().cols());
  }
  for (int e = 0; e < w.arrow_count(); ++e) {
    const WArrow& ar = w.arrow(e);
    im.rep.maps.push_back(
        solve_or_die(basis[static_cast<std::size_t>(ar.to)],
                     f.target.map(e) * basis[static_cast<std::size_t>(ar.from)]));
  }
  im.rep.tags = subquotient_tags(im.rep, f.source, f.target);
  im.rep = minimize_stab(std::move(im.rep));
  assert(check_stable_rep(im.rep).empty());
  im.inclusion = {im.rep, f.target, std::move(basis)};
  im.projection = {f.source, im.rep, std::move(onto)};
  return im;
}

CokernelData cokernel_of(const RepMorphism& morphism) {
  RepMorphism f = reject_invalid(morphism, "cokernel_of");
  const Window& w = f.source.window;
  CokernelData co;
  co.rep.window = w;
  std::vector<Mat> proj;
  std::vector<Mat> section;
  for (int v = 0; v < w.vertex_count(); ++v) {
    Mat c = colspace(f.comps[static_cast<std::size_t>(v)]);
    int n = c.rows();
    std::vector<int> idx = complement(c);
    Mat e(n, static_cast<int>(idx.size()));
    for (int k = 0; k < e.cols(); ++k) e.at(idx[static_cast<std::size_t>(k)], k) = 1;
    Mat inv = solve_or_die(hstack(n, {c, e}), Mat::identity(n));
    Mat p(e.cols(), n);
    for (int i = 0; i < p.rows(); ++i)
      for (int j = 0; j < n; ++j) p.at(i, j) = inv.at(c.cols() + i, j);
    proj.push_back(std::move(p));
    section.push_back(std::move(e));
    co.rep.dims.push_back(proj.back().rows());
  }
  for (int e = 0; e < w.arrow_count(); ++e) {
    const WArrow& ar = w.arrow(e);
    co.rep.maps.push_back(proj[static_cast<std::size_t>(ar.to)] * f.target.map(e) *
                          section[static_cast<std::size_t>(ar.from)]);
  }
  co.rep.tags = subquotient_tags(co.rep, f.source, f.target);
  co.rep = minimize_stab(std::move(co.rep));
  assert(check_stable_rep(co.rep).empty());
  co.projection = {f.target, co.rep, std::move(proj)};
  return co;
}

MorphismParts morphism_parts(const RepMorphism& f) {
  return {kernel_of(f), image_of(f), cokernel_of(f)};
}

}  // namespace slfq
