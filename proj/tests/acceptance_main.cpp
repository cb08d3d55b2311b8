// Acceptance battery: nine criteria, one PASS/FAIL line each on stdout,
// diagnostics on stderr, exit 0 only when every criterion holds. Budgets
// are wall-clock seconds pinned next to each criterion.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "slfq/chains.hpp"
#include "slfq/classify.hpp"
#include "slfq/inventory.hpp"
#include "slfq/knit.hpp"
#include "slfq/oracle.hpp"
#include "slfq/status.hpp"
#include "slfq/walk.hpp"
#include "support/an_quivers.hpp"
#include "support/fixture_quivers.hpp"
#include "support/random_reps.hpp"

using namespace slfq;
using testsupport::linear_an;

namespace {

int current_criterion = 0;
bool current_ok = true;

bool req(bool cond, const std::string& msg) {
  if (!cond) {
    current_ok = false;
    std::cerr << "criterion " << current_criterion << ": " << msg << "\n";
  }
  return cond;
}

StableRep zz_m(const QuiverPresentation& zz, int i) {
  std::string start = i == 0 ? "0" : tail_vertex_name(0, i);
  return walk_rep(zz, make_walk(zz, WalkSpec{std::nullopt, {start}, 0}));
}

StableRep e2_m(const QuiverPresentation& e2, int i) {
  std::vector<std::string> verts;
  for (int j = i; j <= 0 && i <= 0; ++j)
    verts.push_back(j == 0 ? "0" : tail_vertex_name(1, -j));
  if (i > 0) verts.push_back(tail_vertex_name(0, i));
  return walk_rep(e2, make_walk(e2, WalkSpec{std::nullopt, verts, 0}));
}

StableRep e2_minf(const QuiverPresentation& e2) {
  return walk_rep(e2, make_walk(e2, WalkSpec{1, {"0"}, 0}));
}

// Emitted chains are kept for criteria 7 and 9.
std::optional<Chain> example1_chain;
std::optional<Chain> example2_chain_from_minf;
std::optional<Chain> example2_chain_from_m0;

// Per-catalog oracle suite results are kept for criteria 6, 7 and 9.
struct OracleRun {
  std::string label;
  std::vector<CheckResult> checks;
};
std::vector<OracleRun> oracle_runs;

// -------------------------------------------------------------------------
// 1. Classification battery over the seven shipped fixtures. Budget 1 s.

bool criterion1() {
  struct Row {
    QuiverPresentation qp;
    const char* name;
    bool star, sourced, sinked;
    Dynkin dynkin;
  };
  std::vector<Row> rows = {
      {fx::ray(), "ray", true, true, false, Dynkin::AInf},
      {fx::coray(), "coray", true, false, true, Dynkin::AInf},
      {fx::zigzag(), "zigzag", false, false, false, Dynkin::AInf},
      {fx::example2(), "example2", false, true, false, Dynkin::AInfInf},
      {fx::dinf(), "dinf", true, true, false, Dynkin::DInf},
      {fx::figure1_star(), "figure1_star", true, true, true, Dynkin::NotInfiniteDynkin},
      {fx::comb(), "comb", false, false, false, Dynkin::NotInfiniteDynkin},
  };
  for (const Row& r : rows) {
    ClassificationReport c = classify_quiver(r.qp);
    req(c.is_star == r.star, std::string(r.name) + ": star flag");
    req(c.dynkin == r.dynkin, std::string(r.name) + ": dynkin type");
    req(c.has_infinite_sourced_paths == r.sourced, std::string(r.name) + ": sourced flag");
    req(c.has_infinite_sinked_paths == r.sinked, std::string(r.name) + ": sinked flag");
  }
  return current_ok;
}

// -------------------------------------------------------------------------
// 2. Inventory invariant table on the same fixtures. Budget 1 s.

bool criterion2() {
  for (const QuiverPresentation& qp : testsupport::fixture_list()) {
    ClassificationReport c = classify_quiver(qp);
    ComponentInventory inv = component_inventory(qp);
    req(inv.preprojective_full == !c.has_infinite_sourced_paths, "preprojective rule");
    req(inv.preinjective_full == !c.has_infinite_sinked_paths, "preinjective rule");
    req(inv.linear_components == !c.is_star, "linear component rule");
    WingCount want = WingCount::Omega;
    if (c.dynkin == Dynkin::AInf) want = WingCount::Zero;
    if (c.dynkin == Dynkin::DInf) want = WingCount::One;
    if (c.dynkin == Dynkin::AInfInf) want = WingCount::Two;
    req(inv.quasi_wings == want, "wing count per Dynkin type");
    req(inv.wing_constraints.right_infinite == c.has_infinite_sinked_paths,
        "right-infinite wing rule");
    req(inv.wing_constraints.left_infinite == c.has_infinite_sourced_paths,
        "left-infinite wing rule");
    req(inv.wing_constraints.finite ==
            (c.has_infinite_sourced_paths && c.has_infinite_sinked_paths),
        "finite wing rule");
  }
  return current_ok;
}

// -------------------------------------------------------------------------
// 3. Example 1: hom table of M_0..M_10 and the chain through M_0.
//    dim Hom(M_i, M_j) = 1 exactly when the displayed chain
//    ... -> M_4 -> M_2 -> M_0 -> M_1 -> M_3 -> ... has a directed path
//    from M_i to M_j, 0 otherwise. Budget 5 s.

bool expect_hom(int i, int j) {
  if (i == j) return true;
  bool ie = i % 2 == 0, je = j % 2 == 0;
  if (ie && je) return j < i;
  if (ie && !je) return true;
  if (!ie && !je) return j > i;
  return false;
}

bool criterion3() {
  QuiverPresentation zz = fx::zigzag();
  std::vector<StableRep> m;
  for (int i = 0; i <= 10; ++i) m.push_back(zz_m(zz, i));
  for (int i = 0; i <= 10; ++i)
    for (int j = 0; j <= 10; ++j) {
      int want = expect_hom(i, j) ? 1 : 0;
      int got = hom_dim(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)]);
      req(got == want, "dim Hom(M_" + std::to_string(i) + ", M_" + std::to_string(j) +
                           ") = " + std::to_string(got) + ", expected " +
                           std::to_string(want));
    }

  Chain c = chain_explore(zz, m[0], 2);
  bool shape = req(c.modules.size() == 5 && c.seed_index == 2 &&
                       c.left_stop == ChainStop::StepLimit &&
                       c.right_stop == ChainStop::StepLimit,
                   "chain from M_0 must be five modules around seed index 2");
  if (shape) {
    int want[5] = {4, 2, 0, 1, 3};
    for (int k = 0; k < 5; ++k)
      req(is_isomorphic(c.modules[static_cast<std::size_t>(k)],
                        m[static_cast<std::size_t>(want[k])]),
          "chain slot " + std::to_string(k) + " must be M_" + std::to_string(want[k]));
  }
  if (current_ok) example1_chain = std::move(c);
  return current_ok;
}

// -------------------------------------------------------------------------
// 4. Example 2: the chain from the everywhere-supported module stops
//    rightward at it, the chain from M_0 crosses onto the descending ray,
//    and within the thin family is_in_rrep is false exactly on the M's.
//    Budget 5 s.

bool criterion4() {
  QuiverPresentation e2 = fx::example2();
  StableRep minf = e2_minf(e2);

  Chain c1 = chain_explore(e2, minf, 2);
  bool s1 = req(c1.modules.size() == 3 && c1.seed_index == 2 &&
                    c1.right_stop == ChainStop::NoNeighbor,
                "chain from the full module must stop rightward with two members left");
  if (s1) {
    req(is_isomorphic(c1.modules[0], e2_m(e2, 4)), "slot 0 must be M_4");
    req(is_isomorphic(c1.modules[1], e2_m(e2, 2)), "slot 1 must be M_2");
    req(is_isomorphic(c1.modules[2], minf), "slot 2 must be the full module");
  }

  Chain c2 = chain_explore(e2, e2_m(e2, 0), 2);
  bool s2 = req(c2.modules.size() == 5 && c2.seed_index == 2 &&
                    c2.left_stop == ChainStop::StepLimit &&
                    c2.right_stop == ChainStop::StepLimit,
                "chain from M_0 must be five modules around seed index 2");
  if (s2) {
    int want[5] = {-2, -1, 0, 1, 3};
    for (int k = 0; k < 5; ++k)
      req(is_isomorphic(c2.modules[static_cast<std::size_t>(k)],
                        e2_m(e2, want[k])),
          "chain slot " + std::to_string(k) + " must be M_" + std::to_string(want[k]));
  }

  std::vector<StableRep> fam = thin_family(e2, 4);
  std::vector<StableRep> expect;
  for (int i = -4; i <= 4; ++i) expect.push_back(e2_m(e2, i));
  expect.push_back(minf);
  int outside = 0;
  for (const StableRep& f : fam) {
    if (is_in_rrep(f)) {
      for (const StableRep& e : expect)
        req(!is_isomorphic(f, e), "an expected module was marked rrep");
      continue;
    }
    ++outside;
    int hits = 0;
    for (const StableRep& e : expect)
      if (is_isomorphic(f, e)) ++hits;
    req(hits == 1, "non-rrep family member is not one of the M's");
  }
  req(outside == static_cast<int>(expect.size()),
      "non-rrep count " + std::to_string(outside) + ", expected " +
          std::to_string(expect.size()));

  if (current_ok) {
    example2_chain_from_minf = std::move(c1);
    example2_chain_from_m0 = std::move(c2);
  }
  return current_ok;
}

// -------------------------------------------------------------------------
// 5. Knitting equals the brute-force AR quiver on every orientation of the
//    path on n vertices, n = 2..8. Budget 30 s.

bool knit_matches_oracle(const QuiverPresentation& qp, const std::string& label) {
  IndecomposableCatalog cat = build_catalog(qp);
  RadicalFiltration rf = radical_filtration(cat);
  KnittedComponent k = knit_preprojective(qp, cat.size(), 0);
  if (!req(k.fully_resolved(), label + ": knit left unresolved cells")) return false;
  if (!req(k.present_count() == cat.size(),
           label + ": present count " + std::to_string(k.present_count()) +
               ", oracle " + std::to_string(cat.size())))
    return false;

  std::vector<int> cat_of(k.vertices.size(), -1);
  std::set<int> seen;
  for (std::size_t idx = 0; idx < k.vertices.size(); ++idx) {
    const KnitVertex& kv = k.vertices[idx];
    if (kv.state != KnitState::Present) continue;
    int ci = cat.index_with_dims(kv.dims);
    if (!req(ci >= 0, label + ": knitted dimension vector not in the catalog"))
      return false;
    if (!req(!seen.count(ci), label + ": repeated dimension vector")) return false;
    seen.insert(ci);
    cat_of[idx] = ci;
  }
  std::set<std::pair<int, int>> knit_arrows, oracle_arrows;
  for (const KnitArrow& a : k.arrows)
    knit_arrows.insert({cat_of[static_cast<std::size_t>(a.from)],
                        cat_of[static_cast<std::size_t>(a.to)]});
  for (int i = 0; i < cat.size(); ++i)
    for (int j = 0; j < cat.size(); ++j)
      if (rf.arrows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] > 0)
        oracle_arrows.insert({i, j});
  return req(knit_arrows == oracle_arrows, label + ": arrow sets differ");
}

bool criterion5() {
  for (int n = 2; n <= 8; ++n)
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask)
      knit_matches_oracle(linear_an(n, mask),
                          "A_" + std::to_string(n) + " mask " + std::to_string(mask));
  return current_ok;
}

// -------------------------------------------------------------------------
// 6. Theorem-1 suite over the oracle catalogs: every n <= 7 orientation
//    plus a deterministic sample of A_8 orientations. No budget.

const std::vector<unsigned>& a8_sample() {
  static std::vector<unsigned> s = {0u, 0x7Fu, 0x55u, 0x2Au, 0x49u, 0x36u, 0x11u, 0x6Du};
  return s;
}

void run_oracle_suites() {
  if (!oracle_runs.empty()) return;
  for (int n = 2; n <= 7; ++n)
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      QuiverPresentation qp = linear_an(n, mask);
      oracle_runs.push_back({"A_" + std::to_string(n) + " mask " + std::to_string(mask),
                             verify_structure_theorems(build_catalog(qp))});
    }
  for (unsigned mask : a8_sample()) {
    QuiverPresentation qp = linear_an(8, mask);
    oracle_runs.push_back({"A_8 mask " + std::to_string(mask),
                           verify_structure_theorems(build_catalog(qp))});
  }
}

bool check_names_clean(const std::vector<std::string>& names) {
  for (const OracleRun& run : oracle_runs)
    for (const CheckResult& c : run.checks) {
      bool relevant = false;
      for (const std::string& n : names)
        if (c.name == n) relevant = true;
      if (!relevant) continue;
      req(c.instances > 0, run.label + ": check " + c.name + " ran no instances");
      for (const std::string& v : c.violations)
        req(false, run.label + ": " + c.name + ": " + v);
    }
  return current_ok;
}

bool criterion6() {
  run_oracle_suites();
  return check_names_clean({"almost_split_sequences", "end_term_status", "tau_bijection"});
}

// -------------------------------------------------------------------------
// 7. Irreducible morphism statuses over the catalogs plus the Example-1
//    chain maps: monos have fg and (indecomposable source) fp cokernels,
//    epis dually. No budget.

bool criterion7() {
  run_oracle_suites();
  check_names_clean(
      {"irreducible_certification", "irreducible_mono_epi_parts", "irreducible_composites"});

  if (!req(example1_chain.has_value(), "criterion 3 chain unavailable"))
    return current_ok;
  const Chain& c = *example1_chain;
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    const RepMorphism& f = c.maps[i];
    std::string label = "example 1 chain map " + std::to_string(i);
    req(is_indecomposable(f.source), label + ": source must be indecomposable");
    if (is_mono(f)) {
      StatusFlags s = presentation_status(cokernel_of(f).rep);
      req(s.fg, label + ": mono needs fg cokernel");
      req(s.fp, label + ": mono with indecomposable source needs fp cokernel");
    } else if (is_epi(f)) {
      StatusFlags s = presentation_status(kernel_of(f).rep);
      req(s.fcg, label + ": epi needs fcg kernel");
      req(s.fcp, label + ": epi with indecomposable target needs fcp kernel");
    } else {
      req(false, label + ": chain map neither mono nor epi");
    }
  }
  return current_ok;
}

// -------------------------------------------------------------------------
// 8. Randomized property suite, at least 200 representations across the
//    fixtures: duality round trip with flag exchange, Yoneda dimensions,
//    invariance under +3 window enlargement, and dimension additivity of
//    computed kernel/image/cokernel sequences. Budget 60 s.

bool criterion8() {
  std::vector<QuiverPresentation> fixtures = testsupport::fixture_list();
  int total = 0;
  int sequences = 0;
  for (std::size_t fi = 0; fi < fixtures.size(); ++fi) {
    const QuiverPresentation& qp = fixtures[fi];
    std::mt19937 rng(1000u + static_cast<unsigned>(fi));
    for (int t = 0; t < 30; ++t) {
      ++total;
      StableRep m = testsupport::random_rep(qp, rng);
      std::string label = "fixture " + std::to_string(fi) + " rep " + std::to_string(t);

      StableRep d = dualize(m);
      req(is_isomorphic(dualize(d), m), label + ": DD(M) must be isomorphic to M");
      StatusFlags fm = presentation_status(m);
      StatusFlags fd = presentation_status(d);
      req(fd.fg == fm.fcg && fd.fcg == fm.fg && fd.fp == fm.fcp && fd.fcp == fm.fp,
          label + ": duality must exchange fg/fcg and fp/fcp");

      std::vector<std::string> probes = qp.core.vertices;
      for (int tl = 0; tl < static_cast<int>(qp.tails.size()); ++tl)
        probes.push_back(tail_vertex_name(tl, 1));
      std::vector<int> yoneda;
      for (const std::string& a : probes) {
        int dim_at = m.dim(m.window.index_of(a));
        int hom = hom_dim(projective_at(qp, a), m);
        yoneda.push_back(hom);
        req(hom == dim_at, label + ": dim Hom(P_" + a + ", M) = " + std::to_string(hom) +
                               ", dim M(" + a + ") = " + std::to_string(dim_at));
      }

      std::vector<int> grown = m.window.depths();
      for (int& x : grown) x += 3;
      StableRep e = extend_rep(m, grown);
      req(presentation_status(e) == fm, label + ": status flags changed under +3 window");
      req(is_in_rrep(e) == is_in_rrep(m), label + ": rrep flag changed under +3 window");
      req(is_indecomposable(e) == is_indecomposable(m),
          label + ": indecomposability changed under +3 window");
      for (std::size_t p = 0; p < probes.size(); ++p)
        req(hom_dim(projective_at(qp, probes[p]), e) == yoneda[p],
            label + ": Yoneda dimension changed under +3 window");

      StableRep n = testsupport::random_rep(qp, rng);
      HomSpace hs = hom_space(m, n);
      if (hs.dim() == 0) continue;
      ++sequences;
      RepMorphism f = hs.at(0);
      StableRep ker = kernel_of(f).rep;
      StableRep img = image_of(f).rep;
      StableRep cok = cokernel_of(f).rep;
      for (int v = 0; v < f.source.window.vertex_count(); ++v) {
        req(ker.dim(v) + img.dim(v) == f.source.dim(v),
            label + ": kernel/image additivity at vertex " + std::to_string(v));
        req(img.dim(v) + cok.dim(v) == f.target.dim(v),
            label + ": image/cokernel additivity at vertex " + std::to_string(v));
      }
    }
  }
  req(total >= 200, "fewer than 200 randomized representations");
  req(sequences >= 50, "only " + std::to_string(sequences) +
                           " exact sequences exercised, wanted at least 50");
  return current_ok;
}

// -------------------------------------------------------------------------
// 9. No repeated isomorphism class along the oracle AR quivers or any
//    emitted chain. No budget.

bool criterion9() {
  run_oracle_suites();
  check_names_clean({"ar_quiver_acyclic"});

  std::vector<const Chain*> chains;
  if (example1_chain) chains.push_back(&*example1_chain);
  if (example2_chain_from_minf) chains.push_back(&*example2_chain_from_minf);
  if (example2_chain_from_m0) chains.push_back(&*example2_chain_from_m0);
  req(chains.size() == 3, "not every emitted chain is available");
  for (const Chain* c : chains)
    for (std::size_t i = 0; i < c->modules.size(); ++i)
      for (std::size_t j = i + 1; j < c->modules.size(); ++j)
        req(!is_isomorphic(c->modules[i], c->modules[j]),
            "chain repeats an isomorphism class");
  return current_ok;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    bool (*run)();
    double budget_s;  // 0 = no budget
  };
  std::vector<Entry> plan = {
      {1, criterion1, 1.0}, {2, criterion2, 1.0},  {3, criterion3, 5.0},
      {4, criterion4, 5.0}, {5, criterion5, 30.0}, {6, criterion6, 0.0},
      {7, criterion7, 0.0}, {8, criterion8, 60.0}, {9, criterion9, 0.0},
  };

  bool all_ok = true;
  for (const Entry& e : plan) {
    current_criterion = e.id;
    current_ok = true;
    auto t0 = std::chrono::steady_clock::now();
    try {
      e.run();
    } catch (const std::exception& ex) {
      current_ok = false;
      std::cerr << "criterion " << e.id << ": exception: " << ex.what() << "\n";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (e.budget_s > 0 && secs > e.budget_s) {
      current_ok = false;
      std::cerr << "criterion " << e.id << ": took " << secs << " s, budget " << e.budget_s
                << " s\n";
    }
    std::fprintf(stderr, "criterion %d finished in %.2f s\n", e.id, secs);
    std::cout << "CRITERION " << e.id << ": " << (current_ok ? "PASS" : "FAIL") << "\n"
              << std::flush;
    all_ok = all_ok && current_ok;
  }
  return all_ok ? 0 : 1;
}
