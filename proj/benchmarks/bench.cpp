#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "slfq/chains.hpp"
#include "slfq/hom.hpp"
#include "slfq/knit.hpp"
#include "slfq/oracle.hpp"
#include "slfq/rep.hpp"
#include "slfq/walk.hpp"

namespace {

using namespace slfq;

QuiverPresentation zigzag() {
  QuiverPresentation qp;
  qp.core.vertices = {"0"};
  qp.tails.push_back({"0", TailWord("", "IO")});
  return qp;
}

QuiverPresentation coray() {
  QuiverPresentation qp;
  qp.core.vertices = {"c"};
  qp.tails.push_back({"c", TailWord("", "I")});
  return qp;
}

// Path on n vertices, arrow k reversed when bit k-1 of mask is set.
QuiverPresentation path(int n, unsigned mask) {
  QuiverPresentation qp;
  for (int i = 1; i <= n; ++i) qp.core.vertices.push_back(std::to_string(i));
  for (int k = 1; k < n; ++k) {
    std::string a = std::to_string(k), b = std::to_string(k + 1);
    if (mask & (1u << (k - 1))) std::swap(a, b);
    qp.core.arrows.push_back({"a" + std::to_string(k), a, b});
  }
  return qp;
}

unsigned alternating(int n) {
  unsigned m = 0;
  for (int k = 1; k < n; k += 2) m |= 1u << (k - 1);
  return m;
}

// Hom solve between two thin modules carried on a window of R+1 vertices.
void BM_HomSolve(benchmark::State& state) {
  int radius = static_cast<int>(state.range(0));
  QuiverPresentation zz = zigzag();
  StableRep m = extend_rep(
      walk_rep(zz, make_walk(zz, WalkSpec{std::nullopt, {"0"}, 0})), {radius});
  StableRep n = extend_rep(
      walk_rep(zz, make_walk(zz, WalkSpec{std::nullopt, {tail_vertex_name(0, 2)}, 0})),
      {radius});
  for (auto _ : state) benchmark::DoNotOptimize(hom_dim(m, n));
}
BENCHMARK(BM_HomSolve)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

// Brute-force indecomposable catalog of a path quiver.
void BM_CatalogBuild(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  QuiverPresentation qp = path(n, alternating(n));
  for (auto _ : state) {
    IndecomposableCatalog cat = build_catalog(qp);
    benchmark::DoNotOptimize(cat.size());
  }
}
BENCHMARK(BM_CatalogBuild)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

// Full structure-theorem verification over a prebuilt catalog.
void BM_StructureSuite(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  IndecomposableCatalog cat = build_catalog(path(n, alternating(n)));
  for (auto _ : state) {
    auto checks = verify_structure_theorems(cat);
    benchmark::DoNotOptimize(checks.size());
  }
}
BENCHMARK(BM_StructureSuite)->Arg(5)->Arg(6)->Arg(7);

// Mesh knitting depth scaling on the coray staircase.
void BM_KnitDepth(benchmark::State& state) {
  int depth = static_cast<int>(state.range(0));
  QuiverPresentation qp = coray();
  for (auto _ : state) {
    KnittedComponent k = knit_preprojective(qp, depth, depth + 2);
    benchmark::DoNotOptimize(k.present_count());
  }
}
BENCHMARK(BM_KnitDepth)->Arg(8)->Arg(16)->Arg(32);

// Thin-family enumeration radius scaling.
void BM_ThinFamily(benchmark::State& state) {
  int radius = static_cast<int>(state.range(0));
  QuiverPresentation zz = zigzag();
  for (auto _ : state) {
    std::vector<StableRep> fam = thin_family(zz, radius);
    benchmark::DoNotOptimize(fam.size());
  }
}
BENCHMARK(BM_ThinFamily)->Arg(3)->Arg(5)->Arg(7);

// One full neighbor exploration per step count, family rebuild included.
void BM_ChainExplore(benchmark::State& state) {
  int steps = static_cast<int>(state.range(0));
  QuiverPresentation zz = zigzag();
  StableRep m0 = walk_rep(zz, make_walk(zz, WalkSpec{std::nullopt, {"0"}, 0}));
  for (auto _ : state) {
    Chain c = chain_explore(zz, m0, steps);
    benchmark::DoNotOptimize(c.modules.size());
  }
}
BENCHMARK(BM_ChainExplore)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
