#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "slfq/quiver.hpp"
#include "slfq/window.hpp"
#include "support/fixture_quivers.hpp"

using namespace slfq;

namespace {

TailWord random_word(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 4);
  std::uniform_int_distribution<int> plen(1, 4);
  std::uniform_int_distribution<int> bit(0, 1);
  std::string pre, per;
  int n = len(rng), m = plen(rng);
  for (int i = 0; i < n; ++i) pre += bit(rng) ? 'O' : 'I';
  for (int i = 0; i < m; ++i) per += bit(rng) ? 'O' : 'I';
  return TailWord(pre, per);
}

}  // namespace

TEST_CASE("tail word normalization") {
  CHECK(TailWord("O", "O").normal_form() == TailWord("", "O"));
  CHECK(!TailWord("O", "O").normalized());
  CHECK(TailWord("", "OO").normal_form() == TailWord("", "O"));
  CHECK(TailWord("", "OIOI").normal_form() == TailWord("", "OI"));
  CHECK(TailWord("IO", "IO").normal_form() == TailWord("", "IO"));
  CHECK(TailWord("I", "OI").normal_form() == TailWord("", "IO"));
  CHECK(TailWord("OI", "O").normal_form() == TailWord("OI", "O"));
  CHECK(TailWord("", "IO").normalized());

  std::mt19937 rng(31);
  for (int t = 0; t < 300; ++t) {
    TailWord w = random_word(rng);
    TailWord n = w.normal_form();
    CHECK(n.normalized());
    CHECK(n.normal_form() == n);
    // Normalization never changes the infinite word itself.
    for (int d = 1; d <= 24; ++d) CHECK(n.at(d) == w.at(d));
  }
}

TEST_CASE("tail word queries and transforms") {
  TailWord zig("", "IO");
  CHECK(zig.at(1) == Dir::In);
  CHECK(zig.at(2) == Dir::Out);
  CHECK(zig.at(3) == Dir::In);
  CHECK(!zig.eventually_constant());
  CHECK(!zig.eventually_out());
  CHECK(TailWord("", "O").eventually_out());
  CHECK(TailWord("IO", "I").eventually_in());
  CHECK(TailWord("IO", "I").eventually_constant());

  std::mt19937 rng(37);
  for (int t = 0; t < 200; ++t) {
    TailWord w = random_word(rng).normal_form();
    TailWord f = w.flipped();
    CHECK(f.normalized());
    for (int d = 1; d <= 20; ++d) CHECK((f.at(d) == Dir::Out) == (w.at(d) == Dir::In));
    int k = t % 7;
    TailWord s = w.shifted(k);
    CHECK(s.normalized());
    for (int d = 1; d <= 16; ++d) CHECK(s.at(d) == w.at(d + k));
  }
}

TEST_CASE("parse rejects malformed words") {
  CHECK(!TailWord::parse("", "").has_value());
  CHECK(!TailWord::parse("X", "O").has_value());
  CHECK(!TailWord::parse("", "OX").has_value());
  CHECK(TailWord::parse("IO", "O").has_value());
}

TEST_CASE("validation accepts the fixture presentations") {
  for (const auto& qp : {fx::ray(), fx::coray(), fx::zigzag(), fx::example2(), fx::dinf(),
                         fx::figure1_star(), fx::comb()}) {
    ValidationReport r = validate_presentation(qp);
    CHECK(r.valid());
  }
}

TEST_CASE("validation reports violations") {
  QuiverPresentation cyc;
  cyc.core.vertices = {"a", "b"};
  cyc.core.arrows = {{"f", "a", "b"}, {"g", "b", "a"}};
  ValidationReport r = validate_presentation(cyc);
  CHECK(!r.valid());
  CHECK(r.well_formed());
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].find("cycle") != std::string::npos);

  QuiverPresentation nn = fx::ray();
  nn.tails[0].word = TailWord("O", "O");
  r = validate_presentation(nn);
  CHECK(!r.valid());
  CHECK(r.violations[0].find("not normalized") != std::string::npos);

  QuiverPresentation dangle;
  dangle.core.vertices = {"a"};
  dangle.core.arrows = {{"f", "a", "zz"}};
  r = validate_presentation(dangle);
  CHECK(!r.well_formed());
  CHECK(r.structural[0].find("dangling") != std::string::npos);
  CHECK(r.violations.empty());

  QuiverPresentation dup;
  dup.core.vertices = {"a", "a"};
  r = validate_presentation(dup);
  CHECK(!r.valid());
  CHECK(r.violations[0].find("duplicate") != std::string::npos);

  QuiverPresentation missing = fx::ray();
  missing.tails[0].attach = "zz";
  r = validate_presentation(missing);
  CHECK(!r.valid());
  CHECK(r.violations[0].find("attachment") != std::string::npos);

  QuiverPresentation clash = fx::ray();
  clash.core.vertices.push_back("t0d1");
  r = validate_presentation(clash);
  CHECK(!r.valid());
  CHECK(r.violations[0].find("generated") != std::string::npos);

  // The reserved pattern only matters for tails that exist.
  QuiverPresentation fine;
  fine.core.vertices = {"t0d1"};
  CHECK(validate_presentation(fine).valid());
}

TEST_CASE("opposite flips arrows and words") {
  QuiverPresentation o = opposite(fx::example2());
  CHECK(o.tails[0].word == TailWord("", "OI"));
  CHECK(o.tails[1].word == TailWord("", "I"));
  QuiverPresentation oo = opposite(o);
  CHECK(oo.tails[0].word == fx::example2().tails[0].word);

  QuiverPresentation d = opposite(fx::dinf());
  CHECK(d.core.arrows[0].from == "c1");
  CHECK(d.core.arrows[0].to == "c0");
  CHECK(validate_presentation(d).valid());
}

TEST_CASE("window materialization matches the worked shapes") {
  Window ray3 = materialize_window(fx::ray(), 3);
  CHECK(ray3.vertex_count() == 4);
  CHECK(ray3.arrow_count() == 3);
  CHECK(ray3.vertex(ray3.boundary_vertex(0)).name == "t0d3");
  CHECK(ray3.count_paths(ray3.index_of("c"), ray3.boundary_vertex(0)) == 1);

  Window zz4 = materialize_window(fx::zigzag(), 4);
  CHECK(zz4.vertex_count() == 5);
  std::set<std::pair<std::string, std::string>> edges;
  for (int ai = 0; ai < zz4.arrow_count(); ++ai)
    edges.insert({zz4.vertex(zz4.arrow(ai).from).name, zz4.vertex(zz4.arrow(ai).to).name});
  std::set<std::pair<std::string, std::string>> want = {
      {"t0d1", "0"}, {"t0d1", "t0d2"}, {"t0d3", "t0d2"}, {"t0d3", "t0d4"}};
  CHECK(edges == want);

  Window e2 = materialize_window(fx::example2(), std::vector<int>{2, 2});
  CHECK(e2.vertex_count() == 5);
  edges.clear();
  for (int ai = 0; ai < e2.arrow_count(); ++ai)
    edges.insert({e2.vertex(e2.arrow(ai).from).name, e2.vertex(e2.arrow(ai).to).name});
  want = {{"t0d1", "0"}, {"t0d1", "t0d2"}, {"0", "t1d1"}, {"t1d1", "t1d2"}};
  CHECK(edges == want);

  CHECK_THROWS_AS(materialize_window(fx::ray(), 0), std::invalid_argument);
  CHECK_THROWS_AS(materialize_window(fx::example2(), std::vector<int>{2}),
                  std::invalid_argument);
}

TEST_CASE("windows are convex") {
  // Every directed path between window vertices, enumerated on a larger
  // window, stays inside the smaller one.
  for (const auto& qp : {fx::zigzag(), fx::example2(), fx::dinf(), fx::figure1_star(),
                         fx::comb()}) {
    Window small = materialize_window(qp, 3);
    Window big = materialize_window(qp, 6);
    std::set<std::string> inside;
    for (int v = 0; v < small.vertex_count(); ++v) inside.insert(small.vertex(v).name);
    for (int u = 0; u < small.vertex_count(); ++u)
      for (int v = 0; v < small.vertex_count(); ++v) {
        int bu = big.index_of(small.vertex(u).name);
        int bv = big.index_of(small.vertex(v).name);
        for (const auto& path : big.enumerate_paths(bu, bv))
          for (int x : path) CHECK(inside.count(big.vertex(x).name) == 1);
      }
  }
}

TEST_CASE("path counting on the dinf core") {
  Window w = materialize_window(fx::dinf(), 2);
  CHECK(w.count_paths(w.index_of("c0"), w.index_of("c1")) == 1);
  CHECK(w.count_paths(w.index_of("c0"), w.index_of("u")) == 0);
  CHECK(w.count_paths(w.index_of("c0"), w.index_of("t0d2")) == 1);
  CHECK(w.count_paths(w.index_of("u"), w.index_of("u")) == 1);
}

TEST_CASE("reroot preserves the presented quiver") {
  for (const auto& qp : {fx::zigzag(), fx::example2(), fx::comb()}) {
    for (int d = 1; d <= 4; ++d) {
      QuiverPresentation r = reroot(qp, 0, d);
      CHECK(validate_presentation(r).valid());
      // Same shape at matching total depth.
      Window a = materialize_window(qp, 8);
      std::vector<int> rdepths(r.tails.size(), 8);
      rdepths[0] = 8 - d;
      Window b = materialize_window(r, rdepths);
      CHECK(a.vertex_count() == b.vertex_count());
      CHECK(a.arrow_count() == b.arrow_count());
    }
  }
}
