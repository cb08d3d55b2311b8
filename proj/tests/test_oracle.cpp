#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slfq/oracle.hpp"
#include "support/an_quivers.hpp"
#include "support/fixture_quivers.hpp"

using namespace slfq;
using testsupport::linear_an;

TEST_CASE("catalog enumeration counts") {
  CHECK(build_catalog(linear_an(1)).size() == 1);
  CHECK(build_catalog(linear_an(2)).size() == 3);
  CHECK(build_catalog(linear_an(3)).size() == 6);
  CHECK(build_catalog(linear_an(5, 0b101)).size() == 15);
}

TEST_CASE("catalog scope is linear and tail free") {
  CHECK_THROWS_AS(build_catalog(fx::ray()), std::invalid_argument);
  CHECK_THROWS_AS(build_catalog(linear_an(13)), std::invalid_argument);

  QuiverPresentation star;
  star.core.vertices = {"a", "b", "c", "d"};
  star.core.arrows = {{"x", "a", "b"}, {"y", "a", "c"}, {"z", "a", "d"}};
  CHECK_THROWS_AS(build_catalog(star), std::invalid_argument);

  QuiverPresentation dbl;
  dbl.core.vertices = {"a", "b", "c"};
  dbl.core.arrows = {{"x", "a", "b"}, {"y", "a", "b"}};
  CHECK_THROWS_AS(build_catalog(dbl), std::invalid_argument);
}

TEST_CASE("radical filtration of the linear a3") {
  IndecomposableCatalog cat = build_catalog(linear_an(3));
  RadicalFiltration rf = radical_filtration(cat);
  int p3 = cat.index_of(3, 3);
  int p2 = cat.index_of(2, 3);
  int p1 = cat.index_of(1, 3);
  REQUIRE(p3 >= 0);
  REQUIRE(p2 >= 0);
  REQUIRE(p1 >= 0);
  CHECK(cat.is_projective(p3));
  CHECK(cat.is_projective(p2));
  CHECK(cat.is_projective(p1));

  CHECK(rf.rad[p3][p2] == 1);
  CHECK(rf.rad2[p3][p2] == 0);
  CHECK(rf.arrows[p3][p2] == 1);

  // The composite through P_2 exhausts rad(P_3, P_1).
  CHECK(rf.rad[p3][p1] == 1);
  CHECK(rf.rad2[p3][p1] == 1);
  CHECK(rf.arrows[p3][p1] == 0);

  for (int i = 0; i < cat.size(); ++i) CHECK(rf.arrows[i][i] == 0);

  // Full arrow set of the classical picture.
  int m12 = cat.index_of(1, 2);
  int s1 = cat.index_of(1, 1);
  int s2 = cat.index_of(2, 2);
  std::vector<std::pair<int, int>> expect = {{p3, p2}, {p2, p1}, {p2, s2},
                                             {p1, m12}, {s2, m12}, {m12, s1}};
  int total = 0;
  for (int i = 0; i < cat.size(); ++i)
    for (int j = 0; j < cat.size(); ++j) total += rf.arrows[i][j];
  CHECK(total == static_cast<int>(expect.size()));
  for (auto [i, j] : expect) CHECK(rf.arrows[i][j] == 1);
}

TEST_CASE("almost split sequences match the classical meshes") {
  IndecomposableCatalog a3 = build_catalog(linear_an(3));
  AlmostSplitSequence s = almost_split_sequence_ending_at(a3, a3.index_of(2, 2));
  CHECK(s.left == a3.index_of(3, 3));
  CHECK(s.middle == std::vector<int>{a3.index_of(2, 3)});
  CHECK(is_mono(s.to_middle));
  CHECK(is_epi(s.from_middle));
  CHECK(is_zero_morphism(compose(s.from_middle, s.to_middle)));

  // Two-summand mesh in the middle of the triangle.
  AlmostSplitSequence t = almost_split_sequence_ending_at(a3, a3.index_of(1, 2));
  CHECK(t.left == a3.index_of(2, 3));
  CHECK(t.middle == std::vector<int>{a3.index_of(1, 3), a3.index_of(2, 2)});
  for (int v = 0; v < t.middle_rep.window.vertex_count(); ++v)
    CHECK(t.middle_rep.dim(v) ==
          a3.modules[t.left].rep.dim(v) + a3.modules[t.right].rep.dim(v));

  IndecomposableCatalog a2 = build_catalog(linear_an(2));
  AlmostSplitSequence u = almost_split_sequence_ending_at(a2, a2.index_of(1, 1));
  CHECK(u.left == a2.index_of(2, 2));
  CHECK(u.middle == std::vector<int>{a2.index_of(1, 2)});

  CHECK_THROWS_AS(almost_split_sequence_ending_at(a3, a3.index_of(1, 3)),
                  std::invalid_argument);
}

TEST_CASE("irreducibility certification") {
  IndecomposableCatalog a3 = build_catalog(linear_an(3));
  int p3 = a3.index_of(3, 3);
  int p2 = a3.index_of(2, 3);
  int p1 = a3.index_of(1, 3);

  CHECK(certify_irreducible(a3, a3.hom[p3][p2].at(0)));
  CHECK(!certify_irreducible(a3, a3.hom[p3][p1].at(0)));
  CHECK(!certify_irreducible(a3, identity_morphism(a3.modules[p2].rep)));
  CHECK(!certify_irreducible(a3, zero_morphism(a3.modules[p3].rep, a3.modules[p2].rep)));

  // Ends must be catalog intervals.
  StableRep dbl = direct_sum(a3.modules[p3].rep, a3.modules[p3].rep);
  CHECK_THROWS_AS(certify_irreducible(a3, zero_morphism(dbl, a3.modules[p2].rep)),
                  std::invalid_argument);
}

TEST_CASE("structure theorem reports come back clean") {
  for (int n = 1; n <= 5; ++n) {
    for (unsigned mask = 0; mask < (1u << (n > 1 ? n - 1 : 0)); ++mask) {
      IndecomposableCatalog cat = build_catalog(linear_an(n, mask));
      std::vector<CheckResult> report = verify_structure_theorems(cat);
      CAPTURE(n);
      CAPTURE(mask);
      for (const CheckResult& c : report) {
        CAPTURE(c.name);
        CHECK(c.violations.empty());
      }
      CHECK(report_clean(report));
    }
  }

  IndecomposableCatalog a8 = build_catalog(linear_an(8, 0b0110101));
  std::vector<CheckResult> report = verify_structure_theorems(a8);
  CHECK(report_clean(report));
  std::string text = report_to_json_text(report);
  CHECK(text.find("\"checks\"") != std::string::npos);
  CHECK(text.find("\"violations\": []") != std::string::npos);
  CHECK(text.find("almost_split_sequences") != std::string::npos);
}

TEST_CASE("tau and arrow counts across orientations") {
  // Every orientation of A_4: 10 modules, 4 projectives, 4 injectives,
  // 6 almost split sequences, AR quiver acyclic with n(n+1)/2 vertices.
  for (unsigned mask = 0; mask < 8; ++mask) {
    IndecomposableCatalog cat = build_catalog(linear_an(4, mask));
    CHECK(cat.size() == 10);
    RadicalFiltration rf = radical_filtration(cat);
    int non_proj = 0;
    for (int k = 0; k < cat.size(); ++k)
      if (!cat.is_projective(k)) ++non_proj;
    CHECK(non_proj == 6);
    for (int k = 0; k < cat.size(); ++k) {
      if (cat.is_projective(k)) continue;
      AlmostSplitSequence s = almost_split_sequence_ending_at(cat, k);
      // Mesh additivity pins tau by dimension arithmetic.
      for (int v = 0; v < s.middle_rep.window.vertex_count(); ++v) {
        int middle_dim = 0;
        for (int m : s.middle) middle_dim += cat.modules[m].rep.dim(v);
        CHECK(cat.modules[s.left].rep.dim(v) + cat.modules[s.right].rep.dim(v) == middle_dim);
      }
    }
  }
}
