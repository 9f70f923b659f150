#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fk/branched_cover.hpp"
#include "fk/comb.hpp"
#include "fk/lamination.hpp"
#include "fk/trisurface.hpp"

using namespace fk;

TEST_CASE("comb counts and disk topology") {
  for (int m = 2; m <= 7; ++m) {
    Comb comb(m);
    CHECK(comb.triangle_count() == 4 * (m + 1));
    TriSurface s = TriSurface::from_comb(comb);
    CHECK(s.euler_characteristic() == 1);
    CHECK(s.boundary_circles() == 1);
    CHECK(s.marked_count() == m);
  }
}

TEST_CASE("round curve weights match the strip pattern") {
  Comb comb(3);
  TriSurface s = TriSurface::from_comb(comb);
  NormalPath r12 = round_curve_path(comb, s, 1, 2);
  DiskCoords dc = weights_to_coords(comb, path_weights(s, r12));
  std::vector<Int> expect = {1,1,0, 1,1,0, 1,0,1,0, 0,1,1,0, 1,1,0,0};
  CHECK(dc.coords == expect);
  CHECK(dc.str() == "3;1,1,0,1,1,0,1,0,1,0,0,1,1,0,1,1,0,0");
  CHECK(DiskCoords::parse(dc.str()) == dc);
}

TEST_CASE("puncture loop weights") {
  Comb comb(3);
  TriSurface s = TriSurface::from_comb(comb);
  NormalPath loop = puncture_loop_path(comb, s, 2);
  DiskCoords dc = weights_to_coords(comb, path_weights(s, loop));
  std::vector<Int> expect = {0,1,0, 0,1,0, 0,1,1,0, 0,0,1,0, 0,1,0,0};
  CHECK(dc.coords == expect);
}

TEST_CASE("extraction inverts weight counting") {
  for (int m : {3, 5, 7}) {
    Comb comb(m);
    TriSurface s = TriSurface::from_comb(comb);
    for (int lo = 1; lo < m; ++lo)
      for (int hi = lo + 1; hi <= m; ++hi) {
        auto w = path_weights(s, round_curve_path(comb, s, lo, hi));
        REQUIRE(weights_admissible(s, w));
        Multicurve mc = extract_multicurve(s, w);
        REQUIRE(mc.components.size() == 1);
        CHECK(multicurve_weights(s, mc) == w);
      }
    // a union: two disjoint round curves
    if (m >= 5) {
      auto w1 = path_weights(s, round_curve_path(comb, s, 1, 2));
      auto w2 = path_weights(s, round_curve_path(comb, s, 4, 5));
      std::vector<Int> w(w1);
      for (size_t i = 0; i < w.size(); ++i) w[i] += w2[i];
      Multicurve mc = extract_multicurve(s, w);
      CHECK(mc.components.size() == 2);
      CHECK(multicurve_weights(s, mc) == w);
    }
  }
}

TEST_CASE("admissibility checks") {
  Comb comb(3);
  TriSurface s = TriSurface::from_comb(comb);
  std::vector<Int> zero(s.edge_count(), 0);
  CHECK(weights_admissible(s, zero));
  std::vector<Int> w = zero;
  w[comb.edge_id(CombEdge::U, 1)] = 1;  // parity violation
  std::string why;
  CHECK_FALSE(weights_admissible(s, w, &why));
}

TEST_CASE("triple cover topology matches the permutation computation") {
  for (int g = 3; g <= 5; ++g) {
    int m = 2 * g + 1;
    Comb comb(m);
    CoverSpec cs = standard_cover(g);
    TriSurface cover = TriSurface::triple_cover(comb, cs);
    SurfaceType ft = fiber_surface(cs);
    CHECK(cover.euler_characteristic() == ft.euler());
    CHECK(cover.boundary_circles() == ft.boundary);
    CHECK(cover.triangle_count() == 3 * comb.triangle_count());
  }
}

TEST_CASE("branch vertices carry one degree-1 and one degree-2 preimage") {
  int g = 3, m = 7;
  Comb comb(m);
  CoverSpec cs = standard_cover(g);
  TriSurface cover = TriSurface::triple_cover(comb, cs);
  TriSurface base = TriSurface::from_comb(comb);
  // base vertex ids of punctures
  for (int j = 1; j <= m; ++j) {
    int bv = comb.marked_vertex(j);
    std::vector<int> degs;
    for (int v = 0; v < cover.vertex_count(); ++v) {
      const auto& vert = cover.vertex(v);
      if (vert.kind == TriSurface::VertexKind::Boundary) continue;
      // match through base corner bookkeeping
      bool is_preimage = false;
      for (auto [t, c] : vert.corners) {
        int bt = cover.tri(t).base_tri;
        if (comb.triangle(bt).v[c] == bv) is_preimage = true;
      }
      if (is_preimage) degs.push_back(vert.branch_degree);
    }
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{1, 2});
  }
}

TEST_CASE("lifting component counts follow the sheet monodromy") {
  int g = 3, m = 7;
  Comb comb(m);
  CoverSpec cs = standard_cover(g);
  TriSurface cover = TriSurface::triple_cover(comb, cs);
  TriSurface base = TriSurface::from_comb(comb);

  // gamma = round[2..6]: five (1 2) points enclosed; orbits {1,2} and {3}
  Multicurve g26;
  g26.components.push_back(round_curve_path(comb, base, 2, 6));
  Multicurve up = lift_multicurve(cover, comb, cs, g26);
  CHECK(up.components.size() == 2);

  // boundary-parallel curve: enclosed product is (2 3): orbits {1}, {2,3}
  Multicurve all;
  all.components.push_back(round_curve_path(comb, base, 1, 7));
  Multicurve up2 = lift_multicurve(cover, comb, cs, all);
  CHECK(up2.components.size() == 2);

  // a curve with 3-cycle monodromy lifts to a single component:
  // round[6..7] encloses (1 2)(2 3)
  Multicurve r67;
  r67.components.push_back(round_curve_path(comb, base, 6, 7));
  Multicurve up3 = lift_multicurve(cover, comb, cs, r67);
  CHECK(up3.components.size() == 1);
  CHECK(up3.components[0].length() == 3 * r67.components[0].length());
}

TEST_CASE("lifted weights are admissible upstairs") {
  int g = 3, m = 7;
  Comb comb(m);
  CoverSpec cs = standard_cover(g);
  TriSurface cover = TriSurface::triple_cover(comb, cs);
  TriSurface base = TriSurface::from_comb(comb);
  Multicurve mc;
  mc.components.push_back(round_curve_path(comb, base, 2, 6));
  mc.components.push_back(round_curve_path(comb, base, 1, 7));
  Multicurve up = lift_multicurve(cover, comb, cs, mc);
  auto w = multicurve_weights(cover, up);
  CHECK(weights_admissible(cover, w));
  Multicurve re = extract_multicurve(cover, w);
  CHECK(multicurve_weights(cover, re) == w);
  CHECK(re.components.size() == up.components.size());
}

TEST_CASE("cover export text mentions every triangle") {
  Comb comb(5);
  CoverSpec cs;
  for (int i = 0; i < 4; ++i) cs.rho.push_back({1, 2});
  cs.rho.push_back({2, 3});
  TriSurface cover = TriSurface::triple_cover(comb, cs);
  std::string txt = cover.export_text();
  CHECK(txt.find("tri 0 ") != std::string::npos);
  CHECK(txt.find("sheet 3") != std::string::npos);
}
