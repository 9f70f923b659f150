#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fk/comb.hpp"
#include "fk/oracle.hpp"

using namespace fk;

TEST_CASE("disjoint and interleaved round curves") {
  OracleCurve a = OracleCurve::round_curve(5, 1, 2);
  OracleCurve b = OracleCurve::round_curve(5, 4, 5);
  CHECK(oracle_intersection(a, b) == 0);

  OracleCurve c = OracleCurve::round_curve(3, 1, 2);
  OracleCurve d = OracleCurve::round_curve(3, 2, 3);
  CHECK(oracle_intersection(c, d) == 2);

  // nested intervals are disjoint classes
  OracleCurve e = OracleCurve::round_curve(4, 1, 3);
  CHECK(oracle_intersection(OracleCurve::round_curve(4, 1, 2), e) == 0);
  CHECK(oracle_intersection(OracleCurve::round_curve(4, 2, 3), e) == 0);
}

TEST_CASE("identity word returns the same class") {
  Comb comb(3);
  OracleCurve a = OracleCurve::round_curve(3, 2, 3);
  OracleCurve img = oracle_apply(a, BraidWord::identity(3));
  CHECK(img.comb_coords(comb) == a.comb_coords(comb));
}

TEST_CASE("twist about itself fixes the round curve") {
  Comb comb(3);
  OracleCurve a = OracleCurve::round_curve(3, 1, 2);
  OracleCurve img = oracle_apply(a, BraidWord::gen(3, 1));
  CHECK(img.comb_coords(comb) == a.comb_coords(comb));
  // and the square of the generator too (a Dehn twist about it)
  OracleCurve img2 = oracle_apply(a, BraidWord::parse(3, "1,1"));
  CHECK(img2.comb_coords(comb) == a.comb_coords(comb));
}

TEST_CASE("sigma_1 on round [2..3] lands on a class meeting round [1..2] twice") {
  OracleCurve a = OracleCurve::round_curve(3, 2, 3);
  OracleCurve img = oracle_apply(a, BraidWord::gen(3, 1));
  CHECK(oracle_intersection(img, OracleCurve::round_curve(3, 1, 2)) == 2);
  // the generator moves punctures 1,2 only, so the image still meets
  // round[2..3]'s class in i(s1(r23), r23) = i(r23, s1^-1(r23)) crossings
  OracleCurve back = oracle_apply(a, BraidWord::gen(3, 1, -1));
  CHECK(oracle_intersection(img, a) == oracle_intersection(a, back));
}

TEST_CASE("inverse composes to the identity on classes") {
  Comb comb(4);
  OracleCurve a = OracleCurve::round_curve(4, 2, 3);
  for (const char* w : {"1", "-2", "3,1", "1,-3,2"}) {
    BraidWord word = BraidWord::parse(4, w);
    OracleCurve img = oracle_apply(oracle_apply(a, word), invert(word));
    CHECK(img.comb_coords(comb) == a.comb_coords(comb));
  }
}

TEST_CASE("braid relation acts identically on classes") {
  Comb comb(3);
  OracleCurve a = OracleCurve::round_curve(3, 1, 2);
  OracleCurve lhs = oracle_apply(a, BraidWord::parse(3, "1,2,1"));
  OracleCurve rhs = oracle_apply(a, BraidWord::parse(3, "2,1,2"));
  CHECK(lhs.comb_coords(comb) == rhs.comb_coords(comb));
}

TEST_CASE("far commutation") {
  Comb comb(5);
  OracleCurve a = OracleCurve::round_curve(5, 2, 4);
  OracleCurve lhs = oracle_apply(a, BraidWord::parse(5, "1,4"));
  OracleCurve rhs = oracle_apply(a, BraidWord::parse(5, "4,1"));
  CHECK(lhs.comb_coords(comb) == rhs.comb_coords(comb));
}

TEST_CASE("intersection is a homeomorphism invariant") {
  OracleCurve a = OracleCurve::round_curve(4, 1, 2, 1);
  OracleCurve b = OracleCurve::round_curve(4, 2, 3, 2);
  long long base = oracle_intersection(a, b);
  CHECK(base == 2);
  for (const char* w : {"1", "2,-1", "3,2,1"}) {
    BraidWord word = BraidWord::parse(4, w);
    OracleCurve ia = oracle_apply(a, word);
    OracleCurve ib = oracle_apply(b, word);
    CHECK(oracle_intersection(ia, ib) == base);
  }
}

TEST_CASE("dehn twist powers grow linearly in intersections") {
  // i(T^k(b), b) = |k| i(a,b)^2 for the twist about a = round[1..2]
  OracleCurve b = OracleCurve::round_curve(3, 2, 3);
  for (int k = 1; k <= 3; ++k) {
    BraidWord tw = BraidWord::parse(3, "1,1").pow(k);
    OracleCurve img = oracle_apply(b, tw);
    CHECK(oracle_intersection(img, b) == 4 * k);
  }
}

TEST_CASE("cell word of a round curve") {
  OracleCurve a = OracleCurve::round_curve(3, 1, 2);
  auto w = a.cell_word();
  // crossings: U1 U2 A2 L2 L1 A0 in cyclic order (up to rotation/reflection)
  CHECK(w.size() == 6);
  int u = 0, l = 0, ax = 0;
  for (auto& s : w) (s[0] == 'U' ? u : s[0] == 'L' ? l : ax) += 1;
  CHECK(u == 2);
  CHECK(l == 2);
  CHECK(ax == 2);
}

TEST_CASE("comb coords agree with the traced normal form") {
  for (int m : {3, 4, 5}) {
    Comb comb(m);
    TriSurface s = TriSurface::from_comb(comb);
    for (int lo = 1; lo < m; ++lo)
      for (int hi = lo + 1; hi <= m; ++hi) {
        OracleCurve oc = OracleCurve::round_curve(m, lo, hi);
        DiskCoords expect = weights_to_coords(comb, path_weights(s, round_curve_path(comb, s, lo, hi)));
        CHECK(oc.comb_coords(comb) == expect);
      }
  }
}

TEST_CASE("region census: the filling pair in the three punctured disk") {
  OracleCurve a = OracleCurve::round_curve(3, 1, 2);
  OracleCurve b = OracleCurve::round_curve(3, 2, 3);
  auto regions = oracle_region_census(a, b);
  REQUIRE(regions.size() == 4);
  int outer = 0;
  for (const auto& r : regions) {
    int load = static_cast<int>(r.punctures.size()) + (r.outer ? 1 : 0);
    CHECK(load == 1);
    if (r.outer) ++outer;
  }
  CHECK(outer == 1);
  CHECK(oracle_fills(a, b));
}

TEST_CASE("disjoint curves never fill") {
  OracleCurve a = OracleCurve::round_curve(5, 1, 2);
  OracleCurve b = OracleCurve::round_curve(5, 4, 5);
  CHECK_FALSE(oracle_fills(a, b));
  // equal classes neither
  OracleCurve a2 = OracleCurve::round_curve(5, 1, 2, 3);
  CHECK_FALSE(oracle_fills(a, a2));
}

TEST_CASE("band arithmetic") {
  BandArcData d;
  d.k = 5;
  d.m_arcs = 3;
  d.n_out = 4;
  d.slope = BandArcData::Positive;
  CHECK(band_intersection_count(d) == 12);
  d.slope = BandArcData::Negative;
  CHECK(band_intersection_count(d) == 6);
  BandArcData v;
  v.k = 7;
  v.slope = BandArcData::VerticalOnly;
  CHECK(band_intersection_count(v) == 7);
  BandArcData bad;
  bad.k = 1;
  bad.m_arcs = 2;
  CHECK_THROWS_AS(band_intersection_count(bad), std::invalid_argument);
}

TEST_CASE("budget refusal") {
  OracleCurve a = OracleCurve::round_curve(3, 1, 2);
  OracleBudget tight;
  tight.max_vertices = 10;
  CHECK_THROWS_AS(oracle_apply(a, BraidWord::parse(3, "1,2,1,2"), tight), std::runtime_error);
}
