#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fk/branched_cover.hpp"
#include "fk/family.hpp"

using namespace fk;

TEST_CASE("standard cover layout") {
  CoverSpec cs = standard_cover(3);
  REQUIRE(cs.branch_points() == 7);
  for (int i = 1; i <= 6; ++i) CHECK(cs.rho[i - 1] == Transposition{1, 2});
  CHECK(cs.rho[6] == Transposition{2, 3});
  CHECK(cs.transitive());
  CHECK(cs.boundary_monodromy() == Perm::transposition(3, 1, 2));  // (2 3)
  CHECK_THROWS_AS(standard_cover(1), std::invalid_argument);
}

TEST_CASE("fiber surface for the standard cover") {
  for (int g = 3; g <= 6; ++g) {
    SurfaceType s = fiber_surface(standard_cover(g));
    CHECK(s.euler() == 2 - 2 * g);
    CHECK(s.boundary == 2);
    CHECK(s.genus == g - 1);
  }
}

TEST_CASE("degenerate one-branch-point cover is rejected as intransitive") {
  CoverSpec cs;
  cs.rho = {Transposition{1, 2}};
  CHECK_FALSE(cs.transitive());
  CHECK_THROWS_AS(fiber_surface(cs), std::invalid_argument);
}

TEST_CASE("gamma preimage splits as a disk plus genus two piece") {
  // gamma encircles the five strands 2g+2-k .. 2g+6-k
  for (int g = 3; g <= 6; ++g) {
    CoverSpec cs = standard_cover(g);
    RoundCurve r{2 * g + 2 - 6, 2 * g + 6 - 6};
    auto rep = preimage_of_round_disk(cs, r);
    REQUIRE(rep.components.size() == 2);
    CHECK_FALSE(rep.touches_distinguished);
    bool saw_disk = false, saw_s21 = false;
    for (const auto& c : rep.components) {
      if (c.sheets == 1 && c.type == SurfaceType{0, 1}) saw_disk = true;
      if (c.sheets == 2 && c.type == SurfaceType{2, 1}) {
        CHECK(c.type.euler() == -3);
        saw_s21 = true;
      }
    }
    CHECK(saw_disk);
    CHECK(saw_s21);
    CHECK(rep.total_sheets() == 3);
    CHECK(rep.total_euler() == 3 - rep.enclosed_branch_points);
  }
}

TEST_CASE("four point intersection disk lifts to disk plus twice punctured torus") {
  CoverSpec cs = standard_cover(3);
  auto rep = preimage_of_round_disk(cs, RoundCurve{2, 5});  // 4 points, all (1 2)
  REQUIRE(rep.components.size() == 2);
  bool saw_disk = false, saw_s12 = false;
  for (const auto& c : rep.components) {
    if (c.type == SurfaceType{0, 1}) saw_disk = true;
    if (c.type == SurfaceType{1, 2}) {
      CHECK(c.type.euler() == -2);
      saw_s12 = true;
    }
  }
  CHECK(saw_disk);
  CHECK(saw_s12);
}

TEST_CASE("single enclosed point gives two disks") {
  CoverSpec cs = standard_cover(3);
  auto rep = preimage_of_interval(cs, 2, 2);
  REQUIRE(rep.components.size() == 2);
  for (const auto& c : rep.components) {
    CHECK(c.type == SurfaceType{0, 1});
    if (c.sheets == 2) CHECK(c.type.euler() == 2 * 1 - 1);
  }
  CHECK(rep.total_sheets() == 3);
}

TEST_CASE("round interval validation") {
  CoverSpec cs = standard_cover(3);
  CHECK_THROWS_AS(preimage_of_round_disk(cs, RoundCurve{5, 9}), std::invalid_argument);
  CHECK_THROWS_AS(preimage_of_round_disk(cs, RoundCurve{4, 4}), std::invalid_argument);
}

TEST_CASE("intervals through the distinguished point are flagged") {
  CoverSpec cs = standard_cover(3);
  auto rep = preimage_of_round_disk(cs, RoundCurve{4, 7});
  CHECK(rep.touches_distinguished);
  CHECK(rep.total_sheets() == 3);
  CHECK(rep.total_euler() == 3 - 4);
}

TEST_CASE("riemann hurwitz audit over all intervals") {
  for (int g = 3; g <= 5; ++g) {
    CoverSpec cs = standard_cover(g);
    const int m = cs.branch_points();
    for (int lo = 1; lo <= m; ++lo)
      for (int hi = lo + 1; hi <= m; ++hi) {
        auto rep = preimage_of_round_disk(cs, RoundCurve{lo, hi});
        CHECK(rep.total_euler() == 3 - rep.enclosed_branch_points);
        CHECK(rep.total_sheets() == 3);
      }
  }
}

TEST_CASE("liftability") {
  CoverSpec cs = standard_cover(3);
  CHECK(braid_lift_check(cs, BraidWord::identity(7)));
  // sigma_i with equal neighboring transpositions lifts
  CHECK(braid_lift_check(cs, BraidWord::gen(7, 1)));
  CHECK(braid_lift_check(cs, BraidWord::gen(7, 5)));
  // the junction generator mixes (1 2) and (2 3); neither it nor its square
  // preserves the sheet labels (the enclosing loop maps to a 3-cycle), while
  // its cube restores them
  CHECK_FALSE(braid_lift_check(cs, BraidWord::gen(7, 6)));
  CHECK_FALSE(braid_lift_check(cs, BraidWord::parse(7, "6,6")));
  CHECK(braid_lift_check(cs, BraidWord::parse(7, "6,6,6")));
  CHECK_THROWS_AS(braid_lift_check(cs, BraidWord::gen(5, 1)), std::invalid_argument);
}

TEST_CASE("the braid family lifts for a tricolorable pi") {
  // sheet labels transport through the braid like a Fox tricoloring; the
  // granny-knot word carries the tuple (3,3,3,3,3,1) back to itself
  for (int n = 0; n <= 3; ++n) {
    FamilyParams p;
    p.g = 3;
    p.k = 6;
    p.n = n;
    p.pi = BraidWord::parse(6, "1,1,1,2,3,4,5,5,5");
    Family f = build_family(p);
    CHECK(braid_lift_check(standard_cover(3), f.beta_n));
  }
}

TEST_CASE("no transitive cover is compatible with an unknot pi") {
  // pi with unknotted closure has cyclic group, so no surjection to S3:
  // the standard cover rejects the family built on it
  FamilyParams p;
  p.g = 3;
  p.k = 6;
  p.n = 1;
  p.pi = BraidWord::parse(6, "1,2,3,4,5");
  Family f = build_family(p);
  CHECK_FALSE(braid_lift_check(standard_cover(3), f.beta_n));
}

TEST_CASE("cover spec serialization") {
  CoverSpec cs = standard_cover(3);
  CHECK(cs.str() == "12,12,12,12,12,12,23");
  CoverSpec back = CoverSpec::parse(cs.str());
  CHECK(back.rho.size() == cs.rho.size());
  for (size_t i = 0; i < cs.rho.size(); ++i) CHECK(back.rho[i] == cs.rho[i]);
}
