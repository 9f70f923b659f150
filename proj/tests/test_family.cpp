#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fk/family.hpp"

using namespace fk;

namespace {

FamilyParams params_g3k6(int n) {
  FamilyParams p;
  p.g = 3;
  p.k = 6;
  p.n = n;
  p.pi = BraidWord::parse(6, "1,2,3,4,5");
  return p;
}

}  // namespace

TEST_CASE("phi and sigma instantiate at g=3 k=6") {
  Family f = build_family(params_g3k6(0));
  CHECK(f.phi.str() == "-2,3,-4,5");
  CHECK(f.phi.strands() == 7);
  CHECK(f.sigma.str() == "1");
  CHECK(exponent_sum(f.phi) == 0);
  CHECK(exponent_sum(f.sigma) == 1);
  CHECK(f.pi_inc.str() == "2,3,4,5,6");
}

TEST_CASE("beta_0 free-reduces to sigma then pi") {
  Family f = build_family(params_g3k6(0));
  BraidWord expect = compose(f.pi_inc, f.sigma);
  CHECK(free_reduce(f.beta_n) == free_reduce(expect));
}

TEST_CASE("phi permutation is a 5-cycle on strands 2..6") {
  Family f = build_family(params_g3k6(1));
  Perm p = underlying_permutation(f.phi);
  CHECK(p[0] == 0);  // strand 1 fixed (0-based)
  auto cycs = p.cycles();
  int big = 0;
  for (auto& c : cycs) big = std::max<int>(big, c.size());
  CHECK(big == 5);
}

TEST_CASE("beta_n permutation is conjugate to the pi sigma permutation") {
  // Sigma and Phi share the strand 2g+2-k, so the Phi^n conjugation moves
  // Sigma's top transposition instead of canceling outright. What does hold:
  // perm(beta_n) = C^n perm(Sigma) C^-n composed with perm(Pi), which is
  // conjugate to perm(Pi Sigma) in the subgroup generated by these, and in
  // particular the closure stays a knot for every n.
  for (int n = 0; n <= 4; ++n) {
    Family f = build_family(params_g3k6(n));
    BraidWord pisig = compose(f.pi_inc, f.sigma);
    Perm c = underlying_permutation(f.phi);
    Perm cn(7);
    for (int i = 0; i < n; ++i) cn = c * cn;
    Perm expected = underlying_permutation(f.pi_inc) *
                    (cn * underlying_permutation(f.sigma) * cn.inverse());
    CHECK(underlying_permutation(f.beta_n) == expected);
    CHECK(underlying_permutation(f.beta_n).is_single_cycle());
    CHECK(underlying_permutation(pisig).is_single_cycle());
    if (n == 0) CHECK(underlying_permutation(f.beta_n) == underlying_permutation(pisig));
  }
}

TEST_CASE("exponent sum of beta_n is n-independent") {
  for (int n = 0; n <= 6; ++n) {
    Family f = build_family(params_g3k6(n));
    CHECK(exponent_sum(f.beta_n) == exponent_sum(f.pi_inc) + exponent_sum(f.sigma));
  }
}

TEST_CASE("beta_n is cyclically reduced for n >= 1") {
  // Phi^n ... Phi^-n do not meet in the flat word; the reducer leaves beta_n
  // unchanged, and destabilization is what removes the conjugating factor.
  Family f = build_family(params_g3k6(2));
  CHECK(cyclic_free_reduce(f.beta_n) == f.beta_n);
}

TEST_CASE("destabilization of beta_n reaches pi") {
  for (int n = 0; n <= 5; ++n) {
    FamilyParams p = params_g3k6(n);
    Family f = build_family(p);
    auto tr = markov_destabilize_closure(f.beta_n);
    CHECK(tr.reaches(p.pi));
    // this particular pi is an unknot word, so the greedy run continues past
    // it and empties the braid
    CHECK(tr.terminal.empty());
  }
}

TEST_CASE("destabilization terminates exactly at irreducible pi") {
  FamilyParams p = params_g3k6(3);
  p.pi = BraidWord::parse(6, "1,1,1,2,3,4,5,5,5");
  REQUIRE(underlying_permutation(p.pi).is_single_cycle());
  REQUIRE(markov_destabilize_closure(p.pi).terminal == p.pi);
  Family f = build_family(p);
  auto tr = markov_destabilize_closure(f.beta_n);
  CHECK(tr.terminal == p.pi);
}

TEST_CASE("parameter validation") {
  FamilyParams p = params_g3k6(0);
  p.k = 5;
  CHECK_THROWS_AS(build_family(p), std::invalid_argument);
  p = params_g3k6(0);
  p.g = 2;  // 2g+1 = 5 < k
  p.pi = BraidWord::parse(6, "1,2,3,4,5");
  CHECK_THROWS_AS(build_family(p), std::invalid_argument);
  p = params_g3k6(0);
  p.pi = BraidWord::parse(6, "1,2,3,4");  // 5-cycle + fixed point: not a knot
  CHECK_THROWS_AS(build_family(p), std::invalid_argument);
}
