#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fk/braid.hpp"

using namespace fk;

namespace {

BraidWord random_word(std::mt19937_64& rng, int strands, int len) {
  std::vector<BraidLetter> ls;
  std::uniform_int_distribution<int> idx(1, strands - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  for (int i = 0; i < len; ++i) ls.push_back({idx(rng), sgn(rng) ? 1 : -1});
  return BraidWord(strands, std::move(ls));
}

}  // namespace

TEST_CASE("compose concatenates in functional order") {
  BraidWord s1 = BraidWord::gen(3, 1), s1i = BraidWord::gen(3, 1, -1);
  BraidWord c = compose(s1, s1i);  // applies s1^-1 first
  CHECK(c.letters().size() == 2);
  CHECK(c.letters()[0] == BraidLetter{1, -1});
  CHECK(c.letters()[1] == BraidLetter{1, +1});
  CHECK(free_reduce(c).empty());

  CHECK_THROWS_AS(compose(BraidWord::gen(3, 1), BraidWord::gen(4, 1)), std::invalid_argument);
}

TEST_CASE("invert reverses and flips") {
  BraidWord w = BraidWord::parse(4, "-2,3");
  BraidWord wi = invert(w);
  CHECK(wi.str() == "-3,2");
  CHECK(invert(BraidWord::identity(4)) == BraidWord::identity(4));
  CHECK(free_reduce(compose(w, invert(w))).empty());

  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    BraidWord r = random_word(rng, 5, t % 17);
    CHECK(invert(invert(r)) == r);
    CHECK(free_reduce(compose(r, invert(r))).empty());
  }
}

TEST_CASE("underlying permutation is a homomorphism") {
  BraidWord s1 = BraidWord::gen(2, 1);
  Perm p = underlying_permutation(s1);
  CHECK(p[0] == 1);
  CHECK(p[1] == 0);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    BraidWord a = random_word(rng, 6, 8), b = random_word(rng, 6, 8);
    CHECK(underlying_permutation(compose(a, b)) ==
          underlying_permutation(a) * underlying_permutation(b));
    CHECK(exponent_sum(compose(a, b)) == exponent_sum(a) + exponent_sum(b));
  }
}

TEST_CASE("cyclic free reduction") {
  BraidWord w = BraidWord::parse(3, "1,2,-1");
  CHECK(cyclic_free_reduce(w).str() == "2");
  CHECK(cyclic_free_reduce(BraidWord::identity(3)).empty());
  // already cyclically reduced words are fixed points
  BraidWord r = BraidWord::parse(3, "1,2");
  CHECK(cyclic_free_reduce(r) == r);
}

TEST_CASE("single stabilization destabilizes to the trivial braid") {
  auto tr = markov_destabilize_closure(BraidWord::gen(2, 1));
  CHECK(tr.terminal.strands() == 1);
  CHECK(tr.terminal.empty());
  CHECK(tr.moves.size() == 1);
}

TEST_CASE("irreducible words are fixed") {
  // index 1 appears twice and the top index twice: no greedy move applies
  BraidWord w = BraidWord::parse(3, "1,1,2,2");
  auto tr = markov_destabilize_closure(w);
  CHECK(tr.terminal == w);
  CHECK(tr.moves.empty());
}

TEST_CASE("destabilization preserves closure component count") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    BraidWord w = random_word(rng, 5, 9);
    auto tr = markov_destabilize_closure(w);
    int before = underlying_permutation(w).cycle_count();
    int after = underlying_permutation(tr.terminal).cycle_count() +
                (w.strands() - tr.terminal.strands()) * 0;
    // deleting a strand removes exactly the strand that closed through the
    // single crossing; component count of the closure is unchanged
    CHECK(before == after);
  }
}

TEST_CASE("serialization round trip") {
  BraidWord w = BraidWord::parse(6, "2,-3,5");
  CHECK(w.str() == "2,-3,5");
  CHECK(BraidWord::parse(6, w.str()) == w);
}
